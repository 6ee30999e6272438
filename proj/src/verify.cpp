#include "bh/verify.hpp"

#include "bh/besselcalc.hpp"
#include "bh/error.hpp"
#include "bh/heckeop.hpp"
#include "bh/orbitcomb.hpp"
#include "bh/rootweyl.hpp"
#include "bh/symfrac.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace bh {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Vec> grid(int n, int lo, int hi) {
  std::vector<Vec> out;
  Vec v(n, lo);
  while (true) {
    out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[k] == hi) v[k--] = lo;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

RationalFunc mono(const Vec& v, int qexp = 0) { return RationalFunc::monomial(v, qexp); }

std::string show(const RationalFunc& f) { return to_text(f, VarStyle::xi); }

// Smallest k in [0, count) with bad(k), or -1.  Exceptions count as failures.
long first_bad(long count, const std::function<bool(long)>& bad) {
  long first = count;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first)
  for (long k = 0; k < count; ++k) {
    if (k >= first) continue;
    bool b;
    try {
      b = bad(k);
    } catch (const std::exception&) {
      b = true;
    }
    if (b) first = k;
  }
  return first == count ? -1 : first;
}

struct Recorder {
  std::string suite;
  std::vector<CheckResult> out;
  Clock::time_point t0 = Clock::now();

  explicit Recorder(std::string s) : suite(std::move(s)) {}
  void add(const std::string& name, bool pass, const std::string& detail) {
    auto t1 = Clock::now();
    out.push_back({suite, name, pass, detail, std::chrono::duration<double>(t1 - t0).count()});
    t0 = t1;
  }
  void restart() { t0 = Clock::now(); }
};

// Runs `body` and turns an escaping MathError into a failed item.
void guarded(Recorder& r, const std::string& name,
             const std::function<std::pair<bool, std::string>()>& body) {
  r.restart();
  try {
    auto [ok, detail] = body();
    r.add(name, ok, detail);
  } catch (const std::exception& e) {
    r.add(name, false, std::string("error: ") + e.what());
  }
}

std::string cname(int n) { return "C" + std::to_string(n); }

// --- operator relations ------------------------------------------------

std::vector<CheckResult> suite_quadratic() {
  Recorder r{"quadratic"};
  for (int n : {2, 3}) {
    RootDatum d = build_root_datum(Family::C, n);
    auto g = grid(n, -4, 4);
    for (auto& c : HeckeChar::all()) {
      guarded(r, "quadratic " + cname(n) + " " + c.name, [&]() -> std::pair<bool, std::string> {
        RationalFunc q = RationalFunc::q_pow(1);
        auto residual = [&](long k) {
          const RationalFunc f = mono(g[k / n]);
          int i = int(k % n) + 1;
          RationalFunc t1 = dl_apply(c, d, i, f);
          RationalFunc t2 = dl_apply(c, d, i, t1);
          return t2 + (RationalFunc(1) - q) * t1 - q * f;
        };
        long bad = first_bad(long(g.size()) * n, [&](long k) { return !residual(k).is_zero(); });
        if (bad >= 0)
          return {false, "s" + std::to_string(bad % n + 1) + " on " + show(mono(g[bad / n])) +
                             ": residual " + show(residual(bad))};
        return {true, std::to_string(g.size()) + " monomials x " + std::to_string(n) +
                          " generators"};
      });
    }
  }
  return r.out;
}

int braid_m(int n, int i, int j) {
  if (j - i >= 2) return 2;
  return j == n ? 4 : 3;
}

std::vector<int> alternating(int a, int b, int m) {
  std::vector<int> w;
  for (int k = 0; k < m; ++k) w.push_back(k % 2 ? b : a);
  return w;
}

std::string word_str(const std::vector<int>& w) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) s += (k ? "-" : "") + std::to_string(w[k]);
  return s.empty() ? "e" : s;
}

std::vector<CheckResult> suite_braid() {
  Recorder r{"braid"};
  for (int n : {2, 3}) {
    RootDatum d = build_root_datum(Family::C, n);
    auto g = grid(n, -4, 4);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rels;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int m = braid_m(n, i, j);
        rels.emplace_back(alternating(i, j, m), alternating(j, i, m));
      }
    for (auto& c : HeckeChar::all()) {
      guarded(r, "braid " + cname(n) + " " + c.name, [&]() -> std::pair<bool, std::string> {
        long R = long(rels.size());
        auto diff = [&](long k) {
          auto& [w1, w2] = rels[k % R];
          RationalFunc f = mono(g[k / R]);
          return word_apply(c, d, w1, f, false) - word_apply(c, d, w2, f, false);
        };
        long bad = first_bad(long(g.size()) * R, [&](long k) { return !diff(k).is_zero(); });
        if (bad >= 0) {
          auto& [w1, w2] = rels[bad % R];
          return {false, word_str(w1) + " vs " + word_str(w2) + " on " + show(mono(g[bad / R])) +
                             ": difference " + show(diff(bad))};
        }
        return {true, std::to_string(rels.size()) + " relations on " + std::to_string(g.size()) +
                          " monomials"};
      });
    }
  }
  return r.out;
}

std::vector<Vec> bernstein_mus(const RootDatum& d) {
  std::vector<Vec> mus;
  for (int k = 0; k < d.n; ++k)
    for (int s : {2, -2}) {
      Vec v(d.n, 0);
      v[k] = s;
      mus.push_back(v);
    }
  for (int i = 1; i <= d.n; ++i) mus.push_back(d.simple(i).xi);
  mus.push_back(Vec(d.n, 0));
  return mus;
}

std::vector<CheckResult> suite_bernstein() {
  Recorder r{"bernstein"};
  for (int n : {2, 3}) {
    RootDatum d = build_root_datum(Family::C, n);
    auto g = grid(n, -4, 4);
    auto mus = bernstein_mus(d);
    for (auto& c : HeckeChar::all()) {
      guarded(r, "bernstein " + cname(n) + " " + c.name, [&]() -> std::pair<bool, std::string> {
        long M = long(mus.size()), per = M * n;
        auto res = [&](long k) {
          long rest = k % per;
          return bernstein_residual(d, c, int(rest % n) + 1, mus[rest / n], mono(g[k / per]));
        };
        long bad = first_bad(long(g.size()) * per, [&](long k) { return !res(k).is_zero(); });
        if (bad >= 0) {
          long rest = bad % per;
          return {false, "s" + std::to_string(rest % n + 1) + ", mu = " +
                             show(mono(mus[rest / n])) + ", f = " + show(mono(g[bad / per])) +
                             ": residual " + show(res(bad))};
        }
        return {true, std::to_string(mus.size()) + " mu x " + std::to_string(g.size()) +
                          " monomials x " + std::to_string(n) + " generators"};
      });
    }
  }
  return r.out;
}

std::vector<CheckResult> suite_intertwiner() {
  Recorder r{"intertwiner"};
  for (int n : {2, 3}) {
    RootDatum d = build_root_datum(Family::C, n);
    auto g = grid(n, -4, 4);
    guarded(r, "intertwiner constants " + cname(n), [&]() -> std::pair<bool, std::string> {
      auto diff = [&](long k) {
        int i = int(k % n) + 1;
        RationalFunc f = mono(g[k / n]);
        return intertwiner_closed(d, i, f) - dl_apply(HeckeChar::eps(), d, i, f);
      };
      long bad = first_bad(long(g.size()) * n, [&](long k) { return !diff(k).is_zero(); });
      if (bad >= 0)
        return {false, "s" + std::to_string(bad % n + 1) + " on " + show(mono(g[bad / n])) +
                           ": difference " + show(diff(bad))};
      return {true, std::to_string(g.size()) + " monomials"};
    });
    guarded(r, "intertwiner linearity " + cname(n), [&]() -> std::pair<bool, std::string> {
      auto small = grid(n, -2, 2);
      auto mus = bernstein_mus(d);
      long M = long(mus.size()), per = M * n;
      auto diff = [&](long k) {
        long rest = k % per;
        int i = int(rest % n) + 1;
        const Vec& mu = mus[rest / n];
        Vec smu = act(simple_reflection(d, i), mu);
        Vec inv(n);
        for (int t = 0; t < n; ++t) inv[t] = mu[t] + smu[t];
        RationalFunc f = mono(small[k / per]);
        for (auto& c : HeckeChar::all()) {
          RationalFunc lhs = intertwiner_apply(c, d, i, mono(inv) * f);
          RationalFunc rhs = mono(inv) * intertwiner_apply(c, d, i, f);
          if (!(lhs - rhs).is_zero()) return false;
        }
        return true;
      };
      long bad = first_bad(long(small.size()) * per, [&](long k) { return !diff(k); });
      if (bad >= 0) return {false, "fails at index " + std::to_string(bad)};
      return {true, std::to_string(small.size()) + " monomials, all characters"};
    });
  }
  return r.out;
}

std::vector<CheckResult> suite_conjugation() {
  Recorder r{"conjugation"};
  for (int n : {2, 3}) {
    RootDatum d = build_root_datum(Family::C, n);
    auto g = grid(n, -2, 2);
    for (bool is_long : {false, true}) {
      std::vector<int> simples;
      for (int i = 1; i <= n; ++i)
        if (d.simple(i).is_long == is_long) simples.push_back(i);
      std::string cls = is_long ? "long" : "short";
      guarded(r, "displayed formula " + cname(n) + " " + cls,
              [&]() -> std::pair<bool, std::string> {
                long S = long(simples.size());
                auto diff = [&](long k, bool swap) {
                  int i = simples[k % S];
                  RationalFunc f = mono(g[k / S]);
                  return tconj_display(d, i, f, swap) - tconj_apply(HeckeChar::eps(), d, i, f);
                };
                long count = long(g.size()) * S;
                long bad = first_bad(count, [&](long k) { return !diff(k, false).is_zero(); });
                if (bad < 0) return {true, std::to_string(count) + " cases"};
                int i = simples[bad % S];
                RationalFunc f = mono(g[bad / S]);
                std::string msg = "s" + std::to_string(i) + " on " + show(f) + ": display gives " +
                                  show(tconj_display(d, i, f)) + ", conjugated operator gives " +
                                  show(tconj_apply(HeckeChar::eps(), d, i, f));
                long bad_sw = first_bad(count, [&](long k) { return !diff(k, true).is_zero(); });
                msg += bad_sw < 0 ? "; the other case's display matches on all " +
                                        std::to_string(count) + " cases (labels swapped)"
                                  : "; the other case's display does not match either";
                return {false, msg};
              });
    }
    guarded(r, "eigenvalues " + cname(n), [&]() -> std::pair<bool, std::string> {
      for (auto& c : HeckeChar::all())
        for (int i = 1; i <= n; ++i) {
          RationalFunc e = char_value(c, d, i);
          if (dl_apply(c, d, i, RationalFunc(1)) != e)
            return {false, c.name + ": T_" + std::to_string(i) + "(1) != eigenvalue"};
          RationalFunc v = mono(rho_char(c, d));
          if (tconj_apply(c, d, i, v) != e * v)
            return {false, c.name + ": conjugated T_" + std::to_string(i) + " on pi^rho_c"};
        }
      return {true, "T_s(1) and conjugated T_s(pi^rho_c), all characters"};
    });
  }
  return r.out;
}

std::vector<CheckResult> suite_denominator() {
  Recorder r{"denominator"};
  std::vector<std::pair<Family, int>> types = {{Family::C, 2}, {Family::C, 3}, {Family::D, 3}};
  for (auto [fam, n] : types) {
    RootDatum d = build_root_datum(fam, n);
    guarded(r, "denominator " + d.name(), [&]() -> std::pair<bool, std::string> {
      WeylGroup G = enumerate_weyl(d);
      RationalFunc a = alternator(G, mono(d.rho));
      RationalFunc w = weyl_denominator(d);
      if (!equals_exact(a, w)) return {false, "A(pi^rho) = " + show(a) + ", product = " + show(w)};
      for (int i = 1; i <= n; ++i)
        if (!equals_exact(w.act(simple_reflection(d, i)), -w))
          return {false, "not antisymmetric under s" + std::to_string(i)};
      return {true, std::to_string(a.num().size()) + " terms"};
    });
  }
  return r.out;
}

// --- alternator identities ---------------------------------------------

std::vector<CheckResult> suite_alternator_identity() {
  Recorder r{"alternator-identity"};
  std::vector<OmegaReading> all = {OmegaReading::R1, OmegaReading::R2, OmegaReading::R3};
  OmegaSelection sel;
  guarded(r, "Omega reading selection", [&]() -> std::pair<bool, std::string> {
    sel = disambiguate_omega({2, 3}, all);
    std::string s;
    for (auto& t : sel.trials)
      s += reading_name(t.reading) + "@" + cname(t.rank) + (t.ok ? ":ok " : ":fails(" + t.failed_on + ") ");
    s += "survivors:";
    for (auto x : sel.survivors) s += " " + reading_name(x);
    return {sel.unique(), s};
  });
  if (!sel.unique()) return r.out;
  OmegaReading rd = sel.survivors.front();
  for (int n : {2, 3}) {
    WeylGroup G = enumerate_weyl(build_root_datum(Family::C, n));
    auto mons = identity_test_monomials(G.datum);
    for (auto& c : HeckeChar::all()) {
      guarded(r, "sum = deformed alternator " + cname(n) + " " + c.name,
              [&]() -> std::pair<bool, std::string> {
                for (auto& m : mons) {
                  RationalFunc lhs = hecke_sum(c, G, mono(m), true);
                  RationalFunc rhs = deformed_alternator(c, G, mono(m), rd);
                  if (!equals_exact(lhs, rhs))
                    return {false, "f = " + show(mono(m)) + ": sum " + show(lhs) +
                                       ", alternator " + show(rhs)};
                }
                return {true, std::to_string(mons.size()) + " monomials, |W| = " +
                                  std::to_string(G.elts.size()) + ", reading " + reading_name(rd)};
              });
    }
  }
  return r.out;
}

std::vector<CheckResult> suite_spherical() {
  Recorder r{"spherical-crosscheck"};
  std::vector<Vec> lams = {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {0, 0, 0}, {1, 0, 0}, {1, 1, 1}};
  for (auto& lam : lams) {
    int n = int(lam.size());
    std::string ls;
    for (size_t k = 0; k < lam.size(); ++k) ls += (k ? "," : "") + std::to_string(lam[k]);
    guarded(r, "closed = sum " + cname(n) + " lambda=(" + ls + ")",
            [&]() -> std::pair<bool, std::string> {
              SphericalQuery sq{n, lam};
              OmegaReading rd = selected_reading();
              RationalFunc closed = spherical_closed(sq, rd);
              RationalFunc sum = spherical_sum(sq);
              bool ok = equals_exact(closed, sum);
              std::string note = "reading " + reading_name(rd);
              if (rd != OmegaReading::R1) {
                RationalFunc lit = spherical_closed(sq, OmegaReading::R1);
                note += equals_exact(lit, sum)    ? "; literal normalizer agrees"
                        : equals_exact(lit, -sum) ? "; literal normalizer gives -1 times the sum"
                                                  : "; literal normalizer differs";
              }
              if (!ok) return {false, note + "; closed " + show(closed) + ", sum " + show(sum)};
              return {true, note};
            });
  }
  return r.out;
}

std::vector<CheckResult> suite_iwahori() {
  Recorder r{"iwahori"};
  for (int n : {2, 3}) {
    RootDatum d = build_root_datum(Family::C, n);
    WeylGroup G = enumerate_weyl(d);
    RationalFunc v = mono(d.rho_eps);
    Vec zero(n, 0);
    guarded(r, "iwahori lambda=0 " + cname(n), [&]() -> std::pair<bool, std::string> {
      for (auto& w : G.elts) {
        RationalFunc got = iwahori_value(d, zero, w);
        RationalFunc want = char_value(HeckeChar::eps(), d, w.word) * v;
        if (got != want)
          return {false, "w = " + word_str(w.word) + ": " + show(got) + ", expected " + show(want)};
      }
      return {true, std::to_string(G.elts.size()) + " elements"};
    });
    guarded(r, "iwahori generators " + cname(n), [&]() -> std::pair<bool, std::string> {
      if (iwahori_value(d, zero, G.elts.front()) != v) return {false, "identity value"};
      for (int i = 1; i <= n; ++i) {
        const WeylElt& s = G.elts[G.index_of(simple_reflection(d, i))];
        RationalFunc want = (i < n ? RationalFunc::q_pow(1) : RationalFunc(-1)) * v;
        RationalFunc got = iwahori_value(d, zero, s);
        if (got != want) return {false, "s" + std::to_string(i) + ": " + show(got)};
      }
      return {true, "1 -> pi^rho_eps, s_i -> q pi^rho_eps (i<n), s_n -> -pi^rho_eps"};
    });
    guarded(r, "iwahori nonzero lambda=e1 " + cname(n), [&]() -> std::pair<bool, std::string> {
      Vec lam(n, 0);
      lam[0] = 1;
      for (auto& w : G.elts)
        if (iwahori_value(d, lam, w).is_zero()) return {false, "w = " + word_str(w.word)};
      return {true, std::to_string(G.elts.size()) + " nonzero values"};
    });
  }
  return r.out;
}

std::vector<CheckResult> suite_shalika_wo() {
  Recorder r{"shalika-wo"};
  RationalFunc x1 = mono({2, 0}), x2 = mono({0, 2}), qi = RationalFunc::q_pow(-1);
  RationalFunc one(1);
  RationalFunc N_shown = -(qi + one) * (qi * x2 - x1) * (x1 * x2 - qi) / (x1 * x1 * x2);
  RationalFunc laurent = x1 + x2 - one + one / x2 + one / x1 - qi;

  guarded(r, "normalizer N", [&]() -> std::pair<bool, std::string> {
    RationalFunc N = sigma_normalizer();
    return {equals_exact(N, N_shown), show(N)};
  });
  guarded(r, "unnormalized value (1,0)", [&]() -> std::pair<bool, std::string> {
    RationalFunc u = shalika_sigma_unnormalized({1, 0});
    RationalFunc want = N_shown *
                        (x1 * x1 * x2 + x1 * x2 * x2 - qi * x1 * x2 - x1 * x2 + x1 + x2) /
                        (x1 * x2);
    if (equals_exact(u, want)) return {true, show(u)};
    return {false, "computed N times (" + to_text(u / N_shown) + ")"};
  });
  guarded(r, "sigma value (1,0) = " + to_text(laurent), [&]() -> std::pair<bool, std::string> {
    RationalFunc s = shalika_sigma_value({1, 0});
    if (equals_exact(s, laurent)) return {true, to_text(s)};
    return {false, "computed " + to_text(s) + "; difference " + to_text(s - laurent)};
  });
  guarded(r, "sigma value (1,0) = WO value (1,0,0)", [&]() -> std::pair<bool, std::string> {
    RationalFunc s = shalika_sigma_value({1, 0});
    RationalFunc w = wo_value({1, 0, 0});
    std::string d3;
    try {
      RationalFunc wd = wo_value({1, 0, 0}, {WoGroup::D3, false});
      d3 = "; over W(D3) at z3=1: " + to_text(wd);
    } catch (const MathError& e) {
      d3 = std::string("; over W(D3): ") + e.what();
    }
    if (equals_exact(s, w)) return {true, "W(C2): " + to_text(w) + d3};
    return {false, "sigma " + to_text(s) + ", WO " + to_text(w) + d3};
  });
  guarded(r, "lambda = 0 values", [&]() -> std::pair<bool, std::string> {
    RationalFunc s = shalika_sigma_value({0, 0}), w = wo_value({0, 0, 0});
    return {s == one && w == one, "sigma " + to_text(s) + ", WO " + to_text(w)};
  });
  return r.out;
}

std::vector<CheckResult> suite_dual() {
  Recorder r{"dual-parameters"};
  for (Vec lam : std::vector<Vec>{{0, 0}, {1, 0}, {1, 1}, {2, 1}}) {
    guarded(r, "dual parameters lambda=(" + std::to_string(lam[0]) + "," + std::to_string(lam[1]) + ")",
            [&]() -> std::pair<bool, std::string> {
              DualComparison c = dual_parameter_check(lam);
              return {c.ratio_is_monomial, "ratio " + to_text(c.ratio, VarStyle::xi)};
            });
  }
  return r.out;
}

// --- orbits ------------------------------------------------------------

std::string plist(const std::vector<Partition>& ps) {
  std::string s = "{";
  for (size_t k = 0; k < ps.size(); ++k) s += (k ? " " : "") + ps[k].str();
  return s + "}";
}

std::vector<Partition> parts_of(const std::vector<OrbitLabel>& os) {
  std::vector<Partition> v;
  for (auto& o : os) v.push_back(o.p);
  return v;
}

std::vector<Partition> P(std::initializer_list<std::vector<int>> l) {
  std::vector<Partition> v;
  for (auto& x : l) v.push_back(make_partition(x));
  return v;
}

std::pair<bool, std::string> same(const std::vector<Partition>& got,
                                  const std::vector<Partition>& want) {
  auto a = got, b = want;
  auto key = [](const Partition& x, const Partition& y) { return x.parts > y.parts; };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  return {a == b, plist(got) + (a == b ? "" : ", expected " + plist(want))};
}

Algebra alg_for(int N) { return N % 2 ? Algebra::B : Algebra::C; }

std::vector<CheckResult> suite_collapse() {
  Recorder r{"collapse-oracle"};
  guarded(r, "greedy collapse = dominance maximum, N <= 12", [&]() -> std::pair<bool, std::string> {
    int count = 0;
    for (int N = 1; N <= 12; ++N) {
      Algebra a = alg_for(N);
      for (auto& p : partitions_of(N)) {
        Partition g = collapse(a, p), b = collapse_bruteforce(a, p);
        if (g != b)
          return {false, std::string(a == Algebra::B ? "B" : "C") + "-collapse of " + p.str() +
                             ": greedy " + g.str() + ", maximum " + b.str()};
        ++count;
      }
    }
    return {true, std::to_string(count) + " partitions"};
  });
  guarded(r, "orbit counts = brute-force filter, N <= 12", [&]() -> std::pair<bool, std::string> {
    for (int N = 1; N <= 12; ++N) {
      Algebra a = alg_for(N);
      size_t want = 0;
      for (auto& p : partitions_of(N)) want += is_valid(a, p);
      auto os = enumerate_orbits(a, N);
      if (os.size() != want) return {false, "N = " + std::to_string(N)};
      for (size_t k = 0; k + 1 < os.size(); ++k)
        if (dominance_leq(os[k].p, os[k + 1].p) && os[k].p != os[k + 1].p)
          return {false, "order at N = " + std::to_string(N)};
    }
    return {true, ""};
  });
  guarded(r, "transpose reverses dominance, N <= 10", [&]() -> std::pair<bool, std::string> {
    for (int N = 1; N <= 10; ++N) {
      auto ps = partitions_of(N);
      for (auto& p : ps) {
        if (transpose(transpose(p)) != p) return {false, "involution fails at " + p.str()};
        for (auto& q : ps)
          if (dominance_leq(p, q) != dominance_leq(transpose(q), transpose(p)))
            return {false, p.str() + " vs " + q.str()};
      }
    }
    return {true, ""};
  });
  return r.out;
}

std::vector<CheckResult> suite_special_tables() {
  Recorder r{"special-tables"};
  guarded(r, "orbits of sp(4)", [&] {
    return same(parts_of(enumerate_orbits(Algebra::C, 4)), P({{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  });
  guarded(r, "specials of sp(4)", [&] {
    return same(parts_of(special_orbits(Algebra::C, 4)), P({{4}, {2, 2}, {1, 1, 1, 1}}));
  });
  guarded(r, "specials of sp(6)", [&] {
    return same(parts_of(special_orbits(Algebra::C, 6)),
                P({{6}, {4, 2}, {3, 3}, {2, 2, 2}, {2, 2, 1, 1}, {1, 1, 1, 1, 1, 1}}));
  });
  guarded(r, "specials of so(7)", [&] {
    return same(parts_of(special_orbits(Algebra::B, 7)),
                P({{7}, {5, 1, 1}, {3, 3, 1}, {3, 2, 2}, {3, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1}}));
  });
  guarded(r, "C-collapse [3,1] = [2,2]", [&]() -> std::pair<bool, std::string> {
    Partition c = collapse(Algebra::C, make_partition({3, 1}));
    return {c == make_partition({2, 2}), c.str()};
  });
  guarded(r, "B-collapse [3,2] = [3,1,1]", [&]() -> std::pair<bool, std::string> {
    Partition c = collapse(Algebra::B, make_partition({3, 2}));
    return {c == make_partition({3, 1, 1}), c.str()};
  });
  guarded(r, "component groups [2,2] -> 1, [4] -> 0", [&]() -> std::pair<bool, std::string> {
    int a = component_group(make_orbit(Algebra::C, make_partition({2, 2})));
    int b = component_group(make_orbit(Algebra::C, make_partition({4})));
    return {a == 1 && b == 0, std::to_string(a) + ", " + std::to_string(b)};
  });
  guarded(r, "matching sp(6) / so(7)", [&]() -> std::pair<bool, std::string> {
    auto m = beta_match(special_orbits(Algebra::C, 6), special_orbits(Algebra::B, 7));
    auto g = P({{6}, {4, 2}, {3, 3}, {2, 2, 2}, {2, 2, 1, 1}, {1, 1, 1, 1, 1, 1}});
    auto l = P({{7}, {5, 1, 1}, {3, 3, 1}, {3, 2, 2}, {3, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1}});
    std::string s;
    bool ok = m.size() == g.size();
    for (size_t k = 0; k < m.size(); ++k) {
      s += m[k].first.str() + "<->" + m[k].second.str() + " ";
      ok = ok && m[k].first == g[k] && m[k].second == l[k];
    }
    return {ok, s};
  });

  SpringerFixture fx = load_fixture(default_fixture_path());
  struct Case {
    std::string chr;
    int n;
    std::vector<int> want;
  };
  std::vector<Case> cases = {{"eps", 2, {2, 2}},         {"eps", 3, {2, 2, 2}},
                             {"triv", 2, {1, 1, 1, 1}}, {"triv", 3, {1, 1, 1, 1, 1, 1}},
                             {"sign", 2, {4}},          {"sign", 3, {6}}};
  for (auto& c : cases) {
    guarded(r, "pipeline " + c.chr + " n=" + std::to_string(c.n),
            [&]() -> std::pair<bool, std::string> {
              PipelineTrace t = conjecture_pipeline(HeckeChar::by_name(c.chr), c.n, fx);
              std::string s = t.springer.str() + " -> " + t.dual.str() + " -> " + t.result.str();
              return {t.result == make_partition(c.want), s};
            });
  }
  for (int n : {2, 3}) {
    guarded(r, "pipeline sigma n=" + std::to_string(n) + " errors",
            [&]() -> std::pair<bool, std::string> {
              try {
                PipelineTrace t = conjecture_pipeline(HeckeChar::sigma(), n, fx);
                return {false, "returned " + t.result.str()};
              } catch (const MathError& e) {
                return {true, e.what()};
              }
            });
  }
  return r.out;
}

std::vector<CheckResult> suite_duality() {
  Recorder r{"duality-involution"};
  guarded(r, "duality on specials, N <= 9", [&]() -> std::pair<bool, std::string> {
    int checked = 0;
    for (int N = 2; N <= 9; ++N) {
      Algebra a = alg_for(N);
      auto sp = special_orbits(a, N);
      for (auto& o : sp) {
        OrbitLabel d = ls_dual(o);
        if (!is_special(d)) return {false, o.p.str() + " maps to non-special " + d.p.str()};
        if (ls_dual(d).p != o.p) return {false, "not an involution at " + o.p.str()};
        for (auto& o2 : sp)
          if (dominance_leq(o.p, o2.p) && !dominance_leq(ls_dual(o2).p, d.p))
            return {false, "not order-reversing: " + o.p.str() + " <= " + o2.p.str()};
        ++checked;
      }
    }
    return {true, std::to_string(checked) + " special orbits"};
  });
  guarded(r, "special iff fixed by the double dual, N <= 9", [&]() -> std::pair<bool, std::string> {
    for (int N = 2; N <= 9; ++N)
      for (auto& o : enumerate_orbits(alg_for(N), N))
        if (is_special(o) != (ls_dual(ls_dual(o)).p == o.p))
          return {false, o.p.str()};
    return {true, ""};
  });
  return r.out;
}

using SuiteFn = std::vector<CheckResult> (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"quadratic", suite_quadratic},
      {"braid", suite_braid},
      {"bernstein", suite_bernstein},
      {"conjugation", suite_conjugation},
      {"intertwiner", suite_intertwiner},
      {"alternator-identity", suite_alternator_identity},
      {"spherical-crosscheck", suite_spherical},
      {"iwahori", suite_iwahori},
      {"shalika-wo", suite_shalika_wo},
      {"denominator", suite_denominator},
      {"dual-parameters", suite_dual},
      {"collapse-oracle", suite_collapse},
      {"special-tables", suite_special_tables},
      {"duality-involution", suite_duality},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (auto& n : suite_names())
    if (n == name) return true;
  return false;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  std::vector<CheckResult> out;
  for (auto& [n, f] : registry())
    if (name == "all" || name == n) {
      auto part = f();
      out.insert(out.end(), part.begin(), part.end());
      if (name != "all") return out;
    }
  if (name != "all") throw MathError("usage", "unknown suite '" + name + "'");
  return out;
}

}  // namespace bh
