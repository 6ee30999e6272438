#include "bh/besselcalc.hpp"

#include "bh/error.hpp"

#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bh {

namespace {

Vec neg(Vec v) {
  for (auto& x : v) x = -x;
  return v;
}

Vec add(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec scale(Vec a, int k) {
  for (auto& x : a) x *= k;
  return a;
}

RationalFunc mono(const Vec& v, int qexp = 0) { return RationalFunc::monomial(v, qexp); }

// 1 - q^k pi^v
Poly one_minus(const Vec& v, int qexp) {
  return Poly(1) - Poly::term(exp_of(v, qexp));
}

// f / (m * prod factors), trying exact division factor by factor first.
RationalFunc divide_by_product(const RationalFunc& f, const Vec& mono_exp,
                               const std::vector<Poly>& factors) {
  RationalFunc g = f.shifted(exp_neg(exp_of(mono_exp)));
  Poly rest(1);
  Poly num = g.num();
  for (auto& p : factors) {
    if (auto q = num.divide(p))
      num = std::move(*q);
    else
      rest = rest * p;
  }
  RationalFunc out = RationalFunc::fraction(num, g.den());
  if (!rest.is_one()) out = out / RationalFunc(rest);
  return out;
}

RationalFunc linear_sum(const std::vector<RationalFunc>& parts) {
  bool polys = true;
  for (auto& p : parts) polys = polys && p.is_poly();
  if (polys) {
    PolyBuilder b;
    for (auto& p : parts) b.add(p.num());
    return RationalFunc(b.build());
  }
  RationalFunc s;
  for (auto& p : parts) s += p;
  return s;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

// --- alternator ----------------------------------------------------------

RationalFunc alternator(const WeylGroup& G, const RationalFunc& f, Exec ex) {
  const auto& E = G.elts;
  if (ex == Exec::serial) {
    std::vector<RationalFunc> parts;
    parts.reserve(E.size());
    for (auto& w : E) parts.push_back(w.sign() > 0 ? f.act(w.g) : -f.act(w.g));
    return linear_sum(parts);
  }
  std::vector<RationalFunc> parts(E.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < long(E.size()); ++k) {
    RationalFunc v = f.act(E[k].g);
    parts[k] = E[k].sign() > 0 ? v : -v;
  }
  // chunked reduction; exact, so the grouping does not matter
  int T = std::max(1, thread_count());
  std::vector<RationalFunc> partial(T);
  long n = long(parts.size());
#pragma omp parallel for schedule(static)
  for (int t = 0; t < T; ++t) {
    long lo = n * t / T, hi = n * (t + 1) / T;
    std::vector<RationalFunc> chunk(parts.begin() + lo, parts.begin() + hi);
    partial[t] = linear_sum(chunk);
  }
  return linear_sum(partial);
}

RationalFunc weyl_denominator(const RootDatum& d) {
  Poly p = Poly::term(exp_of(d.rho));
  for (auto& a : d.positive) p = p * one_minus(neg(a.xi), 0);
  return RationalFunc(p);
}

std::string reading_name(OmegaReading r) {
  switch (r) {
    case OmegaReading::R1: return "R1";
    case OmegaReading::R2: return "R2";
    case OmegaReading::R3: return "R3";
  }
  return "?";
}

std::optional<OmegaReading> reading_by_name(const std::string& s) {
  if (s == "R1") return OmegaReading::R1;
  if (s == "R2") return OmegaReading::R2;
  if (s == "R3") return OmegaReading::R3;
  return std::nullopt;
}

RationalFunc omega_apply(const WeylGroup& G, const RationalFunc& f, OmegaReading r, Exec ex) {
  const RootDatum& d = G.datum;
  std::vector<Poly> fac;
  switch (r) {
    case OmegaReading::R1: {
      RationalFunc a = alternator(G, f.shifted(exp_of(neg(d.rho))), ex);
      for (auto& c : d.positive) fac.push_back(one_minus(neg(c.xi), 0));
      return divide_by_product(a, d.rho, fac);
    }
    case OmegaReading::R2: {
      RationalFunc a = alternator(G, f.shifted(exp_of(d.rho)), ex);
      for (auto& c : d.positive) fac.push_back(one_minus(neg(c.xi), 0));
      return divide_by_product(a, d.rho, fac);
    }
    case OmegaReading::R3: {
      // A(pi^{-rho}) = pi^{-rho} prod (1 - pi^{alpha})
      RationalFunc a = alternator(G, f.shifted(exp_of(neg(d.rho))), ex);
      for (auto& c : d.positive) fac.push_back(one_minus(c.xi, 0));
      return divide_by_product(a, neg(d.rho), fac);
    }
  }
  throw MathError("internal", "bad reading");
}

// --- Hecke sums ----------------------------------------------------------

RationalFunc hecke_sum(const HeckeChar& c, const WeylGroup& G, const RationalFunc& f,
                       bool conjugated, Exec ex) {
  const RootDatum& d = G.datum;
  const auto& E = G.elts;
  Exp shift = exp_of(conjugated ? rho_char(c, d) : Vec(d.n, 0));
  RationalFunc g = f.shifted(exp_neg(shift));

  if (ex == Exec::serial) {
    std::vector<RationalFunc> parts;
    parts.reserve(E.size());
    for (auto& w : E) {
      RationalFunc h = g;
      for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) h = dl_apply(c, d, *it, h);
      parts.push_back(std::move(h));
    }
    return linear_sum(parts).shifted(shift);
  }

  std::vector<RationalFunc> val(E.size());
  val[0] = g;
  size_t lo = 1;
  while (lo < E.size()) {
    size_t hi = lo;
    while (hi < E.size() && E[hi].length == E[lo].length) ++hi;
#pragma omp parallel for schedule(dynamic)
    for (long k = long(lo); k < long(hi); ++k)
      val[k] = dl_apply(c, d, E[k].word.front(), val[E[k].parent]);
    lo = hi;
  }
  return linear_sum(val).shifted(shift);
}

RationalFunc deformed_alternator(const HeckeChar& c, const WeylGroup& G, const RationalFunc& f,
                                 OmegaReading r, Exec ex) {
  const RootDatum& d = G.datum;
  Poly left(1), right(1);
  for (auto& a : d.positive) {
    Poly b = one_minus(a.xi, 1);
    if (c.eig_for(a.is_long) == Eig::MinusOne)
      left = left * b;
    else
      right = right * b;
  }
  return RationalFunc(left) * omega_apply(G, RationalFunc(right) * f, r, ex);
}

std::vector<Vec> identity_test_monomials(const RootDatum& d) {
  std::vector<Vec> out;
  int n = d.n;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec v(n, 0);
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) v[k] = 2;
    out.push_back(v);
    out.push_back(add(v, scale(d.rho_eps, 2)));
  }
  return out;
}

OmegaSelection disambiguate_omega(const std::vector<int>& ranks,
                                  const std::vector<OmegaReading>& readings) {
  OmegaSelection sel;
  HeckeChar eps = HeckeChar::eps();
  std::vector<bool> alive(readings.size(), true);
  for (int n : ranks) {
    WeylGroup G = enumerate_weyl(build_root_datum(Family::C, n));
    auto mons = identity_test_monomials(G.datum);
    std::vector<RationalFunc> lhs;
    for (auto& m : mons) lhs.push_back(hecke_sum(eps, G, mono(m), true));
    for (size_t r = 0; r < readings.size(); ++r) {
      OmegaTrial t{readings[r], n, true, ""};
      for (size_t k = 0; k < mons.size() && t.ok; ++k) {
        RationalFunc rhs = deformed_alternator(eps, G, mono(mons[k]), readings[r]);
        if (!equals_exact(lhs[k], rhs)) {
          t.ok = false;
          t.failed_on = to_text(mono(mons[k]), VarStyle::xi);
        }
      }
      alive[r] = alive[r] && t.ok;
      sel.trials.push_back(t);
    }
  }
  for (size_t r = 0; r < readings.size(); ++r)
    if (alive[r]) sel.survivors.push_back(readings[r]);
  return sel;
}

OmegaReading selected_reading() {
  static std::once_flag once;
  static OmegaReading chosen = OmegaReading::R3;
  std::call_once(once, [] {
    auto s = disambiguate_omega({2, 3}, {OmegaReading::R1, OmegaReading::R2, OmegaReading::R3});
    if (!s.unique()) throw MathError("omega", "no unique Omega reading satisfies the identity");
    chosen = s.survivors.front();
  });
  return chosen;
}

// --- spherical ---------------------------------------------------------

void check_dominant(const Vec& lambda, int rank) {
  if (int(lambda.size()) != rank)
    throw MathError("dominance", "lambda has " + std::to_string(lambda.size()) +
                                     " entries, rank is " + std::to_string(rank));
  for (int i = 0; i < rank; ++i) {
    if (lambda[i] < 0) throw MathError("dominance", "lambda must be non-negative");
    if (i + 1 < rank && lambda[i] < lambda[i + 1])
      throw MathError("dominance", "lambda must be weakly decreasing");
  }
}

RationalFunc coset_measure(const RootDatum& d, const Vec& lambda) {
  check_dominant(lambda, d.n);
  int s = 0;
  for (auto& a : d.positive) {
    int dot = 0;
    for (int k = 0; k < d.n; ++k) dot += lambda[k] * a.xi[k];
    // xi-exponent of a coroot is 2 alpha^vee; the root is alpha^vee for
    // short classes (and in type D), 2 alpha^vee for long ones
    s += a.is_long ? dot : dot / 2;
  }
  return RationalFunc::q_pow(s);
}

RationalFunc spherical_closed(const SphericalQuery& q, OmegaReading r) {
  if (q.chr.name != "eps") throw MathError("char", "closed form is stated for eps only");
  RootDatum d = build_root_datum(Family::C, q.rank);
  check_dominant(q.lambda, q.rank);
  WeylGroup G = enumerate_weyl(d);
  RationalFunc f = mono(add(scale(q.lambda, 2), scale(d.rho_eps, 2)));
  RationalFunc v = deformed_alternator(q.chr, G, f, r).shifted(exp_of(neg(d.rho_eps)));
  if (q.norm == Normalization::measure_normalized) v = v / coset_measure(d, q.lambda);
  return v;
}

RationalFunc spherical_sum(const SphericalQuery& q, Exec ex) {
  RootDatum d = build_root_datum(Family::C, q.rank);
  check_dominant(q.lambda, q.rank);
  WeylGroup G = enumerate_weyl(d);
  RationalFunc f = mono(add(scale(q.lambda, 2), scale(d.rho_eps, 2)));
  RationalFunc v = hecke_sum(q.chr, G, f, true, ex).shifted(exp_of(neg(d.rho_eps)));
  if (q.norm == Normalization::measure_normalized) v = v / coset_measure(d, q.lambda);
  return v;
}

RationalFunc iwahori_value(const RootDatum& d, const Vec& lambda, const WeylElt& w) {
  check_dominant(lambda, d.n);
  RationalFunc f = mono(add(scale(lambda, 2), d.rho_eps));
  return word_apply(HeckeChar::eps(), d, w.word, f, true) / coset_measure(d, lambda);
}

// --- sigma / WO --------------------------------------------------------

namespace {

const WeylGroup& c2_group() {
  static const WeylGroup G = enumerate_weyl(build_root_datum(Family::C, 2));
  return G;
}

}  // namespace

RationalFunc sigma_normalizer() {
  return deformed_alternator(HeckeChar::sigma(), c2_group(), RationalFunc(1), selected_reading())
      .invert_all();
}

RationalFunc shalika_sigma_unnormalized(const Vec& lambda) {
  check_dominant(lambda, 2);
  RationalFunc f = mono(neg(scale(lambda, 2)));
  return deformed_alternator(HeckeChar::sigma(), c2_group(), f, selected_reading()).invert_all();
}

RationalFunc shalika_sigma_value(const Vec& lambda) {
  RationalFunc N = sigma_normalizer();
  if (N.is_zero()) throw MathError("normalizer", "N vanishes");
  return shalika_sigma_unnormalized(lambda) / N;
}

RationalFunc wo_character(WoGroup g) {
  if (g == WoGroup::C2) {
    const WeylGroup& G = c2_group();
    Vec rho = G.datum.rho;
    return alternator(G, mono(add(rho, {2, 0}))) / alternator(G, mono(rho));
  }
  static const WeylGroup D = enumerate_weyl(build_root_datum(Family::D, 3));
  Vec rho = D.datum.rho;
  RationalFunc r = alternator(D, mono(add(rho, {2, 0, 0}))) / alternator(D, mono(rho));
  return r.substitute_one(3);
}

RationalFunc wo_value(const Vec& lambda, const WoOptions& opt) {
  if (lambda.empty() || lambda.size() > 3) throw MathError("dominance", "lambda must be (l1, 0[, 0])");
  for (size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] != 0) throw MathError("dominance", "only lambda = (l1, 0, 0) is covered");
  if (lambda[0] < 0) throw MathError("dominance", "l1 must be non-negative");
  int l1 = lambda[0];
  bool d3 = opt.group == WoGroup::D3;
  static const WeylGroup D = enumerate_weyl(build_root_datum(Family::D, 3));
  const WeylGroup& G = d3 ? D : c2_group();
  int n = G.datum.n;
  Vec e1(n, 0);
  e1[0] = 2;
  Vec rho = G.datum.rho;
  // z^rho z1^{l1} (1 - q^{-1} z1^{-1})
  RationalFunc top = mono(add(rho, scale(e1, l1))) - mono(add(rho, scale(e1, l1 - 1)), -1);
  RationalFunc r = alternator(G, top) / alternator(G, mono(rho));
  if (opt.prefactor) r = r * mono(scale(e1, -2 * l1));
  if (d3) r = r.substitute_one(3);
  return r;
}

// --- dual parameters ---------------------------------------------------

namespace {

// xi^v (v = 2m in x-exponents) -> b^{(m1+m2, m1-m2)}
Poly transport(const Poly& p) {
  std::vector<Term> ts;
  for (auto& t : p.terms()) {
    int v1 = t.e[1], v2 = t.e[2];
    if ((v1 + v2) % 2) throw MathError("transport", "exponent outside the root coset");
    Exp e{};
    e[0] = t.e[0];
    e[1] = int16_t((v1 + v2) / 2);
    e[2] = int16_t((v1 - v2) / 2);
    ts.push_back({e, t.c});
  }
  return Poly::from_terms(std::move(ts));
}

}  // namespace

DualComparison dual_parameter_check(const Vec& lambda) {
  check_dominant(lambda, 2);
  SphericalQuery sq{2, lambda, HeckeChar::eps(), Normalization::raw};
  RationalFunc closed = spherical_closed(sq, selected_reading());
  RationalFunc tr = RationalFunc::fraction(transport(closed.num()), transport(closed.den()));

  // Native form on the b-lattice: vectors (+-2,0),(0,+-2),(+-1,+-1), positive
  // by first nonzero coordinate; the -1 class is the short vectors.
  const WeylGroup& G = c2_group();  // signed permutations act on b as well
  std::vector<std::pair<Vec, bool>> pos = {{{2, 0}, false}, {{0, 2}, false}, {{1, 1}, true},
                                           {{1, -1}, true}};
  Vec rho{0, 0}, rho_m{0, 0};
  for (auto& [v, minus] : pos) {
    rho = add(rho, v);
    if (minus) rho_m = add(rho_m, v);
  }
  for (auto& x : rho) x /= 2;
  for (auto& x : rho_m) x /= 2;
  Vec lam_b{lambda[0] + lambda[1], lambda[0] - lambda[1]};
  Poly left(1), right(1);
  std::vector<Poly> fac;
  for (auto& [v, minus] : pos) {
    (minus ? left : right) = (minus ? left : right) * one_minus(v, 1);
    fac.push_back(one_minus(neg(v), 0));
  }
  RationalFunc inner = RationalFunc(right) * mono(add(add(scale(rho_m, 2), neg(rho)), lam_b));
  RationalFunc a = alternator(G, inner);
  RationalFunc native;
  if (selected_reading() == OmegaReading::R2)
    throw MathError("omega", "dual form assumes the pi^{-rho} reading");
  if (selected_reading() == OmegaReading::R1) {
    native = divide_by_product(a, rho, fac);
  } else {
    std::vector<Poly> fac3;
    for (auto& [v, minus] : pos) fac3.push_back(one_minus(v, 0));
    native = divide_by_product(a, neg(rho), fac3);
  }
  native = (RationalFunc(left) * native).shifted(exp_of(neg(rho_m)));

  // present in a1 = 1/b1, a2 = b2
  SignedPerm flip{{0, 1}, {-1, 1}};
  DualComparison out;
  out.transported = tr.act(flip);
  out.native = native.act(flip);
  out.ratio = out.transported / out.native;
  out.ratio_is_monomial = out.ratio.is_poly() && out.ratio.num().is_monomial();
  return out;
}

}  // namespace bh
