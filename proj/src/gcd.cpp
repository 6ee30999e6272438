// Multivariate integer polynomial gcd.
//
// Strategy: strip monomial and integer content, eliminate variables that
// occur in only one argument (gcd with the content in that variable), try
// the cheap "one divides the other" case, then the heuristic evaluation gcd
// (verified by trial division).  A primitive PRS is the fallback; it is slow
// but always terminates with the right answer.

#include "bh/error.hpp"
#include "bh/symfrac.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace bh {

namespace {

struct Heu {
  Poly h, cff, cfg;
};

Poly normalize_sign(Poly p) {
  if (!p.is_zero() && p.lead().c < 0) p = -p;
  return p;
}

Poly strip_monomial(const Poly& p) { return p.shifted(exp_neg(p.min_exp())); }

std::vector<int> used_slots(const Poly& p) {
  Exp mx = p.max_exp();
  std::vector<int> v;
  for (int i = 0; i < kSlots; ++i)
    if (mx[i] > 0) v.push_back(i);
  return v;
}

mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (auto& t : p.terms())
    if (abs(t.c) > m) m = abs(t.c);
  return m;
}

std::map<int, Poly> coeffs_in(const Poly& p, int slot) {
  std::map<int, std::vector<Term>> parts;
  for (auto& t : p.terms()) {
    Term u = t;
    u.e[slot] = 0;
    parts[t.e[slot]].push_back(std::move(u));
  }
  std::map<int, Poly> out;
  for (auto& [d, ts] : parts) out.emplace(d, Poly::from_terms(std::move(ts)));
  return out;
}

Poly gcd_rec(const Poly& a, const Poly& b);

// gcd of all coefficients of p viewed as a polynomial in `slot`.
Poly content_in(const Poly& p, int slot) {
  auto cs = coeffs_in(p, slot);
  Poly g;
  for (auto& [d, c] : cs) {
    g = g.is_zero() ? normalize_sign(c) : gcd_rec(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide(b);
  if (!q) throw MathError("internal", "expected exact polynomial division");
  return *q;
}

// Balanced residues of coefficients of h modulo x, rebuilt as a polynomial in
// `slot` (the evaluation point was slot := x).
Poly interpolate(Poly h, const mpz_class& x, int slot) {
  std::vector<Term> out;
  mpz_class half = x / 2;
  for (int i = 0; !h.is_zero(); ++i) {
    std::vector<Term> g;
    for (auto& t : h.terms()) {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), t.c.get_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r != 0) {
        g.push_back({t.e, r});
        Term u = g.back();
        u.e[slot] = int16_t(i);
        out.push_back(std::move(u));
      }
    }
    Poly gp = Poly::from_terms(std::move(g));
    h = (h - gp).divexact(x);
  }
  return normalize_sign(Poly::from_terms(std::move(out)));
}

std::optional<Heu> heu_gcd(const Poly& f, const Poly& g, const std::vector<int>& vars,
                           size_t depth);

// f, g nonzero genuine polynomials in the listed slots.
std::optional<Heu> heu_gcd(const Poly& f, const Poly& g, const std::vector<int>& vars,
                           size_t depth) {
  if (depth == vars.size()) {
    mpz_class a = f.lead().c, b = g.lead().c, h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Heu{Poly::constant(h), Poly::constant(a / h), Poly::constant(b / h)};
  }
  int slot = vars[depth];
  mpz_class cf = f.content(), cg = g.content(), cc;
  mpz_gcd(cc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  Poly F = f.divexact(cc), G = g.divexact(cc);

  mpz_class fn = max_norm(F), gn = max_norm(G);
  mpz_class B = 2 * (fn < gn ? fn : gn) + 29;
  mpz_class sb = sqrt(B), sb99 = 99 * sb;
  mpz_class x = B < sb99 ? B : sb99;
  mpz_class t1 = fn / abs(F.lead().c), t2 = gn / abs(G.lead().c);
  mpz_class alt = 2 * (t1 < t2 ? t1 : t2) + 2;
  if (alt > x) x = alt;

  // Guard against integer blow-up in the nested evaluations.
  double bits = 1;
  for (size_t k = depth; k < vars.size(); ++k)
    bits *= 1.0 + std::max(F.max_deg(vars[k]), G.max_deg(vars[k]));
  if (bits * (double(mpz_sizeinbase(x.get_mpz_t(), 2)) + 8) > 4e6) return std::nullopt;

  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly ff = F.evaluate_slot(slot, x), gg = G.evaluate_slot(slot, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto sub = heu_gcd(ff, gg, vars, depth + 1);
      if (!sub) return std::nullopt;
      Poly h = interpolate(sub->h, x, slot);
      mpz_class hc = h.content();
      if (hc > 1) h = h.divexact(hc);
      if (auto q1 = F.divide(h))
        if (auto q2 = G.divide(h)) return Heu{h.scaled(cc), *q1, *q2};
      Poly cff = interpolate(sub->cff, x, slot);
      if (auto hh = F.divide(cff))
        if (auto q2 = G.divide(*hh)) return Heu{hh->scaled(cc), cff, *q2};
      Poly cfg = interpolate(sub->cfg, x, slot);
      if (auto hh = G.divide(cfg))
        if (auto q1 = F.divide(*hh)) return Heu{hh->scaled(cc), *q1, cfg};
    }
    mpz_class s4 = sqrt(sqrt(x));
    x = 73794 * x * s4 / 27011;
  }
  return std::nullopt;
}

Poly lc_in(const Poly& p, int slot) { return p.coefficient(slot, p.max_deg(slot)); }

Poly prem(Poly a, const Poly& b, int slot) {
  int db = b.max_deg(slot);
  Poly lb = lc_in(b, slot);
  while (!a.is_zero() && a.max_deg(slot) >= db) {
    int da = a.max_deg(slot);
    Poly la = lc_in(a, slot);
    Exp sh{};
    sh[slot] = int16_t(da - db);
    a = a * lb - (la * b).shifted(sh);
  }
  return a;
}

Poly pp_in(const Poly& p, int slot) {
  Poly c = content_in(p, slot);
  return c.is_one() ? p : exact(p, c);
}

Poly gcd_prs(const Poly& A, const Poly& B, int slot) {
  Poly ca = content_in(A, slot), cb = content_in(B, slot);
  Poly c = gcd_rec(ca, cb);
  Poly a = exact(A, ca), b = exact(B, cb);
  if (a.max_deg(slot) < b.max_deg(slot)) std::swap(a, b);
  while (true) {
    Poly r = prem(a, b, slot);
    if (r.is_zero()) break;
    r = strip_monomial(r);
    if (r.max_deg(slot) == 0) {
      b = Poly(1);
      break;
    }
    a = std::move(b);
    b = pp_in(r, slot);
  }
  return normalize_sign(pp_in(b, slot) * c);
}

// a, b: nonzero polynomials without monomial content.
Poly gcd_rec(const Poly& a0, const Poly& b0) {
  Poly a = strip_monomial(a0), b = strip_monomial(b0);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return Poly::constant(g);
  }
  if (a == b || a == -b) return normalize_sign(a);
  auto va = used_slots(a), vb = used_slots(b);
  for (int s : va)
    if (!std::binary_search(vb.begin(), vb.end(), s)) return gcd_rec(content_in(a, s), b);
  for (int s : vb)
    if (!std::binary_search(va.begin(), va.end(), s)) return gcd_rec(a, content_in(b, s));

  const Poly& sm = a.size() <= b.size() ? a : b;
  const Poly& lg = a.size() <= b.size() ? b : a;
  if (lg.divide(sm)) return normalize_sign(sm);

  if (auto h = heu_gcd(a, b, va, 0)) return normalize_sign(h->h);

  // PRS in the variable of smallest degree in the smaller argument.
  int best = va[0];
  for (int s : va)
    if (sm.max_deg(s) < sm.max_deg(best)) best = s;
  return gcd_prs(a, b, best);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(strip_monomial(b));
  if (b.is_zero()) return normalize_sign(strip_monomial(a));
  return gcd_rec(a, b);
}

}  // namespace bh
