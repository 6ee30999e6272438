#include "bh/heckeop.hpp"

#include "bh/error.hpp"

namespace bh {

namespace {

Poly mono(const Vec& v, int qexp = 0, long c = 1) { return Poly::term(exp_of(v, qexp), c); }

Vec neg(Vec v) {
  for (auto& x : v) x = -x;
  return v;
}

const Poly& one_minus_q() {
  static const Poly p = Poly(1) - Poly::term(exp_of({}, 1));
  return p;
}

}  // namespace

HeckeChar HeckeChar::by_name(const std::string& s) {
  for (auto& c : all())
    if (c.name == s) return c;
  throw MathError("usage", "unknown character '" + s + "' (triv, sign, eps, sigma)");
}

RationalFunc eig_value(Eig e) { return e == Eig::Q ? RationalFunc::q_pow(1) : RationalFunc(-1); }

RationalFunc char_value(const HeckeChar& c, const RootDatum& d, int i) {
  return eig_value(c.eig_for(d.simple(i).is_long));
}

RationalFunc char_value(const HeckeChar& c, const RootDatum& d, const std::vector<int>& word) {
  RationalFunc r(1);
  for (int i : word) r *= char_value(c, d, i);
  return r;
}

Vec rho_char(const HeckeChar& c, const RootDatum& d) {
  Vec r(d.n, 0);
  for (auto& a : d.positive)
    if (c.eig_for(a.is_long) == Eig::MinusOne)
      for (int k = 0; k < d.n; ++k) r[k] += a.xi[k];
  for (auto& x : r) x /= 2;
  return r;
}

RationalFunc dl_apply(const HeckeChar& c, const RootDatum& d, int i, const RationalFunc& f) {
  const Coroot& a = d.simple(i);
  SignedPerm s = simple_reflection(d, i);
  Poly eps = char_value(c, d, i).num();
  Poly one_minus_y = Poly(1) - mono(neg(a.xi));
  RationalFunc fs = f.act(s);
  if (f.is_poly()) {
    // (f^s - f)/(1 - y) is a Laurent polynomial whenever the parities line up
    if (auto t = (fs.num() - f.num()).divide(one_minus_y))
      return RationalFunc(eps * fs.num() + one_minus_q() * *t);
  }
  RationalFunc t = (fs - f) / RationalFunc(one_minus_y);
  return RationalFunc(eps) * fs + RationalFunc(one_minus_q()) * t;
}

RationalFunc tconj_apply(const HeckeChar& c, const RootDatum& d, int i, const RationalFunc& f) {
  Vec r = rho_char(c, d);
  Exp e = exp_of(r);
  return dl_apply(c, d, i, f.shifted(exp_neg(e))).shifted(e);
}

RationalFunc tconj_display(const RootDatum& d, int i, const RationalFunc& f, bool swap_cases) {
  if (d.family != Family::C) throw MathError("type", "displayed formula is for type C");
  const Coroot& a = d.simple(i);
  RationalFunc x = RationalFunc::monomial(a.xi);
  RationalFunc qi = RationalFunc::q_pow(-1);
  RationalFunc fs = f.act(simple_reflection(d, i));
  bool first_case = (i < d.n) != swap_cases;
  RationalFunc c = first_case ? (x - qi) * x : RationalFunc(1) - qi * x;
  RationalFunc body = c * fs + (qi - RationalFunc(1)) * x * f;
  return RationalFunc::q_pow(1) * body / (RationalFunc(1) - x);
}

RationalFunc word_apply(const HeckeChar& c, const RootDatum& d, const std::vector<int>& word,
                        const RationalFunc& f, bool conjugated) {
  for (int i : word)
    if (i < 1 || i > d.n) throw MathError("word", "letter out of range");
  if (length_of(d, word_product(d, word)) != int(word.size()))
    throw MathError("word", "word is not reduced");
  RationalFunc g = f;
  if (!conjugated) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = dl_apply(c, d, *it, g);
    return g;
  }
  Exp e = exp_of(rho_char(c, d));
  g = g.shifted(exp_neg(e));
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = dl_apply(c, d, *it, g);
  return g.shifted(e);
}

RationalFunc intertwiner_apply(const HeckeChar& c, const RootDatum& d, int i,
                               const RationalFunc& f) {
  RationalFunc x = RationalFunc::monomial(d.simple(i).xi);
  RationalFunc qi = RationalFunc::q_pow(-1);
  return (RationalFunc(1) - qi) * x * f + qi * (RationalFunc(1) - x) * dl_apply(c, d, i, f);
}

RationalFunc intertwiner_closed(const RootDatum& d, int i, const RationalFunc& f) {
  const Coroot& a = d.simple(i);
  RationalFunc x = RationalFunc::monomial(a.xi);
  RationalFunc qi = RationalFunc::q_pow(-1);
  RationalFunc ca = a.is_long ? x - qi : RationalFunc(1) - qi * x;
  RationalFunc fs = f.act(simple_reflection(d, i));
  return RationalFunc::q_pow(1) * (ca * fs + (qi - RationalFunc(1)) * x * f) /
         (RationalFunc(1) - x);
}

RationalFunc bernstein_residual(const RootDatum& d, const HeckeChar& c, int i, const Vec& mu,
                                const RationalFunc& f) {
  SignedPerm s = simple_reflection(d, i);
  Vec smu = act(s, mu);
  RationalFunc pm = RationalFunc::monomial(mu), psm = RationalFunc::monomial(smu);
  RationalFunc y = RationalFunc::monomial(neg(d.simple(i).xi));
  RationalFunc lhs = dl_apply(c, d, i, pm * f);
  RationalFunc corr = RationalFunc(one_minus_q()) * (psm - pm) / (RationalFunc(1) - y);
  return lhs - psm * dl_apply(c, d, i, f) - corr * f;
}

}  // namespace bh
