#include "bh/error.hpp"
#include "bh/symfrac.hpp"

#include <random>

namespace bh {

namespace {

// Divide by g when it is not a unit.
Poly cancel(const Poly& p, const Poly& g) {
  if (g.is_one()) return p;
  auto q = p.divide(g);
  if (!q) throw MathError("internal", "gcd does not divide");
  return *q;
}

}  // namespace

RationalFunc RationalFunc::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw MathError("division", "zero denominator");
  RationalFunc r;
  if (num.is_zero()) return r;
  Exp dm = den.min_exp();
  Poly D = den.shifted(exp_neg(dm));
  Poly N = num.shifted(exp_neg(dm));
  if (D.is_constant()) {
    mpz_class c = D.lead().c, g = N.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (c < 0) g = -g;
    r.num_ = N.divexact(g);
    r.den_ = Poly::constant(c / g);
    return r;
  }
  Poly g = poly_gcd(N, D);
  N = cancel(N, g);
  D = cancel(D, g);
  Exp m = D.min_exp();  // should be zero, kept for safety
  D = D.shifted(exp_neg(m));
  N = N.shifted(exp_neg(m));
  if (D.lead().c < 0) {
    D = -D;
    N = -N;
  }
  r.num_ = std::move(N);
  r.den_ = std::move(D);
  return r;
}

RationalFunc RationalFunc::monomial(const Vec& xi, int qexp, long c) {
  return RationalFunc(Poly::term(exp_of(xi, qexp), c));
}

RationalFunc RationalFunc::q_pow(int k) {
  Exp e{};
  e[0] = int16_t(k);
  return RationalFunc(Poly::term(e, 1));
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_poly() && o.is_poly()) return RationalFunc(num_ + o.num_);
  if (den_ == o.den_) return fraction(num_ + o.num_, den_);
  if (o.is_poly()) {
    RationalFunc r;
    r.num_ = num_ + o.num_ * den_;
    r.den_ = den_;
    if (r.num_.is_zero()) return RationalFunc();
    return r;  // gcd(a + c b, b) = gcd(a, b) = 1
  }
  if (is_poly()) return o + *this;
  Poly g = poly_gcd(den_, o.den_);
  Poly b1 = cancel(den_, g), d1 = cancel(o.den_, g);
  Poly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return RationalFunc();
  Poly d = den_ * d1;
  if (g.is_one()) {
    RationalFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
  return fraction(n, d);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  if (is_zero() || o.is_zero()) return RationalFunc();
  if (is_poly() && o.is_poly()) return RationalFunc(num_ * o.num_);
  Poly g1 = o.den_.is_one() ? Poly(1) : poly_gcd(num_, o.den_);
  Poly g2 = den_.is_one() ? Poly(1) : poly_gcd(o.num_, den_);
  Poly n = cancel(num_, g1) * cancel(o.num_, g2);
  Poly d = cancel(den_, g2) * cancel(o.den_, g1);
  Exp m = d.min_exp();
  RationalFunc r;
  r.num_ = n.shifted(exp_neg(m));
  r.den_ = d.shifted(exp_neg(m));
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
  if (o.is_zero()) throw MathError("division", "division by zero rational function");
  if (is_zero()) return RationalFunc();
  // Cheap path: polynomial quotient that happens to be exact.
  if (is_poly() && o.is_poly()) {
    if (auto q = num_.divide(o.num_)) return RationalFunc(*q);
    return fraction(num_, o.num_);
  }
  RationalFunc inv;
  inv.num_ = o.den_;
  Exp m = o.num_.min_exp();
  inv.den_ = o.num_.shifted(exp_neg(m));
  inv.num_ = inv.num_.shifted(exp_neg(m));
  if (inv.den_.lead().c < 0) {
    inv.den_ = -inv.den_;
    inv.num_ = -inv.num_;
  }
  return *this * inv;
}

RationalFunc RationalFunc::shifted(const Exp& e) const {
  RationalFunc r = *this;
  r.num_ = r.num_.shifted(e);
  return r;
}

RationalFunc RationalFunc::act(const SignedPerm& g) const {
  RationalFunc r;
  if (is_zero()) return r;
  Poly n = num_.act(g.perm, g.signs);
  if (is_poly()) return RationalFunc(std::move(n));
  Poly d = den_.act(g.perm, g.signs);
  Exp m = d.min_exp();
  r.num_ = n.shifted(exp_neg(m));
  r.den_ = d.shifted(exp_neg(m));
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFunc RationalFunc::invert_all() const {
  if (is_poly()) return RationalFunc(num_.invert_all());
  RationalFunc r;
  Poly n = num_.invert_all(), d = den_.invert_all();
  Exp m = d.min_exp();
  r.num_ = n.shifted(exp_neg(m));
  r.den_ = d.shifted(exp_neg(m));
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFunc RationalFunc::substitute_one(int var) const {
  if (var < 1 || var >= kSlots) throw MathError("substitute", "variable index out of range");
  Poly d = den_.evaluate_slot(var, 1);
  if (d.is_zero())
    throw MathError("substitute",
                    "denominator vanishes at xi" + std::to_string(var) + " = 1");
  return fraction(num_.evaluate_slot(var, 1), d);
}

mpq_class RationalFunc::eval(const mpq_class& q, const std::vector<mpq_class>& xi) const {
  mpq_class d = den_.eval(q, xi);
  if (d == 0) throw MathError("eval", "denominator vanishes at the sample point");
  return num_.eval(q, xi) / d;
}

bool equals_exact(const RationalFunc& a, const RationalFunc& b) {
  // probe: a mismatch at one point settles it; a match proves nothing
  static thread_local std::mt19937_64 rng(0x5eed);
  std::vector<mpq_class> xi(kMaxRank);
  auto draw = [&](long hi, long dhi) {
    mpq_class v{mpz_class(long(rng() % hi) + 3), mpz_class(long(rng() % dhi) + 1)};
    v.canonicalize();
    return v;
  };
  for (auto& v : xi) v = draw(89, 13);
  mpq_class q = draw(97, 11);
  try {
    if (a.eval(q, xi) != b.eval(q, xi)) return false;
  } catch (const MathError&) {
  }
  return a.num() * b.den() == b.num() * a.den();
}

RationalFunc weyl_act_poly(const SignedPerm& g, const RationalFunc& f) { return f.act(g); }

}  // namespace bh
