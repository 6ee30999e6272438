#include "bh/error.hpp"
#include "bh/symfrac.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace bh {

namespace {

bool desc(const Term& a, const Term& b) { return a.e > b.e; }

mpq_class qpow(const mpq_class& b, int e) {
  if (e == 0) return 1;
  if (b == 0) throw MathError("eval", "zero raised to a negative power");
  mpz_class n = b.get_num(), d = b.get_den();
  unsigned long k = unsigned(std::abs(e));
  mpz_class nn, dd;
  mpz_pow_ui(nn.get_mpz_t(), n.get_mpz_t(), k);
  mpz_pow_ui(dd.get_mpz_t(), d.get_mpz_t(), k);
  mpq_class r = e > 0 ? mpq_class(nn, dd) : mpq_class(dd, nn);
  r.canonicalize();
  return r;
}

}  // namespace

Exp exp_of(const Vec& xi, int qexp) {
  if (int(xi.size()) > kMaxRank) throw MathError("rank", "too many xi variables");
  Exp e{};
  e[0] = int16_t(qexp);
  for (size_t i = 0; i < xi.size(); ++i) e[i + 1] = int16_t(xi[i]);
  return e;
}

Poly::Poly(long c) {
  if (c != 0) t_.push_back({Exp{}, mpz_class(c)});
}

Poly Poly::constant(const mpz_class& c) {
  Poly p;
  if (c != 0) p.t_.push_back({Exp{}, c});
  return p;
}

Poly Poly::term(const Exp& e, const mpz_class& c) {
  Poly p;
  if (c != 0) p.t_.push_back({e, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), desc);
  Poly p;
  for (auto& t : ts) {
    if (!p.t_.empty() && p.t_.back().e == t.e)
      p.t_.back().c += t.c;
    else {
      if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
      p.t_.push_back(std::move(t));
    }
  }
  if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].e == Exp{});
}

bool Poly::is_one() const {
  return t_.size() == 1 && t_[0].e == Exp{} && t_[0].c == 1;
}

Exp Poly::min_exp() const {
  Exp m{};
  if (t_.empty()) return m;
  m = t_[0].e;
  for (auto& t : t_)
    for (int i = 0; i < kSlots; ++i) m[i] = std::min(m[i], t.e[i]);
  return m;
}

Exp Poly::max_exp() const {
  Exp m{};
  if (t_.empty()) return m;
  m = t_[0].e;
  for (auto& t : t_)
    for (int i = 0; i < kSlots; ++i) m[i] = std::max(m[i], t.e[i]);
  return m;
}

int Poly::max_deg(int slot) const {
  int d = 0;
  bool first = true;
  for (auto& t : t_) {
    if (first || t.e[slot] > d) d = t.e[slot];
    first = false;
  }
  return d;
}

int Poly::min_deg(int slot) const {
  int d = 0;
  bool first = true;
  for (auto& t : t_) {
    if (first || t.e[slot] < d) d = t.e[slot];
    first = false;
  }
  return d;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.t_) t.c = -t.c;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].e > o.t_[j].e)
      r.t_.push_back(t_[i++]);
    else if (o.t_[j].e > t_[i].e)
      r.t_.push_back(o.t_[j++]);
    else {
      mpz_class c = t_[i].c + o.t_[j].c;
      if (c != 0) r.t_.push_back({t_[i].e, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (t_.empty() || o.t_.empty()) return {};
  if (o.t_.size() == 1) return shifted(o.t_[0].e).scaled(o.t_[0].c);
  if (t_.size() == 1) return o.shifted(t_[0].e).scaled(t_[0].c);
  std::unordered_map<Exp, mpz_class, ExpHash> acc;
  acc.reserve(t_.size() * o.t_.size());
  mpz_class tmp;
  for (auto& a : t_)
    for (auto& b : o.t_) {
      auto& slot = acc[exp_add(a.e, b.e)];
      mpz_addmul(slot.get_mpz_t(), a.c.get_mpz_t(), b.c.get_mpz_t());
    }
  Poly r;
  r.t_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.t_.push_back({e, std::move(c)});
  std::sort(r.t_.begin(), r.t_.end(), desc);
  return r;
}

Poly Poly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Poly p = *this;
  if (c != 1)
    for (auto& t : p.t_) t.c *= c;
  return p;
}

Poly Poly::shifted(const Exp& e) const {
  Poly p = *this;
  for (auto& t : p.t_) t.e = exp_add(t.e, e);
  return p;
}

Poly Poly::divexact(const mpz_class& c) const {
  Poly p = *this;
  for (auto& t : p.t_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].e != o.t_[i].e || t_[i].c != o.t_[i].c) return false;
  return true;
}

namespace {

// Exact division of genuine polynomials (no negative exponents, d without
// monomial content is not required).  Degree box pruning keeps the failing
// case cheap.
std::optional<Poly> pdiv_exact(const Poly& f, const Poly& d) {
  if (f.is_zero()) return Poly{};
  const Term& ld = d.lead();
  if (d.is_monomial()) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (auto& t : f.terms()) {
      if (!mpz_divisible_p(t.c.get_mpz_t(), ld.c.get_mpz_t())) return std::nullopt;
      Exp e = exp_sub(t.e, ld.e);
      for (auto v : e)
        if (v < 0) return std::nullopt;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.c.get_mpz_t(), ld.c.get_mpz_t());
      out.push_back({e, std::move(c)});
    }
    return Poly::from_terms(std::move(out));
  }
  Exp fmin = f.min_exp(), fmax = f.max_exp(), dmin = d.min_exp(), dmax = d.max_exp();
  Exp lo = exp_sub(fmin, dmin), hi = exp_sub(fmax, dmax);
  for (int i = 0; i < kSlots; ++i)
    if (lo[i] > hi[i]) return std::nullopt;

  std::map<Exp, mpz_class, std::greater<Exp>> r;
  for (auto& t : f.terms()) r.emplace(t.e, t.c);
  std::vector<Term> q;
  mpz_class qc;
  while (!r.empty()) {
    auto it = r.begin();
    Exp t = exp_sub(it->first, ld.e);
    for (int i = 0; i < kSlots; ++i)
      if (t[i] < lo[i] || t[i] > hi[i]) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), ld.c.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), ld.c.get_mpz_t());
    r.erase(it);
    for (size_t k = 1; k < d.size(); ++k) {
      const Term& dt = d.terms()[k];
      Exp e = exp_add(t, dt.e);
      auto [pos, fresh] = r.try_emplace(e, 0);
      mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), dt.c.get_mpz_t());
      if (pos->second == 0) r.erase(pos);
    }
    q.push_back({t, qc});
  }
  return Poly::from_terms(std::move(q));
}

}  // namespace

std::optional<Poly> Poly::divide(const Poly& d) const {
  if (d.is_zero()) throw MathError("division", "division by the zero polynomial");
  if (is_zero()) return Poly{};
  Exp fm = min_exp(), dm = d.min_exp();
  auto q = pdiv_exact(shifted(exp_neg(fm)), d.shifted(exp_neg(dm)));
  if (!q) return std::nullopt;
  return q->shifted(exp_sub(fm, dm));
}

Poly Poly::act(const std::vector<int>& perm, const std::vector<int>& signs) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    Exp e{};
    e[0] = t.e[0];
    for (size_t j = 0; j < perm.size(); ++j) {
      int tgt = perm[j];
      e[tgt + 1] = int16_t(signs[tgt] * t.e[j + 1]);
    }
    for (size_t j = perm.size(); j + 1 < size_t(kSlots); ++j) e[j + 1] = t.e[j + 1];
    out.push_back({e, t.c});
  }
  std::sort(out.begin(), out.end(), desc);
  Poly p;
  p.t_ = std::move(out);
  return p;
}

Poly Poly::evaluate_slot(int slot, const mpz_class& v) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    int k = t.e[slot];
    mpz_class c = t.c;
    if (k > 0) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), unsigned(k));
      c *= pw;
    } else if (k < 0) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), unsigned(-k));
      if (!mpz_divisible_p(c.get_mpz_t(), pw.get_mpz_t()))
        throw MathError("eval", "non-integral specialization");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pw.get_mpz_t());
    }
    Exp e = t.e;
    e[slot] = 0;
    out.push_back({e, std::move(c)});
  }
  return from_terms(std::move(out));
}

Poly Poly::invert_all() const {
  std::vector<Term> out = t_;
  for (auto& t : out) t.e = exp_neg(t.e);
  std::sort(out.begin(), out.end(), desc);
  Poly p;
  p.t_ = std::move(out);
  return p;
}

Poly Poly::coefficient(int slot, int deg) const {
  std::vector<Term> out;
  for (auto& t : t_)
    if (t.e[slot] == deg) {
      Term u = t;
      u.e[slot] = 0;
      out.push_back(std::move(u));
    }
  return from_terms(std::move(out));
}

mpq_class Poly::eval(const mpq_class& q, const std::vector<mpq_class>& xi) const {
  mpq_class s = 0;
  for (auto& t : t_) {
    mpq_class v(t.c);
    if (t.e[0]) v *= qpow(q, t.e[0]);
    for (int i = 1; i < kSlots; ++i)
      if (t.e[i]) {
        if (size_t(i) > xi.size()) throw MathError("eval", "missing variable value");
        v *= qpow(xi[i - 1], t.e[i]);
      }
    s += v;
  }
  return s;
}

void PolyBuilder::reserve(size_t n) { buf_.reserve(n); }

void PolyBuilder::add(const Exp& e, const mpz_class& c) {
  if (c != 0) buf_.push_back({e, c});
}

void PolyBuilder::add(const Poly& p, const mpz_class& scale) {
  for (auto& t : p.terms()) buf_.push_back({t.e, t.c * scale});
}

void PolyBuilder::add_shifted(const Poly& p, const Exp& shift, const mpz_class& scale) {
  for (auto& t : p.terms()) buf_.push_back({exp_add(t.e, shift), t.c * scale});
}

Poly PolyBuilder::build() {
  Poly p = Poly::from_terms(std::move(buf_));
  buf_.clear();
  return p;
}

}  // namespace bh
