#pragma once
// Exact Laurent polynomials and rational functions in q, xi_1..xi_7.
//
// Exponent slot 0 is q, slots 1..7 are xi_1..xi_7.  Torus monomials pi^mu are
// stored with doubled exponents (xi_i^2 = x_i = pi^{e_i}), so half-integral
// coweights such as rho are integral here.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bh {

inline constexpr int kSlots = 8;
inline constexpr int kMaxRank = kSlots - 1;

using Exp = std::array<int16_t, kSlots>;
using Vec = std::vector<int>;  // xi-exponent vector of length rank

inline Exp exp_add(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < kSlots; ++i) r[i] = int16_t(a[i] + b[i]);
  return r;
}
inline Exp exp_sub(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < kSlots; ++i) r[i] = int16_t(a[i] - b[i]);
  return r;
}
inline Exp exp_neg(const Exp& a) {
  Exp r;
  for (int i = 0; i < kSlots; ++i) r[i] = int16_t(-a[i]);
  return r;
}
Exp exp_of(const Vec& xi, int qexp = 0);

struct ExpHash {
  size_t operator()(const Exp& e) const {
    uint64_t h = 1469598103934665603ull;
    for (auto v : e) h = (h ^ uint16_t(v)) * 1099511628211ull;
    return size_t(h);
  }
};

struct Term {
  Exp e;
  mpz_class c;
};

// Sparse Laurent polynomial, terms sorted strictly descending in lex order on
// (q, xi_1, ..., xi_7).  No zero coefficients are stored.
class Poly {
public:
  Poly() = default;
  explicit Poly(long c);
  static Poly constant(const mpz_class& c);
  static Poly term(const Exp& e, const mpz_class& c = 1);
  static Poly from_terms(std::vector<Term> ts);  // merges duplicates

  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return t_.size() == 1; }
  bool is_one() const;
  const Term& lead() const { return t_.front(); }

  Exp min_exp() const;
  Exp max_exp() const;
  int max_deg(int slot) const;
  int min_deg(int slot) const;
  mpz_class content() const;  // positive gcd of coefficients; 0 for zero

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly scaled(const mpz_class& c) const;
  Poly shifted(const Exp& e) const;  // multiply by a monomial
  Poly divexact(const mpz_class& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Exact quotient in the Laurent ring, or nullopt.
  std::optional<Poly> divide(const Poly& d) const;

  // Signed permutation of the xi slots: xi_j -> xi_{perm[j]}^{sign[perm[j]]}
  // (0-based indices into the xi slots).
  Poly act(const std::vector<int>& perm, const std::vector<int>& signs) const;
  Poly evaluate_slot(int slot, const mpz_class& v) const;  // needs v^e integral
  Poly invert_all() const;  // every exponent negated
  Poly coefficient(int slot, int deg) const;  // slot removed

  mpq_class eval(const mpq_class& q, const std::vector<mpq_class>& xi) const;

private:
  std::vector<Term> t_;
  friend class PolyBuilder;
};

// Hash-accumulating builder; cheaper than repeated operator+ for long sums.
class PolyBuilder {
public:
  void add(const Exp& e, const mpz_class& c);
  void add(const Poly& p, const mpz_class& scale = 1);
  void add_shifted(const Poly& p, const Exp& shift, const mpz_class& scale);
  Poly build();
  void reserve(size_t n);

private:
  std::vector<Term> buf_;
};

// Polynomial gcd of Laurent polynomials, up to units.  The result carries no
// monomial content and has a positive leading coefficient.
Poly poly_gcd(const Poly& a, const Poly& b);

// Shape and signed-permutation data shared with rootweyl.
struct SignedPerm {
  std::vector<int> perm;   // perm[j] = image of coordinate j
  std::vector<int> signs;  // signs indexed by target coordinate
};

class RationalFunc {
public:
  RationalFunc() : den_(1) {}
  RationalFunc(long c) : num_(c), den_(1) {}
  explicit RationalFunc(Poly p) : num_(std::move(p)), den_(1) {}
  static RationalFunc fraction(const Poly& num, const Poly& den);
  static RationalFunc monomial(const Vec& xi, int qexp = 0, long c = 1);
  static RationalFunc q_pow(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RationalFunc operator-() const;
  RationalFunc operator+(const RationalFunc& o) const;
  RationalFunc operator-(const RationalFunc& o) const;
  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;
  RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
  RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
  RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
  bool operator==(const RationalFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunc& o) const { return !(*this == o); }

  RationalFunc shifted(const Exp& e) const;  // times a monomial
  RationalFunc act(const SignedPerm& g) const;
  RationalFunc invert_all() const;
  // xi_{var} := 1 (var is 1-based).  Throws MathError when the reduced
  // denominator vanishes there.
  RationalFunc substitute_one(int var) const;

  mpq_class eval(const mpq_class& q, const std::vector<mpq_class>& xi) const;

private:
  Poly num_, den_;
};

// Cross-multiplication equality, with a cheap random probe that may only
// short-circuit to false.
bool equals_exact(const RationalFunc& a, const RationalFunc& b);
RationalFunc weyl_act_poly(const SignedPerm& g, const RationalFunc& f);

// Serialization.  Text uses xi1..xin, or x1..xn (x_i = xi_i^2) when every
// xi-exponent is even and `prefer_x` is set.
enum class VarStyle { xi, x_when_even };
std::string to_text(const Poly& p, VarStyle st = VarStyle::x_when_even);
std::string to_text(const RationalFunc& f, VarStyle st = VarStyle::x_when_even);
std::string to_latex(const RationalFunc& f);
RationalFunc parse_text(const std::string& s);
nlohmann::json to_json(const RationalFunc& f, int rank);
RationalFunc from_json(const nlohmann::json& j);

}  // namespace bh
