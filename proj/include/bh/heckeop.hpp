#pragma once
// Demazure-Lusztig operators for the four linear characters of the finite
// Hecke algebra, their monomial conjugates, word operators and intertwiners.

#include "bh/rootweyl.hpp"
#include "bh/symfrac.hpp"

#include <string>
#include <vector>

namespace bh {

enum class Eig { MinusOne, Q };

struct HeckeChar {
  Eig short_eig;
  Eig long_eig;
  std::string name;

  static HeckeChar triv() { return {Eig::Q, Eig::Q, "triv"}; }
  static HeckeChar sign() { return {Eig::MinusOne, Eig::MinusOne, "sign"}; }
  static HeckeChar eps() { return {Eig::Q, Eig::MinusOne, "eps"}; }
  static HeckeChar sigma() { return {Eig::MinusOne, Eig::Q, "sigma"}; }
  static HeckeChar by_name(const std::string& s);  // throws MathError
  static std::vector<HeckeChar> all() { return {triv(), sign(), eps(), sigma()}; }

  Eig eig_for(bool is_long) const { return is_long ? long_eig : short_eig; }
};

RationalFunc eig_value(Eig e);
RationalFunc char_value(const HeckeChar& c, const RootDatum& d, int i);
// Product of generator eigenvalues along a word.
RationalFunc char_value(const HeckeChar& c, const RootDatum& d, const std::vector<int>& word);

// Conjugation vector: half the sum of the positive coroots on which the
// character takes the value -1 (0 for triv, rho for sign, rho_eps for eps).
Vec rho_char(const HeckeChar& c, const RootDatum& d);

// T_s f = (e + (1-q)/(1-y)) f^s + ((q-1)/(1-y)) f,  y = pi^{-alpha^vee}.
RationalFunc dl_apply(const HeckeChar& c, const RootDatum& d, int i, const RationalFunc& f);

// pi^{rho_c} T_s pi^{-rho_c}.
RationalFunc tconj_apply(const HeckeChar& c, const RootDatum& d, int i, const RationalFunc& f);

// The closed two-case formula for the eps conjugate, with cases selected by
// the simple index as they are usually written down (index < n, index = n).
// `swap_cases` feeds each index the other case's expression.
RationalFunc tconj_display(const RootDatum& d, int i, const RationalFunc& f,
                           bool swap_cases = false);

// T_{i1} o ... o T_{ik} (f); i_k acts first.  Throws on a non-reduced word.
RationalFunc word_apply(const HeckeChar& c, const RootDatum& d, const std::vector<int>& word,
                        const RationalFunc& f, bool conjugated);

// A_s = (1 - q^{-1}) pi^{alpha^vee} + q^{-1} (1 - pi^{alpha^vee}) T_s.
RationalFunc intertwiner_apply(const HeckeChar& c, const RootDatum& d, int i,
                               const RationalFunc& f);

// Closed form of the eps operator through the intertwiner constants:
// q/(1-x) [c_a f^s + (q^{-1}-1) x f], x = pi^{alpha^vee}.
RationalFunc intertwiner_closed(const RootDatum& d, int i, const RationalFunc& f);

// (T_s pi^mu - pi^{s mu} T_s - (1-q)(pi^{s mu} - pi^mu)/(1 - pi^{-alpha^vee})) f.
RationalFunc bernstein_residual(const RootDatum& d, const HeckeChar& c, int i, const Vec& mu,
                                const RationalFunc& f);

}  // namespace bh
