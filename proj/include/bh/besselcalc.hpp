#pragma once
// Alternators, the Omega operator, the deformed alternator identity and the
// spherical/Iwahori values built from them.

#include "bh/heckeop.hpp"
#include "bh/rootweyl.hpp"
#include "bh/symfrac.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bh {

enum class Exec { serial, parallel };

// Sum_w (-1)^{l(w)} w.f
RationalFunc alternator(const WeylGroup& G, const RationalFunc& f, Exec ex = Exec::parallel);

// pi^{rho} prod_{alpha>0} (1 - pi^{-alpha^vee}), expanded.
RationalFunc weyl_denominator(const RootDatum& d);

// Three readings of the one-line Omega definition.
//   R1: A(pi^{-rho} f) / (pi^{rho} prod (1 - pi^{-alpha}))
//   R2: A(pi^{rho} f) / A(pi^{rho})
//   R3: A(pi^{-rho} f) / A(pi^{-rho})
enum class OmegaReading { R1, R2, R3 };
std::string reading_name(OmegaReading r);
std::optional<OmegaReading> reading_by_name(const std::string& s);

RationalFunc omega_apply(const WeylGroup& G, const RationalFunc& f, OmegaReading r,
                         Exec ex = Exec::parallel);

// Sum_w T_w f (or the conjugated operators).  Parallel: one pass per length
// layer, T_w f = T_{i1}(T_{s_{i1} w} f).  Serial: every word applied from
// scratch; kept as the reference.
RationalFunc hecke_sum(const HeckeChar& c, const WeylGroup& G, const RationalFunc& f,
                       bool conjugated, Exec ex = Exec::parallel);

// Left product over the -1 class, Omega, right product over the q class.
RationalFunc deformed_alternator(const HeckeChar& c, const WeylGroup& G, const RationalFunc& f,
                                 OmegaReading r, Exec ex = Exec::parallel);

struct OmegaTrial {
  OmegaReading reading;
  int rank;
  bool ok;
  std::string failed_on;  // first monomial that disagreed
};
struct OmegaSelection {
  std::vector<OmegaTrial> trials;
  std::vector<OmegaReading> survivors;
  bool unique() const { return survivors.size() == 1; }
};

// Test monomials for Sum T_w = deformed alternator (eps): xi-exponents in
// {0,2}^n plus their shifts by 2 rho_eps.
std::vector<Vec> identity_test_monomials(const RootDatum& d);

// Compares every reading against the brute-force operator sum for each rank.
OmegaSelection disambiguate_omega(const std::vector<int>& ranks,
                                  const std::vector<OmegaReading>& readings);
// Reading that satisfies the identity at ranks 2 and 3 (computed once).
OmegaReading selected_reading();

// --- spherical data ----------------------------------------------------

enum class Normalization { raw, measure_normalized };

struct SphericalQuery {
  int rank;
  Vec lambda;  // dominant coweight, standard coordinates
  HeckeChar chr = HeckeChar::eps();
  Normalization norm = Normalization::raw;
};

void check_dominant(const Vec& lambda, int rank);

// q^{sum_{alpha>0} <lambda, alpha>}
RationalFunc coset_measure(const RootDatum& d, const Vec& lambda);

// pi^{-rho_eps} (prod_long (1 - q pi^a)) Omega((prod_short (1 - q pi^a)) pi^{lambda + 2 rho_eps})
// With R1 this is the usual closed display.
RationalFunc spherical_closed(const SphericalQuery& q, OmegaReading r = OmegaReading::R1);
// pi^{-rho_eps} Sum_w Tconj_w pi^{lambda + 2 rho_eps}
RationalFunc spherical_sum(const SphericalQuery& q, Exec ex = Exec::parallel);

// pi^{rho_eps} T_w pi^{lambda} / m(lambda), computed as the conjugated word
// operator on pi^{lambda + rho_eps}.
RationalFunc iwahori_value(const RootDatum& d, const Vec& lambda, const WeylElt& w);

// --- sigma and the orthogonal Whittaker value ---------------------------

// Normalizer N: the sigma deformed alternator of 1, pushed through the
// duality q -> 1/q, pi^mu -> pi^{-mu}.
RationalFunc sigma_normalizer();
// Unnormalized and normalized sigma values for dominant lambda of rank 2.
RationalFunc shalika_sigma_unnormalized(const Vec& lambda);
RationalFunc shalika_sigma_value(const Vec& lambda);

enum class WoGroup { C2, D3 };
struct WoOptions {
  WoGroup group = WoGroup::C2;
  bool prefactor = false;  // multiply by z1^{-2 lambda_1}
};
// A(z^rho z1^{l1} (1 - q^{-1} z1^{-1})) / A(z^rho), z_i = x_i; for D3 the
// result is specialised at z3 = 1.  lambda = (l1, 0[, 0]).
RationalFunc wo_value(const Vec& lambda, const WoOptions& opt = {});
// The Weyl character A(z^rho z1) / A(z^rho) used inside wo_value.
RationalFunc wo_character(WoGroup g);

// --- dual parameters ---------------------------------------------------

// Closed form for rank 2 rewritten in the dual parameters a1, a2 with
// x1 = a2/a1, x2 = 1/(a1 a2) (substitution), and the same formula built
// directly on the dual lattice.  Slots: xi1 <- a1, xi2 <- a2 (undoubled).
struct DualComparison {
  RationalFunc transported;
  RationalFunc native;
  RationalFunc ratio;
  bool ratio_is_monomial;
};
DualComparison dual_parameter_check(const Vec& lambda);

}  // namespace bh
