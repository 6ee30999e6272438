#pragma once
// Root data and Weyl groups of types C_n and D_n in the doubled (xi) lattice.

#include "bh/symfrac.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace bh {

enum class Family { C, D };

struct Coroot {
  Vec xi;        // xi-exponent of pi^{alpha^vee}
  bool is_long;  // length class of the root alpha
};

struct RootDatum {
  Family family;
  int n;
  std::vector<Coroot> positive;  // positive roots, by coroot exponent
  std::vector<int> simples;      // simples[i-1] indexes `positive`, i = 1..n
  Vec rho;                       // xi-exponent of pi^{rho^vee}
  Vec rho_eps;                   // half the long positive coroots (type C)

  const Coroot& simple(int i) const { return positive.at(simples.at(i - 1)); }
  std::string name() const;
};

RootDatum build_root_datum(Family f, int n);

bool is_positive(const Vec& v);  // first nonzero coordinate positive

struct WeylElt {
  SignedPerm g;
  int length = 0;
  std::vector<int> word;  // lex-smallest reduced word, 1-based letters
  int parent = -1;        // index of s_{word[0]} * w in the enumeration
  int sign() const { return length % 2 ? -1 : 1; }
};

Vec act(const SignedPerm& g, const Vec& v);
inline Vec act(const WeylElt& w, const Vec& v) { return act(w.g, v); }
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a*b
SignedPerm inverse(const SignedPerm& a);
SignedPerm identity_perm(int n);
SignedPerm simple_reflection(const RootDatum& d, int i);
int length_of(const RootDatum& d, const SignedPerm& g);

// Product of simple reflections s_{w1} s_{w2} ... ; words are 1-based.
SignedPerm word_product(const RootDatum& d, const std::vector<int>& word);

// Enumerated group, sorted by (length, word) so that parents precede children.
struct WeylGroup {
  RootDatum datum;
  std::vector<WeylElt> elts;
  int index_of(const SignedPerm& g) const;
  const WeylElt& longest() const { return elts.back(); }

private:
  friend WeylGroup enumerate_weyl(const RootDatum& d);
  std::unordered_map<std::string, int> index_;
};

WeylGroup enumerate_weyl(const RootDatum& d);

}  // namespace bh
