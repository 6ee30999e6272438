#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bh/error.hpp"
#include "bh/rootweyl.hpp"

#include <set>

using namespace bh;

namespace {

bool is_root(const RootDatum& d, const Vec& v) {
  for (auto& a : d.positive) {
    if (a.xi == v) return true;
    Vec n = a.xi;
    for (auto& x : n) x = -x;
    if (n == v) return true;
  }
  return false;
}

int inversions(const RootDatum& d, const SignedPerm& g) {
  int c = 0;
  for (auto& a : d.positive) c += !is_positive(act(g, a.xi));
  return c;
}

}  // namespace

TEST_CASE("C2 root datum") {
  RootDatum d = build_root_datum(Family::C, 2);
  CHECK(d.positive.size() == 4);
  int longs = 0;
  for (auto& a : d.positive) longs += a.is_long;
  CHECK(longs == 2);
  CHECK_FALSE(d.simple(1).is_long);
  CHECK(d.simple(2).is_long);
  CHECK(d.rho == Vec{3, 1});
  CHECK(d.rho_eps == Vec{1, 1});
  // short = {a1, a1 + a2}, long = {a2, 2 a1 + a2}
  std::set<Vec> shorts, ls;
  for (auto& a : d.positive) (a.is_long ? ls : shorts).insert(a.xi);
  CHECK(shorts == std::set<Vec>{{2, -2}, {2, 2}});
  CHECK(ls == std::set<Vec>{{0, 2}, {2, 0}});
}

TEST_CASE("rank ranges and root counts") {
  for (int n = 2; n <= 4; ++n) {
    RootDatum d = build_root_datum(Family::C, n);
    CHECK(int(d.positive.size()) == n * n);
    Vec rho(n);
    for (int i = 0; i < n; ++i) rho[i] = 2 * (n - i) - 1;
    CHECK(d.rho == rho);
    CHECK(d.rho_eps == Vec(n, 1));
  }
  RootDatum d3 = build_root_datum(Family::D, 3);
  CHECK(d3.positive.size() == 6);
  CHECK(d3.rho == Vec{4, 2, 0});
  CHECK_THROWS_AS(build_root_datum(Family::C, 1), MathError);
  CHECK_THROWS_AS(build_root_datum(Family::D, 2), MathError);
  CHECK_THROWS_AS(build_root_datum(Family::C, 8), MathError);
}

TEST_CASE("group orders and longest elements") {
  CHECK(enumerate_weyl(build_root_datum(Family::C, 2)).elts.size() == 8);
  WeylGroup g3 = enumerate_weyl(build_root_datum(Family::C, 3));
  CHECK(g3.elts.size() == 48);
  CHECK(g3.longest().length == 9);
  CHECK(enumerate_weyl(build_root_datum(Family::D, 3)).elts.size() == 24);
  CHECK(enumerate_weyl(build_root_datum(Family::C, 4)).elts.size() == 384);
  for (int n : {2, 3}) {
    WeylGroup G = enumerate_weyl(build_root_datum(Family::C, n));
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = 3 * i + 1;
    Vec w = act(G.longest(), v);
    for (int i = 0; i < n; ++i) CHECK(w[i] == -v[i]);
  }
}

TEST_CASE("simple reflections") {
  RootDatum d = build_root_datum(Family::C, 2);
  CHECK(act(simple_reflection(d, 2), Vec{0, 2}) == Vec{0, -2});
  CHECK(act(simple_reflection(d, 1), Vec{3, 1}) == Vec{1, 3});
  for (int n = 2; n <= 4; ++n) {
    RootDatum e = build_root_datum(Family::C, n);
    for (int i = 1; i <= n; ++i) {
      Vec r = act(simple_reflection(e, i), e.rho);
      for (int k = 0; k < n; ++k) CHECK(r[k] == e.rho[k] - e.simple(i).xi[k]);
      Vec re = act(simple_reflection(e, i), e.rho_eps);
      for (int k = 0; k < n; ++k)
        CHECK(re[k] == e.rho_eps[k] - (i == n ? e.simple(i).xi[k] : 0));
    }
  }
}

TEST_CASE("lengths, words and the root permutation") {
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{{Family::C, 2}, {Family::C, 3}, {Family::D, 3}}) {
    RootDatum d = build_root_datum(fam, n);
    WeylGroup G = enumerate_weyl(d);
    std::set<std::string> seen;
    for (auto& w : G.elts) {
      CHECK(int(w.word.size()) == w.length);
      CHECK(inversions(d, w.g) == w.length);
      CHECK(length_of(d, inverse(w.g)) == w.length);
      auto p = word_product(d, w.word);
      CHECK(p.perm == w.g.perm);
      CHECK(p.signs == w.g.signs);
      for (auto& a : d.positive) CHECK(is_root(d, act(w, a.xi)));
      if (fam == Family::D) {
        int neg = 0;
        for (int s : w.g.signs) neg += s < 0;
        CHECK(neg % 2 == 0);
      }
      if (w.parent >= 0) CHECK(G.elts[w.parent].length == w.length - 1);
    }
    // sign is multiplicative
    for (auto& a : G.elts)
      for (auto& b : G.elts) {
        int l = length_of(d, compose(a.g, b.g));
        CHECK((l % 2 ? -1 : 1) == a.sign() * b.sign());
      }
    CHECK(G.elts.front().length == 0);
  }
}

TEST_CASE("action law") {
  RootDatum d = build_root_datum(Family::C, 3);
  WeylGroup G = enumerate_weyl(d);
  Vec v{5, -1, 2};
  for (size_t a = 0; a < G.elts.size(); a += 5)
    for (size_t b = 0; b < G.elts.size(); b += 7)
      CHECK(act(compose(G.elts[a].g, G.elts[b].g), v) == act(G.elts[a], act(G.elts[b], v)));
  CHECK_THROWS(act(G.elts[1], Vec{1, 2}));
}
