#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bh/error.hpp"
#include "bh/orbitcomb.hpp"

using namespace bh;

namespace {

Partition P(std::vector<int> v) { return make_partition(std::move(v)); }

std::vector<Partition> parts(const std::vector<OrbitLabel>& os) {
  std::vector<Partition> v;
  for (auto& o : os) v.push_back(o.p);
  return v;
}

Algebra alg_for(int N) { return N % 2 ? Algebra::B : Algebra::C; }

}  // namespace

TEST_CASE("partitions and parsing") {
  CHECK(P({1, 3, 0, 2}).parts == std::vector<int>{3, 2, 1});
  CHECK(parse_partition("[3^2,1]") == P({3, 3, 1}));
  CHECK(parse_partition("2,2,1") == P({2, 2, 1}));
  CHECK(P({2, 2, 1}).str() == "[2,2,1]");
  CHECK_THROWS_AS(parse_partition("3,,1"), MathError);
  CHECK_THROWS_AS(parse_partition("a"), MathError);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(12).size() == 77);
}

TEST_CASE("orbit enumeration") {
  CHECK(parts(enumerate_orbits(Algebra::C, 4)) ==
        std::vector<Partition>{P({4}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
  CHECK(parts(enumerate_orbits(Algebra::C, 2)) == std::vector<Partition>{P({2}), P({1, 1})});
  auto b7 = parts(enumerate_orbits(Algebra::B, 7));
  CHECK(b7.size() == 7);
  CHECK(std::find(b7.begin(), b7.end(), P({2, 2, 1, 1, 1})) != b7.end());
  CHECK_THROWS_AS(enumerate_orbits(Algebra::C, 5), MathError);
  CHECK_THROWS_AS(enumerate_orbits(Algebra::B, 4), MathError);
  CHECK_THROWS_AS(make_orbit(Algebra::C, P({3, 1})), MathError);
  for (int N = 1; N <= 12; ++N) {
    size_t brute = 0;
    for (auto& p : partitions_of(N)) brute += is_valid(alg_for(N), p);
    auto os = enumerate_orbits(alg_for(N), N);
    CHECK(os.size() == brute);
    // no later orbit strictly dominates an earlier one
    for (size_t i = 0; i < os.size(); ++i)
      for (size_t j = i + 1; j < os.size(); ++j)
        CHECK_FALSE((dominance_leq(os[i].p, os[j].p) && os[i].p != os[j].p));
  }
}

TEST_CASE("component groups by the quoted rule") {
  CHECK(component_group(make_orbit(Algebra::C, P({2, 2}))) == 1);
  CHECK(component_group(make_orbit(Algebra::C, P({4}))) == 0);
  // literal rule, which disagrees with "trivial except for [2^2]"
  CHECK(component_group(make_orbit(Algebra::C, P({1, 1, 1, 1}))) == 1);
  CHECK(component_group(make_orbit(Algebra::C, P({2, 1, 1}))) == 1);
  CHECK_THROWS_AS(component_group(make_orbit(Algebra::B, P({5}))), MathError);
}

TEST_CASE("transpose and dominance") {
  CHECK(transpose(P({2, 1, 1})) == P({3, 1}));
  CHECK(transpose(P({5})) == P({1, 1, 1, 1, 1}));
  for (int N = 1; N <= 12; ++N)
    for (auto& p : partitions_of(N)) CHECK(transpose(transpose(p)) == p);
  CHECK(dominance_leq(P({2, 2}), P({4})));
  CHECK_FALSE(dominance_leq(P({4}), P({2, 2})));
  CHECK(dominance_leq(P({2, 2, 1}), P({3, 1, 1})));
  CHECK_FALSE(dominance_leq(P({4, 1, 1}), P({3, 3})));
  CHECK_FALSE(dominance_leq(P({3, 3}), P({4, 1, 1})));
  CHECK_THROWS_AS(dominance_leq(P({2}), P({3})), MathError);
  for (int N = 1; N <= 10; ++N) {
    auto ps = partitions_of(N);
    for (auto& p : ps)
      for (auto& r : ps) CHECK(dominance_leq(p, r) == dominance_leq(transpose(r), transpose(p)));
  }
  auto sp6 = std::vector<Partition>{P({6}), P({4, 2}), P({3, 3}), P({2, 2, 2}), P({2, 2, 1, 1}),
                                    P({1, 1, 1, 1, 1, 1})};
  for (size_t k = 0; k + 1 < sp6.size(); ++k) CHECK(dominance_leq(sp6[k + 1], sp6[k]));
}

TEST_CASE("collapse") {
  CHECK(collapse(Algebra::C, P({3, 1})) == P({2, 2}));
  CHECK(collapse(Algebra::B, P({3, 2})) == P({3, 1, 1}));
  CHECK(collapse(Algebra::C, P({4, 2})) == P({4, 2}));
  CHECK_THROWS_AS(collapse(Algebra::C, P({3})), MathError);
  for (int N = 1; N <= 12; ++N)
    for (auto& p : partitions_of(N)) {
      Partition c = collapse(alg_for(N), p);
      CHECK(c == collapse_bruteforce(alg_for(N), p));
      CHECK(is_valid(alg_for(N), c));
      CHECK(dominance_leq(c, p));
    }
}

TEST_CASE("special orbits") {
  CHECK(parts(special_orbits(Algebra::C, 4)) ==
        std::vector<Partition>{P({4}), P({2, 2}), P({1, 1, 1, 1})});
  CHECK(parts(special_orbits(Algebra::C, 6)) ==
        std::vector<Partition>{P({6}), P({4, 2}), P({3, 3}), P({2, 2, 2}), P({2, 2, 1, 1}),
                               P({1, 1, 1, 1, 1, 1})});
  CHECK(parts(special_orbits(Algebra::B, 7)) ==
        std::vector<Partition>{P({7}), P({5, 1, 1}), P({3, 3, 1}), P({3, 2, 2}),
                               P({3, 1, 1, 1, 1}), P({1, 1, 1, 1, 1, 1, 1})});
}

TEST_CASE("duality") {
  CHECK(ls_dual(make_orbit(Algebra::B, P({3, 3, 1}))).p == P({3, 2, 2}));
  CHECK(ls_dual(make_orbit(Algebra::C, P({2, 1, 1}))).p == P({2, 2}));
  for (int N = 2; N <= 9; ++N) {
    auto sp = special_orbits(alg_for(N), N);
    for (auto& o : sp) {
      CHECK(ls_dual(ls_dual(o)).p == o.p);
      for (auto& r : sp)
        if (dominance_leq(o.p, r.p)) CHECK(dominance_leq(ls_dual(r).p, ls_dual(o).p));
    }
    for (auto& o : enumerate_orbits(alg_for(N), N))
      CHECK(is_special(o) == (ls_dual(ls_dual(o)).p == o.p));
  }
}

TEST_CASE("beta matching") {
  auto m = beta_match(special_orbits(Algebra::C, 4), special_orbits(Algebra::B, 5));
  REQUIRE(m.size() == 3);
  CHECK(m[0] == std::pair{P({4}), P({5})});
  CHECK(m[1] == std::pair{P({2, 2}), P({3, 1, 1})});
  CHECK(m[2] == std::pair{P({1, 1, 1, 1}), P({1, 1, 1, 1, 1})});
  auto m6 = beta_match(special_orbits(Algebra::C, 6), special_orbits(Algebra::B, 7));
  CHECK(m6[3] == std::pair{P({2, 2, 2}), P({3, 2, 2})});
  CHECK(m6[4] == std::pair{P({2, 2, 1, 1}), P({3, 1, 1, 1, 1})});
  auto one = std::vector<OrbitLabel>{make_orbit(Algebra::C, P({2}))};
  auto oneb = std::vector<OrbitLabel>{make_orbit(Algebra::B, P({3}))};
  CHECK(beta_match(one, oneb).size() == 1);
  CHECK_THROWS_AS(beta_match(special_orbits(Algebra::C, 4), special_orbits(Algebra::B, 7)),
                  MathError);
  // rank 4: specials of sp(8) are not a chain
  CHECK_THROWS_AS(beta_match(special_orbits(Algebra::C, 8), special_orbits(Algebra::B, 9)),
                  MathError);
}

TEST_CASE("fixtures") {
  const char* text =
      "# comment\n"
      "B 2 eps 2,2,1 1   # trailing\n"
      "\n"
      "C 2 1/1 2,2 sgn\n";
  SpringerFixture fx = parse_fixture(text);
  REQUIRE(fx.entries.size() == 2);
  CHECK(fx.find(Algebra::B, 2, "eps")->target == P({2, 2, 1}));
  CHECK(fx.find(Algebra::C, 2, "1/1")->component == "sgn");
  CHECK(fx.find(Algebra::B, 3, "eps") == nullptr);
  CHECK_THROWS_AS(parse_fixture("B 2 eps 3,1 1\n"), MathError);     // wrong size
  CHECK_THROWS_AS(parse_fixture("B 2 eps 2,2,1\n"), MathError);     // missing field
  CHECK_THROWS_AS(parse_fixture("C 2 1/2 2,2 1\n"), MathError);     // bipartition size
  CHECK_THROWS_AS(parse_fixture("A 2 eps 2,2,1 1\n"), MathError);
  CHECK_THROWS_AS(load_fixture("/nonexistent/fixture.txt"), MathError);
  CHECK_NOTHROW(load_fixture(default_fixture_path()));
}

TEST_CASE("pipeline") {
  SpringerFixture fx = load_fixture(default_fixture_path());
  auto t = conjecture_pipeline(HeckeChar::eps(), 3, fx);
  CHECK(t.springer == P({3, 3, 1}));
  CHECK(t.dual == P({3, 2, 2}));
  CHECK(t.result == P({2, 2, 2}));
  CHECK(conjecture_pipeline(HeckeChar::eps(), 2, fx).result == P({2, 2}));
  CHECK(conjecture_pipeline(HeckeChar::eps(), 2, fx).dual == P({3, 1, 1}));
  for (int n : {2, 3}) {
    CHECK(conjecture_pipeline(HeckeChar::triv(), n, fx).result == P(std::vector<int>(2 * n, 1)));
    CHECK(conjecture_pipeline(HeckeChar::sign(), n, fx).result == P({2 * n}));
    CHECK_THROWS_AS(conjecture_pipeline(HeckeChar::sigma(), n, fx), MathError);
  }
  CHECK_THROWS_AS(conjecture_pipeline(HeckeChar::eps(), 4, fx), MathError);
}
