#include <catch_amalgamated.hpp>

#include <algorithm>

#include <surfbraid/symplectic.hpp>

#include "oracles.hpp"

using namespace surfbraid;

namespace {

  // [x, y0 + y1 + ...] for generator indices.
  SympElement bracket(int x, std::vector<int> const& ys) {
    SympElement e;
    for (int y : ys) {
      e.add({x, y}, 1);
      e.add({y, x}, -1);
    }
    return e;
  }

  bool contains(std::vector<SympRelation> const& rels, SympElement const& e) {
    SympElement neg;
    for (auto const& [w, c] : e.terms) {
      neg.add(w, -c);
    }
    return std::any_of(rels.begin(), rels.end(), [&](SympRelation const& r) {
      return r.element.terms == e.terms || r.element.terms == neg.terms;
    });
  }

}  // namespace

TEST_CASE("symplectic generators and degrees", "[symplectic]") {
  SympAlgebra alg({1, 1, 2}, {});
  auto const& gens = alg.generators();
  CHECK(gens.size() == 7);
  CHECK(std::count_if(gens.begin(), gens.end(), [](auto const& g) { return g.degree == 1; })
        == 4);
  CHECK(to_string(gens[static_cast<std::size_t>(alg.gen(SympKind::Zb, 3, 2))]) == "Z(3,2)");
  CHECK(alg.gen(SympKind::Z, 2, 1) == alg.gen(SympKind::Z, 1, 2));
  CHECK(alg.degree(SympWord{alg.gen(SympKind::A, 1, 1), alg.gen(SympKind::Z, 1, 2)}) == 3);

  SympAlgebra flat({0, 1, 3}, {true, true});
  for (auto const& g : flat.generators()) {
    CHECK(g.degree == 1);
  }
  CHECK_THROWS_AS(SympAlgebra({-1, 0, 2}, {}), ParameterError);
}

TEST_CASE("symplectic relation examples", "[symplectic]") {
  SECTION("one strand on a torus has only the commutator") {
    SympAlgebra alg({1, 0, 1}, {});
    auto const  rels = symp_relations({1, 0, 1}, 2);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].element.terms
          == bracket(alg.gen(SympKind::A, 1, 1), {alg.gen(SympKind::B, 1, 1)}).terms);
  }
  SECTION("the twist relation") {
    SympAlgebra alg({1, 0, 2}, {});
    auto        e = bracket(alg.gen(SympKind::A, 1, 1), {alg.gen(SympKind::B, 1, 2)});
    e.add({alg.gen(SympKind::Z, 1, 2)}, -1);
    auto const rels = symp_relations({1, 0, 2}, 2);
    CHECK(contains(rels, e));
    CHECK_FALSE(contains(symp_relations({1, 0, 2}, 2, {false, false}), e));
  }
  SECTION("the four-term relation") {
    SympAlgebra alg({0, 1, 3}, {});
    auto e = bracket(alg.gen(SympKind::Z, 1, 2),
                     {alg.gen(SympKind::Z, 2, 3), alg.gen(SympKind::Z, 1, 3)});
    CHECK(contains(symp_relations({0, 1, 3}, 4), e));
    CHECK_FALSE(contains(symp_relations({0, 1, 3}, 3), e));
  }
  SECTION("no twist relation without a handle") {
    for (auto const& r : symp_relations({0, 2, 3}, 4)) {
      CHECK(r.family != SympFamily::Twist);
    }
  }
  CHECK_THROWS_AS(symp_relations({1, 0, 2}, 1), ParameterError);
}

TEST_CASE("symplectic relations are homogeneous", "[symplectic]") {
  for (int g = 0; g <= 2; ++g) {
    for (int p = 0; p <= 2; ++p) {
      for (int n = 1; n <= 3; ++n) {
        for (bool regrade : {false, true}) {
          if (regrade && g > 0) {
            CHECK_THROWS_AS(SympAlgebra({g, p, n}, {true, regrade}), ParameterError);
            continue;
          }
          SympAlgebra alg({g, p, n}, {true, regrade});
          for (auto const& r : alg.relations()) {
            CHECK_NOTHROW(alg.degree(r.element));
            CHECK_FALSE(r.element.terms.empty());
          }
        }
      }
    }
  }
}

TEST_CASE("symplectic dimension examples", "[symplectic]") {
  for (SurfaceParams s : {SurfaceParams{1, 0, 2}, SurfaceParams{0, 3, 3}, SurfaceParams{2, 1, 1}}) {
    CHECK(symp_graded_dim(s, 0) == 1);
  }
  CHECK(symp_graded_dim({1, 0, 2}, 1) == 4);
  CHECK(symp_graded_dim({1, 0, 1}, 2) == 3);
  CHECK(symp_graded_dim({0, 2, 2}, 1) == 0);
  CHECK_THROWS_AS(symp_graded_dim({1, 0, 2}, -1), ParameterError);
  CHECK_THROWS_AS(symp_graded_dim({2, 2, 3}, 6, {}, 1000), ResourceError);
}

TEST_CASE("symplectic dimensions match the brute-force oracle", "[symplectic]") {
  for (int g = 0; g <= 1; ++g) {
    for (int p = 0; p <= 1; ++p) {
      for (int n = 1; n <= 2; ++n) {
        for (bool twist : {true, false}) {
          auto const P = oracle::symplectic(g, p, n, twist, false);
          for (int d = 0; d <= 4; ++d) {
            INFO("g=" << g << " p=" << p << " n=" << n << " twist=" << twist << " d=" << d);
            CHECK(symp_graded_dim({g, p, n}, d, {twist, false}) == P.dim(d));
          }
        }
      }
    }
  }
  auto const P = oracle::symplectic(1, 1, 3, true, false);
  for (int d = 0; d <= 3; ++d) {
    CHECK(symp_graded_dim({1, 1, 3}, d) == P.dim(d));
  }
}

TEST_CASE("dropping the twist relation never lowers a dimension", "[symplectic]") {
  for (SurfaceParams s : {SurfaceParams{1, 0, 2}, SurfaceParams{1, 1, 2}, SurfaceParams{2, 0, 2}}) {
    for (int d = 0; d <= 4; ++d) {
      CHECK(symp_graded_dim(s, d, {false, false}) >= symp_graded_dim(s, d, {true, false}));
    }
  }
  CHECK(symp_graded_dim({1, 0, 2}, 2, {false, false}) > symp_graded_dim({1, 0, 2}, 2));
}

TEST_CASE("regraded genus zero agrees with the chord algebra", "[symplectic]") {
  for (int n = 2; n <= 4; ++n) {
    auto const T = oracle::chord_algebra(n);
    for (int d = 0; d <= 2; ++d) {
      INFO("n=" << n << " d=" << d);
      CHECK(symp_graded_dim({0, 1, n}, d, {true, true}) == T.dim(d));
    }
  }
  CHECK(oracle::chord_algebra(3).dim(2) == 7);
  CHECK(oracle::chord_algebra(4).dim(2) == 25);
}

TEST_CASE("twist redundancy", "[symplectic]") {
  CHECK(symp_twist_redundancy({1, 0, 2}));
  CHECK(symp_twist_redundancy({1, 0, 3}));
  CHECK(symp_twist_redundancy({2, 1, 2}));
  CHECK_THROWS_AS(symp_twist_redundancy({0, 1, 2}), HypothesisError);
  CHECK_THROWS_AS(symp_twist_redundancy({1, 1, 1}), HypothesisError);
  CHECK(SympAlgebra({1, 0, 2}, {false, false}).twist_redundant());
  CHECK_FALSE(SympAlgebra({1, 1, 2}, {false, false}).twist_redundant());
}
