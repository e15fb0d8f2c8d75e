#include <catch_amalgamated.hpp>

#include <random>

#include <surfbraid/braid.hpp>
#include <surfbraid/ideal.hpp>

using namespace surfbraid;

namespace {

  using Diag = WreathDiagram<Rational>;

  Truncation const kDefault{2, 4};

  Diag d(std::string const& text, int n, Truncation t = kDefault) {
    return parse_wreath_diagram<Rational>(text, n, t);
  }

  Diag gmp(int i, int j, Pi1Word const& gamma, SurfaceParams const& s, Truncation t = kDefault) {
    return gmp_generator<Rational>(i, j, gamma, s, t);
  }

  // A random element of the ideal: a few terms m . r . m' with small
  // monomials m, m' and relation instances r of chord degree <= 1.
  Diag random_ideal_element(std::mt19937_64& rng, SurfaceParams const& s, Truncation t) {
    auto const refs    = relation_refs(s, Truncation{1, 2},
                                       {RelationFamily::BeadBead, RelationFamily::BeadPush,
                                        RelationFamily::BeadFar, RelationFamily::ClosedSum});
    auto const letters = SurfaceGroup(s).letters();
    auto pick = [&](std::size_t m) {
      return std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    };
    auto side = [&]() {
      DiagMonomial m;
      if (pick(2) == 0) {
        m.symbols.push_back(
            DiagSymbol::bead(static_cast<int>(pick(static_cast<std::size_t>(s.strands))) + 1,
                             letters[pick(letters.size())]));
      }
      return Diag::monomial(s.strands, t, m, Permutation(s.strands));
    };
    Diag out(s.strands, t);
    int  terms = 1 + static_cast<int>(pick(2));
    for (int k = 0; k < terms; ++k) {
      auto r = relation_element<Rational>(refs[pick(refs.size())], s, t);
      out += Rational(static_cast<long>(pick(5)) - 2) * diag_mul(diag_mul(side(), r), side());
    }
    return out;
  }

}  // namespace

TEST_CASE("zero is a member with an empty certificate", "[ideal]") {
  SurfaceParams s{1, 1, 2};
  auto          r = ideal_member(Diag(2, kDefault), s, kDefault, 4);
  CHECK(r.member);
  CHECK(r.certificate.empty());
}

TEST_CASE("a relation instance is a member", "[ideal]") {
  SurfaceParams s{1, 1, 2};
  auto x = d("a1@1 a1@2 Z(1,2) + -1 * Z(1,2) a1@1 a1@2", 2);
  for (int w = 4; w <= 6; ++w) {
    auto r = ideal_member(x, s, kDefault, w);
    CHECK(r.member);
    CHECK_FALSE(r.certificate.empty());
  }
  RelationRef push{RelationFamily::BeadPush, {1, 2}, {pi1::b(1, true)}};
  CHECK(ideal_member(relation_element<Rational>(push, s, kDefault), s, kDefault, 4).member);
}

TEST_CASE("the additive bead push is not in the ideal", "[ideal]") {
  SurfaceParams s{1, 1, 2};
  auto x = d("a1@1 Z(1,2) + a1@2 Z(1,2) + -1 * Z(1,2) a1@1 + -1 * Z(1,2) a1@2", 2);
  CHECK_FALSE(ideal_member(x, s, kDefault, 6).member);
}

TEST_CASE("conjugated chords with inverse beads agree", "[ideal]") {
  SurfaceParams s{1, 1, 2};
  auto x = d("a1@1 Z(1,2) a1^-1@1 + -1 * a1^-1@2 Z(1,2) a1@2", 2);
  for (int w = 5; w <= 6; ++w) {
    auto r = ideal_member(x, s, kDefault, w);
    CHECK(r.member);
  }
}

TEST_CASE("gmp_generator(2,1,g) equals gmp_generator(1,2,g^-1)", "[ideal]") {
  for (SurfaceParams s : {SurfaceParams{1, 1, 2}, SurfaceParams{1, 0, 2}, SurfaceParams{2, 1, 3},
                          SurfaceParams{0, 3, 2}}) {
    SurfaceGroup const group(s);
    IdealEngine const  engine(s, kDefault);
    for (auto x : group.letters()) {
      Pi1Word g{x};
      auto    r = engine.member(gmp(2, 1, g, s) - gmp(1, 2, group.inv(g), s),
                                MembershipOptions{6});
      CHECK(r.member);
    }
  }
}

TEST_CASE("nonzero elements are not found", "[ideal]") {
  SurfaceParams s{1, 1, 2};
  for (int w = 4; w <= 6; ++w) {
    CHECK_FALSE(ideal_member(d("Z(1,2)", 2), s, kDefault, w).member);
    CHECK_FALSE(ideal_member(d("1 ; perm=(1 2)", 2), s, kDefault, w).member);
    CHECK_FALSE(ideal_member(d("a1@1", 2), s, kDefault, w).member);
  }
  CHECK_FALSE(ideal_member(d("a1@1 Z(1,2) + -1 * Z(1,2) a1@1", 2), s, kDefault, 6).member);
}

TEST_CASE("window smaller than the truncation is rejected", "[ideal]") {
  SurfaceParams s{1, 1, 2};
  CHECK_THROWS_AS(ideal_member(d("Z(1,2)", 2), s, kDefault, 3), ParameterError);
  CHECK_THROWS_AS(ideal_member(d("Z(1,2)", 3), s, kDefault, 6), DimensionError);
}

TEST_CASE("certificates re-expand and tampering is caught", "[ideal]") {
  SurfaceParams     s{1, 1, 3};
  IdealEngine const engine(s, kDefault);
  auto x = gmp(1, 2, Pi1Word{pi1::a(1)}, s) - gmp(2, 1, Pi1Word{pi1::a(1, true)}, s);
  auto r = engine.member(x, MembershipOptions{6});
  REQUIRE(r.member);
  REQUIRE_FALSE(r.certificate.empty());
  CHECK(engine.verify(x, r.certificate));

  auto scaled = r.certificate;
  scaled.front().coef *= 2;
  CHECK_FALSE(engine.verify(x, scaled));

  auto dropped = r.certificate;
  dropped.pop_back();
  CHECK_FALSE(engine.verify(x, dropped));

  CHECK_FALSE(engine.verify(x + d("Z(1,2)", 3), r.certificate));
  CHECK(engine.verify(Diag(3, kDefault), {}));
}

TEST_CASE("membership is monotone in the window", "[ideal][property]") {
  std::mt19937_64 rng(Catch::getSeed());
  for (SurfaceParams s : {SurfaceParams{1, 1, 2}, SurfaceParams{2, 0, 2}}) {
    IdealEngine const engine(s, kDefault);
    for (int trial = 0; trial < 20; ++trial) {
      auto x      = random_ideal_element(rng, s, kDefault);
      bool before = false;
      for (int w = 4; w <= 6; ++w) {
        auto r = engine.member(x, MembershipOptions{w});
        if (before) {
          CHECK(r.member);
        }
        before = before || r.member;
      }
      CHECK(before);
    }
  }
}

TEST_CASE("the symbol respects relator moves", "[ideal][property]") {
  std::mt19937_64 rng(Catch::getSeed());
  SurfaceParams   s{1, 1, 2};
  auto const      rels = relators(s);
  REQUIRE_FALSE(rels.empty());
  std::vector<BraidLetter> alphabet{sigma(1), sigma(1, -1), gen_a(1), gen_b(1), gen_a(1, -1)};
  auto pick = [&](std::size_t m) {
    return std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
  };
  IdealEngine const engine(s, kDefault);
  for (int trial = 0; trial < 10; ++trial) {
    BraidWord u;
    u.letters.push_back(alphabet[pick(alphabet.size())]);
    JSummand<Integer> base{Integer(1), u, 1, BraidWord{sigma(1)}};
    JSummand<Integer> moved = base;
    Move m;
    m.kind     = MoveKind::Insert;
    m.relator  = pick(rels.size());
    m.inverted = pick(2) == 1;
    m.rotation = pick(rels[m.relator].word.size());
    m.position = pick(moved.u.size() + 1);
    moved.u    = *apply_move(moved.u, m, rels);
    auto x = degree_one_symbol(JExpression<Integer>{{base}}, s, kDefault);
    auto y = degree_one_symbol(JExpression<Integer>{{moved}}, s, kDefault);
    auto r = engine.member(x - y, MembershipOptions{6});
    CHECK(r.member);
  }
}
