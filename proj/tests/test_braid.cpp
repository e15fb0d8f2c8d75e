#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <surfbraid/braid.hpp>

using namespace surfbraid;

namespace {

  BraidWord bw(std::string const& text) {
    return parse_braid_word(text);
  }

  BraidWord random_braid(std::mt19937_64& rng, SurfaceParams const& s, int max_len) {
    std::vector<BraidLetter> alphabet;
    for (int i = 1; i < s.strands; ++i) {
      alphabet.push_back(sigma(i));
      alphabet.push_back(sigma(i, -1));
    }
    for (auto x : SurfaceGroup(s).letters()) {
      alphabet.push_back(from_pi1(x));
    }
    BraidWord out;
    int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int k = 0; k < len; ++k) {
      out.letters.push_back(
          alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
    }
    return out;
  }

  std::size_t count_family(std::vector<Relator> const& rels, RelatorFamily f) {
    return static_cast<std::size_t>(
        std::count_if(rels.begin(), rels.end(), [f](Relator const& r) { return r.family == f; }));
  }

}  // namespace

TEST_CASE("permutations", "[braid][permutation]") {
  auto s1 = Permutation::adjacent(3, 1);
  auto s2 = Permutation::adjacent(3, 2);
  CHECK(s1(1) == 2);
  CHECK(s1.sign() == -1);
  CHECK((s1 * s1).is_identity());
  CHECK((s1 * s2).sign() == 1);
  CHECK((s1 * s2 * s1) == (s2 * s1 * s2));
  CHECK(to_string(Permutation(3)) == "id");
  CHECK(to_string(s1) == "(1 2)");
  CHECK(s1.cycles(true) == "(1 2)(3)");
  CHECK(parse_permutation("(1 2)(3)", 3) == s1);
  CHECK(parse_permutation("id", 3).is_identity());
  CHECK(parse_permutation("(1,3)", 3) == Permutation::transposition(3, 1, 3));
  CHECK((s1 * s1.inverse()).is_identity());
  CHECK_THROWS_AS(parse_permutation("(1 4)", 3), ParseError);
}

TEST_CASE("braid word grammar", "[braid]") {
  CHECK(to_string(bw("s1 s1^-1 a1 b1^-1 z1")) == "s1 s1^-1 a1 b1^-1 z1");
  CHECK(to_string(parse_braid_word("x1 s2", true)) == "x1 s2");
  CHECK_THROWS_AS(bw("x1"), ParseError);
  CHECK_THROWS_AS(bw("s0"), InvalidGenerator);
  CHECK_THROWS_AS(parse_braid_word("s3", SurfaceParams{1, 1, 3}), InvalidGenerator);
  CHECK_THROWS_AS(parse_braid_word("a2", SurfaceParams{1, 1, 3}), InvalidGenerator);
  CHECK(to_string(inverse(bw("s1 a1"))) == "a1^-1 s1^-1");
  CHECK(to_string(free_reduce(bw("s1 a1 a1^-1 s1^-1 b1"))) == "b1");
}

TEST_CASE("relator lists", "[braid]") {
  SECTION("g=1, p=1, n=2") {
    auto rels = relators({1, 1, 2});
    CHECK(count_family(rels, RelatorFamily::Braid) == 0);
    CHECK(count_family(rels, RelatorFamily::Commutativity) == 2);
    CHECK(count_family(rels, RelatorFamily::SkewHandle) == 1);
    CHECK(count_family(rels, RelatorFamily::Closed) == 0);
  }
  SECTION("g=0, p=1, n=3") {
    auto rels = relators({0, 1, 3});
    REQUIRE(rels.size() == 1);
    CHECK(family_tag(rels[0].family) == "2.i");
    CHECK(to_string(rels[0].word) == "s1 s2 s1 s2^-1 s1^-1 s2^-1");
  }
  SECTION("g=1, p=0, n=2") {
    auto rels = relators({1, 0, 2});
    auto it   = std::find_if(rels.begin(), rels.end(),
                             [](Relator const& r) { return r.family == RelatorFamily::Closed; });
    REQUIRE(it != rels.end());
    CHECK(to_string(it->word) == "a1 b1^-1 a1^-1 b1 s1^-1 s1^-1");
  }
  SECTION("the skew handle relator") {
    auto rels = relators({2, 1, 2});
    CHECK(count_family(rels, RelatorFamily::SkewHandle) == 2);
    auto it = std::find_if(rels.begin(), rels.end(), [](Relator const& r) {
      return r.family == RelatorFamily::SkewHandle;
    });
    CHECK(to_string(it->word) == "s1^-1 s1^-1 a1 s1^-1 b1 s1^-1 a1^-1 s1 b1^-1 s1");
  }
}

TEST_CASE("eps0 examples", "[braid]") {
  SurfaceParams const s{1, 1, 2};
  auto const          e1 = epsilon0(bw("s1"), s);
  CHECK(e1.perm == Permutation::adjacent(2, 1));
  CHECK(std::all_of(e1.beads.begin(), e1.beads.end(), [](auto const& b) { return b.empty(); }));
  CHECK(to_string(epsilon0(bw("a1"), s)) == "beads=(a1,1) perm=(1)(2)");
  // (1;s)(b1,1;id)(1;s) = ((1,b1);s)(1;s) = ((1,b1);id).
  CHECK(to_string(epsilon0(bw("s1^-1 b1 s1^-1"), s)) == "beads=(1,b1) perm=(1)(2)");
  CHECK(epsilon0(bw("s1 s1"), s).is_identity());
}

TEST_CASE("bounded equality examples", "[braid]") {
  SurfaceParams const s{1, 1, 3};
  auto r0 = bounded_equal(bw("s1 a1"), bw("s1 a1"), s, 0);
  CHECK(r0.equal);
  CHECK(r0.moves.empty());
  auto r1 = bounded_equal(bw("a1 s1^-1 b1 s1^-1 a1^-1 s1 b1^-1 s1"), bw("s1 s1"), s, 1);
  CHECK(r1.equal);
  CHECK(r1.moves.size() == 1);
  auto r2 = bounded_equal(bw("s1 s2 s1"), bw("s2 s1 s2"), s, 1);
  CHECK(r2.equal);
  auto r3 = bounded_equal(bw("s1"), bw("s2"), s, 1, 10000);
  CHECK_FALSE(r3.equal);
}

TEST_CASE("bounded equality moves replay", "[braid]") {
  SurfaceParams const s{1, 1, 3};
  auto const          rels = relators(s);
  BraidWord const     u    = bw("s1 s2 s1 a1");
  BraidWord const     v    = bw("s2 s1 s2 a1");
  auto const          r    = bounded_equal(u, v, s, 2);
  REQUIRE(r.equal);
  BraidWord cur = free_reduce(u);
  for (auto const& m : r.moves) {
    auto next = apply_move(cur, m, rels);
    REQUIRE(next.has_value());
    cur = *next;
  }
  CHECK(cur == free_reduce(v));
}

TEST_CASE("eps0 is a homomorphism", "[braid][property]") {
  std::mt19937_64 rng(Catch::getSeed());
  for (auto const& s : {SurfaceParams{1, 1, 3}, SurfaceParams{2, 0, 3}, SurfaceParams{0, 3, 4}}) {
    SurfaceGroup const g(s);
    for (int trial = 0; trial < 200; ++trial) {
      auto u = random_braid(rng, s, 8), v = random_braid(rng, s, 8);
      CHECK(epsilon0(u * v, s) == wreath_mul(epsilon0(u, s), epsilon0(v, s), g));
      CHECK(wreath_mul(epsilon0(u, s), epsilon0(inverse(u), s), g).is_identity());
    }
  }
}

TEST_CASE("eps0 kills every relator", "[braid][property]") {
  for (int g = 0; g <= 2; ++g) {
    for (int p = 0; p <= 2; ++p) {
      for (int n = 2; n <= 4; ++n) {
        SurfaceParams const s{g, p, n};
        for (auto const& r : relators(s)) {
          INFO(to_string(s) << " " << family_tag(r.family) << " " << to_string(r.word));
          CHECK(epsilon0(r.word, s).is_identity());
        }
      }
    }
  }
}

TEST_CASE("eps0 permutation reads the sigma letters only", "[braid][property]") {
  std::mt19937_64     rng(Catch::getSeed());
  SurfaceParams const s{2, 1, 4};
  for (int trial = 0; trial < 200; ++trial) {
    auto        u = random_braid(rng, s, 12);
    Permutation expected(s.strands);
    for (auto const& x : u.letters) {
      if (x.kind == LetterKind::Sigma) {
        expected = expected * Permutation::adjacent(s.strands, x.index);
      }
    }
    CHECK(epsilon0(u, s).perm == expected);
  }
}

TEST_CASE("bounded equality is sound for eps0", "[braid][property]") {
  std::mt19937_64     rng(Catch::getSeed());
  SurfaceParams const s{1, 0, 3};
  auto const          rels = relators(s);
  for (int trial = 0; trial < 30; ++trial) {
    auto u = random_braid(rng, s, 4);
    Move m;
    m.kind     = MoveKind::Insert;
    m.relator  = std::uniform_int_distribution<std::size_t>(0, rels.size() - 1)(rng);
    m.rotation = 0;
    m.position = std::uniform_int_distribution<std::size_t>(0, u.size())(rng);
    auto v     = *apply_move(u, m, rels);
    auto r     = bounded_equal(u, v, s, 1);
    INFO("u = " << to_string(u) << ", v = " << to_string(v) << ", nodes " << r.nodes_explored);
    REQUIRE(r.equal);
    CHECK(epsilon0(u, s) == epsilon0(v, s));
  }
}
