// Acceptance gate: one PASS/FAIL line per criterion.  Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <surfbraid/surfbraid.hpp>

#include "oracles.hpp"

namespace {

  using namespace surfbraid;
  using Clock = std::chrono::steady_clock;

  constexpr std::uint64_t kSeed = 20240611;

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
  }

  std::vector<SurfaceParams> const kTheoremSurfaces = {
      {1, 1, 2}, {1, 0, 2}, {2, 1, 3}, {1, 0, 3}, {2, 0, 2}};
  std::vector<SurfaceParams> const kGenusZeroSurfaces = {{0, 1, 2}, {0, 2, 3}};

  JExpression<Integer> sigma_square_minus_one() {
    return {{JSummand<Integer>{Integer(1), {}, 1, {sigma(1)}}}};
  }

  WreathDiagram<Integer> z12(int n, Truncation t) {
    return WreathDiagram<Integer>::monomial(n, t, DiagMonomial{{DiagSymbol::chord(1, 2)}},
                                            Permutation(n));
  }

  // 1. The obstruction pipeline.
  Outcome criterion1() {
    int         bad = 0;
    double      slowest = 0;
    std::string notes;
    auto run = [&](SurfaceParams const& s, Verdict want) {
      auto t0  = Clock::now();
      auto rep = verify_nonexistence(s);
      double dt = seconds_since(t0);
      slowest   = std::max(slowest, dt);
      if (rep.verdict != want || dt >= 30.0) {
        ++bad;
        notes += " " + to_string(s) + "->" + to_string(rep.verdict);
      }
    };
    for (auto const& s : kTheoremSurfaces) {
      run(s, Verdict::ObstructionEstablished);
    }
    for (auto const& s : kGenusZeroSurfaces) {
      run(s, Verdict::HypothesisNotMet);
    }
    return {bad == 0, std::to_string(kTheoremSurfaces.size() + kGenusZeroSurfaces.size())
                          + " surfaces, slowest " + fmt_seconds(slowest) + notes};
  }

  // 2. eps0 kills every relator.
  Outcome criterion2() {
    std::size_t checked = 0, failures = 0;
    for (int g = 0; g <= 2; ++g) {
      for (int p = 0; p <= 2; ++p) {
        for (int n = 2; n <= 4; ++n) {
          SurfaceParams const s{g, p, n};
          for (auto const& r : relators(s)) {
            ++checked;
            if (!epsilon0(r.word, s).is_identity()) {
              ++failures;
            }
          }
        }
      }
    }
    return {failures == 0 && checked > 0, std::to_string(checked) + " relators, "
                                              + std::to_string(failures) + " failures"};
  }

  // 3. Symbol of sigma_1^2 - 1 is (Z12; id) with a nonzero disk augmentation.
  Outcome criterion3() {
    Truncation const t{};
    int              bad = 0;
    std::size_t      certs = 0;
    for (auto const& s : kTheoremSurfaces) {
      auto sym = degree_one_symbol(sigma_square_minus_one(), s, t);
      auto mem = ideal_equal(sym, z12(s.strands, t), s, t, 6);
      auto aug = disk_nonzero_certificate(sym);
      certs += mem.certificate.size();
      if (!mem.member || !aug || aug->second == 0) {
        ++bad;
      }
    }
    return {bad == 0, std::to_string(kTheoremSurfaces.size())
                          + " surfaces; symbol minus (Z12; id) is exactly zero, certificates "
                            "of total length "
                          + std::to_string(certs)};
  }

  // 4. The three GMP relation families at window 6.
  Outcome criterion4() {
    Truncation const t{2, 6};
    std::size_t      checks = 0, not_found = 0, certified_rows = 0;
    auto             t0 = Clock::now();
    for (auto [g, p] : std::vector<std::pair<int, int>>{{1, 1}, {1, 0}, {2, 1}, {2, 0}}) {
      for (int n = 2; n <= 3; ++n) {
        SurfaceParams const s{g, p, n};
        SurfaceGroup const  group(s);
        IdealEngine const   engine(s, t);
        std::vector<Pi1Word> letters;
        for (auto x : group.letters()) {
          letters.push_back(Pi1Word{x});
        }
        auto gmp = [&](int i, int j, Pi1Word const& gam) {
          return gmp_generator<Rational>(i, j, gam, s, t);
        };
        auto check = [&](WreathDiagram<Rational> const& x) {
          ++checks;
          auto r = engine.member(x, MembershipOptions{6});
          certified_rows += r.certificate.size();
          if (!r.member) {
            ++not_found;
          }
        };
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) {
            if (i == j) {
              continue;
            }
            for (auto const& gam : letters) {
              check(gmp(i, j, gam) - gmp(j, i, group.inv(gam)));
            }
            for (int k = 1; k <= n; ++k) {
              for (int l = 1; l <= n; ++l) {
                if (k == l || k == i || k == j || l == i || l == j) {
                  continue;
                }
                for (auto const& gam : letters) {
                  for (auto const& del : letters) {
                    auto x = gmp(i, j, gam), y = gmp(k, l, del);
                    check(x * y - y * x);
                  }
                }
              }
              if (k == i || k == j) {
                continue;
              }
              for (auto const& gam : letters) {
                for (auto const& del : letters) {
                  auto x = gmp(i, j, gam);
                  auto y = gmp(j, k, del) + gmp(i, k, Pi1Word{gam.letters[0], del.letters[0]});
                  check(x * y - y * x);
                }
              }
            }
          }
        }
      }
    }
    return {not_found == 0 && checks > 0,
            std::to_string(checks) + " instances, " + std::to_string(not_found)
                + " not found, " + std::to_string(certified_rows) + " certificate rows, "
                + fmt_seconds(seconds_since(t0))};
  }

  // 5. The symbol does not depend on the words chosen for u and v.
  Outcome criterion5() {
    Truncation const t{};
    std::mt19937_64  rng(kSeed);
    std::size_t      pairs = 0, bad = 0, expected = 0;
    std::string      skipped;
    std::vector<SurfaceParams> surfaces = kTheoremSurfaces;
    surfaces.insert(surfaces.end(), kGenusZeroSurfaces.begin(), kGenusZeroSurfaces.end());
    for (auto const& s : surfaces) {
      auto const rels = relators(s);
      if (rels.empty()) {
        skipped += " " + to_string(s);
        continue;
      }
      expected += 50;
      std::vector<BraidLetter> alphabet;
      for (int i = 1; i < s.strands; ++i) {
        alphabet.push_back(sigma(i));
        alphabet.push_back(sigma(i, -1));
      }
      for (auto x : SurfaceGroup(s).letters()) {
        alphabet.push_back(from_pi1(x));
      }
      auto pick = [&](std::size_t m) {
        return std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
      };
      for (int trial = 0; trial < 50; ++trial) {
        BraidWord u, v;
        u.letters.push_back(alphabet[pick(alphabet.size())]);
        v.letters.push_back(alphabet[pick(alphabet.size())]);
        JSummand<Integer> base{Integer(1), u, 1, v * BraidWord{sigma(1)}};
        JSummand<Integer> moved = base;
        Move m;
        m.kind     = MoveKind::Insert;
        m.relator  = pick(rels.size());
        m.inverted = pick(2) == 1;
        m.rotation = pick(rels[m.relator].word.size());
        BraidWord& target = pick(2) == 0 ? moved.u : moved.v;
        m.position        = pick(target.size() + 1);
        target            = *apply_move(target, m, rels);
        try {
          auto x = degree_one_symbol(JExpression<Integer>{{base}}, s, t);
          auto y = degree_one_symbol(JExpression<Integer>{{moved}}, s, t);
          ++pairs;
          if (!ideal_equal(x, y, s, t, 6).member) {
            ++bad;
          }
        } catch (OverflowError const&) {
          ++bad;
        }
      }
    }
    return {bad == 0 && pairs == expected && expected > 0,
            std::to_string(pairs) + " rewritten pairs, " + std::to_string(bad) + " unequal"
                + (skipped.empty() ? std::string() : "; no relators on" + skipped)};
  }

  // 6. H1: relations and commutators die, Z12 survives, tau^2 = 1, no torsion.
  Outcome criterion6() {
    Truncation const t{};
    std::mt19937_64  rng(kSeed + 6);
    std::size_t      rel_checked = 0, comm_checked = 0, bad = 0;
    std::string      notes;
    for (auto const& s : kTheoremSurfaces) {
      for (auto const& inst : relation_instances(s, t)) {
        ++rel_checked;
        if (!h1_image(inst.element, s).is_zero()) {
          ++bad;
        }
      }
      auto const letters = SurfaceGroup(s).letters();
      auto pick = [&](std::size_t m) {
        return std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
      };
      auto random_mono = [&]() {
        DiagMonomial m;
        int len = static_cast<int>(pick(3));
        for (int k = 0; k < len; ++k) {
          int i = static_cast<int>(pick(static_cast<std::size_t>(s.strands))) + 1;
          m.symbols.push_back(DiagSymbol::bead(i, letters[pick(letters.size())]));
        }
        if (pick(2) == 0) {
          int i = static_cast<int>(pick(static_cast<std::size_t>(s.strands - 1))) + 1;
          m.symbols.push_back(DiagSymbol::chord(i, i + 1));
        }
        Permutation perm(s.strands);
        if (pick(2) == 0) {
          perm = Permutation::adjacent(s.strands, static_cast<int>(pick(
                                                      static_cast<std::size_t>(s.strands - 1)))
                                                      + 1);
        }
        return WreathDiagram<Integer>::monomial(s.strands, t, m, perm);
      };
      for (int trial = 0; trial < 50; ++trial) {
        auto x = random_mono(), y = random_mono();
        ++comm_checked;
        if (!h1_image(x * y - y * x, s).is_zero()) {
          ++bad;
        }
      }
      auto sym = degree_one_symbol(sigma_square_minus_one(), s, t);
      auto h   = h1_class(sym, s);
      auto z   = h1_class(z12(s.strands, t), s);
      if (!(h == z) || z.is_zero()) {
        ++bad;
        notes += " Z12 failed on " + to_string(s);
      }
      for (int i = 1; i < s.strands; ++i) {
        for (int j = i + 1; j <= s.strands; ++j) {
          auto tr = WreathDiagram<Integer>::monomial(s.strands, t, {},
                                                     Permutation::transposition(s.strands, i, j));
          auto one = WreathDiagram<Integer>::monomial(s.strands, t, {}, Permutation(s.strands));
          if (!(h1_class(tr * tr, s) == h1_class(one, s)) || h1_class(tr, s) == h1_class(one, s)) {
            ++bad;
            notes += " tau failed";
          }
        }
      }
    }
    std::size_t torsion_columns = 0;
    std::string torsion_note;
    for (auto const& s : kTheoremSurfaces) {
      auto rep = degree_one_torsion(s, t);
      torsion_columns += rep.columns;
      if (!rep.torsion_free) {
        ++bad;
        torsion_note += " torsion on " + to_string(s);
      }
    }
    return {bad == 0, std::to_string(rel_checked) + " relation instances, "
                          + std::to_string(comm_checked) + " commutators, torsion check over "
                          + std::to_string(torsion_columns) + " columns" + notes + torsion_note};
  }

  // 7. Symplectic graded dimensions.
  Outcome criterion7() {
    std::size_t checks = 0, bad = 0;
    std::string notes;
    for (int g = 0; g <= 2; ++g) {
      for (int p = 0; p <= 2; ++p) {
        for (int n = 1; n <= 3; ++n) {
          SurfaceParams const s{g, p, n};
          checks += 2;
          if (symp_graded_dim(s, 0) != 1) {
            ++bad;
          }
          if (symp_graded_dim(s, 1) != static_cast<std::size_t>(2 * g * n)) {
            ++bad;
          }
        }
      }
    }
    ++checks;
    if (symp_graded_dim(SurfaceParams{1, 0, 1}, 2) != 3) {
      ++bad;
      notes += " (1,0,1) degree 2";
    }
    for (int g = 0; g <= 1; ++g) {
      for (int n = 1; n <= 2; ++n) {
        for (int p = 0; p <= 1; ++p) {
          auto const P = oracle::symplectic(g, p, n, true, false);
          for (int d = 0; d <= 4; ++d) {
            ++checks;
            if (symp_graded_dim(SurfaceParams{g, p, n}, d) != P.dim(d)) {
              ++bad;
              notes += " oracle g" + std::to_string(g) + "p" + std::to_string(p) + "n"
                       + std::to_string(n) + "d" + std::to_string(d);
            }
          }
        }
      }
    }
    checks += 2;
    if (!symp_twist_redundancy({1, 0, 2}) || !symp_twist_redundancy({1, 0, 3})) {
      ++bad;
      notes += " twist";
    }
    return {bad == 0, std::to_string(checks) + " checks, " + std::to_string(bad) + " failures"
                          + notes};
  }

  // 8. Desingularization against the nested product of J-factors.
  Outcome criterion8() {
    std::size_t words = 0, bad = 0;
    for (int n = 2; n <= 3; ++n) {
      std::vector<BraidLetter> alphabet{gen_a(1)};
      for (int i = 1; i < n; ++i) {
        alphabet.push_back(sigma(i));
        alphabet.push_back(sigma(i, -1));
        alphabet.push_back(singular(i));
      }
      std::function<void(BraidWord&, int)> rec = [&](BraidWord& w, int singular_count) {
        if (singular_count > 3) {
          return;
        }
        ++words;
        auto [factors, tail] = singular_factors<Integer>(w);
        auto nested          = AlgebraElement<Integer>::word({});
        for (auto const& f : factors) {
          nested = nested * jexpr_value(f);
        }
        nested = nested * AlgebraElement<Integer>::word(tail);
        if (nested.terms() != desingularize<Integer>(w).terms()) {
          ++bad;
        }
        if (w.size() == 4) {
          return;
        }
        for (auto const& x : alphabet) {
          w.letters.push_back(x);
          rec(w, singular_count + (x.kind == LetterKind::Singular ? 1 : 0));
          w.letters.pop_back();
        }
      };
      BraidWord w;
      rec(w, 0);
    }
    return {bad == 0, std::to_string(words) + " words, " + std::to_string(bad) + " mismatches"};
  }

  // 9. The surface group word problem.
  Outcome criterion9() {
    std::mt19937_64 rng(kSeed + 9);
    std::size_t     products = 0, bad = 0;
    for (int g = 2; g <= 3; ++g) {
      SurfaceGroup const group(SurfaceParams{g, 0, 2});
      auto const         letters = group.letters();
      auto const&        rel     = group.surface_relator();
      auto pick = [&](std::size_t m) {
        return std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
      };
      for (int trial = 0; trial < 500; ++trial) {
        std::vector<Pi1Letter> w;
        int factors = 1 + static_cast<int>(pick(4));
        for (int f = 0; f < factors; ++f) {
          std::vector<Pi1Letter> c;
          int clen = static_cast<int>(pick(7));
          for (int k = 0; k < clen; ++k) {
            c.push_back(letters[pick(letters.size())]);
          }
          auto r = pick(2) == 0 ? rel : inverse_word(rel);
          w.insert(w.end(), c.begin(), c.end());
          w.insert(w.end(), r.begin(), r.end());
          auto ci = inverse_word(c);
          w.insert(w.end(), ci.begin(), ci.end());
        }
        ++products;
        if (!group.dehn_reduce(w).empty() || !group.normalize(Pi1Word(w)).empty()) {
          ++bad;
        }
      }
    }
    std::size_t reductions = 0, mismatches = 0;
    SurfaceGroup const free_group(SurfaceParams{2, 2, 2});
    auto const         letters = free_group.letters();
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<Pi1Letter> w;
      auto len = std::uniform_int_distribution<int>(0, 40)(rng);
      for (int k = 0; k < len; ++k) {
        w.push_back(letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(
            rng)]);
      }
      ++reductions;
      std::vector<int> as_int(w.begin(), w.end());
      auto             mine = free_reduce(w);
      if (std::vector<int>(mine.begin(), mine.end()) != oracle::naive_free_reduce(as_int)) {
        ++mismatches;
      }
    }
    return {bad == 0 && mismatches == 0,
            std::to_string(products) + " relator products (" + std::to_string(bad)
                + " nontrivial), " + std::to_string(reductions) + " free reductions ("
                + std::to_string(mismatches) + " mismatches)"};
  }

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> const criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto    t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) {
      ++failed;
    }
    std::cout << "CRITERION " << (k + 1) << " " << (o.pass ? "PASS" : "FAIL") << " "
              << o.detail << " [" << fmt_seconds(seconds_since(t0)) << "]" << std::endl;
  }
  return failed;
}
