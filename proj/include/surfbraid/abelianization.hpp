#ifndef SURFBRAID_ABELIANIZATION_HPP_
#define SURFBRAID_ABELIANIZATION_HPP_

// The commutator quotient H_1 of the beaded chord algebra in chord degrees 0
// and 1.  Beads become strand-independent commuting Laurent variables
// abar_s, bbar_s, zbar_k; every chord becomes Z12; a permutation becomes
// tau^(0 or 1) by its sign, with tau^2 = 1.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "diagram.hpp"
#include "ideal.hpp"
#include "linalg.hpp"

namespace surfbraid {

  struct H1Monomial {
    int              z12 = 0;
    std::vector<int> exps;  // abar_1, bbar_1, abar_2, ..., zbar_1, ...
    int              tau = 0;

    auto operator<=>(H1Monomial const&) const = default;
  };

  template <typename Coeff = Integer>
  class H1Element {
   public:
    using term_map = std::map<H1Monomial, Coeff>;

    H1Element() = default;
    explicit H1Element(SurfaceParams const& s) : genus_(s.genus), boundary_(s.boundary) {}

    [[nodiscard]] std::size_t num_variables() const {
      return static_cast<std::size_t>(2 * genus_ + std::max(boundary_ - 1, 0));
    }

    [[nodiscard]] H1Monomial one() const {
      return H1Monomial{0, std::vector<int>(num_variables(), 0), 0};
    }

    void add(H1Monomial const& m, Coeff const& c) {
      if (surfbraid::is_zero(c)) {
        return;
      }
      auto& slot = terms_[m];
      slot += c;
      if (surfbraid::is_zero(slot)) {
        terms_.erase(m);
      }
    }

    [[nodiscard]] term_map const& terms() const {
      return terms_;
    }
    [[nodiscard]] bool is_zero() const {
      return terms_.empty();
    }
    [[nodiscard]] int genus() const {
      return genus_;
    }
    [[nodiscard]] int boundary() const {
      return boundary_;
    }

    H1Element& operator-=(H1Element const& y) {
      for (auto const& [m, c] : y.terms_) {
        add(m, -c);
      }
      return *this;
    }
    H1Element& operator+=(H1Element const& y) {
      for (auto const& [m, c] : y.terms_) {
        add(m, c);
      }
      return *this;
    }
    friend H1Element operator-(H1Element x, H1Element const& y) {
      return x -= y;
    }

    bool operator==(H1Element const& y) const {
      return terms_ == y.terms_;
    }

    [[nodiscard]] std::string variable_name(std::size_t v) const {
      auto const g = static_cast<std::size_t>(genus_);
      if (v < 2 * g) {
        return (v % 2 == 0 ? "abar" : "bbar") + std::to_string(v / 2 + 1);
      }
      return "zbar" + std::to_string(v - 2 * g + 1);
    }

   private:
    int      genus_    = 0;
    int      boundary_ = 0;
    term_map terms_;
  };

  // Terms "c * Z12 * abar1^-1 * tau" joined by " + "; "0" when empty.
  template <typename Coeff>
  std::string to_string(H1Element<Coeff> const& h) {
    if (h.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [m, c] : h.terms()) {
      if (!first) {
        out += " + ";
      }
      first = false;
      std::vector<std::string> factors;
      if (m.z12 == 1) {
        factors.emplace_back("Z12");
      } else if (m.z12 > 1) {
        factors.push_back("Z12^" + std::to_string(m.z12));
      }
      for (std::size_t v = 0; v < m.exps.size(); ++v) {
        if (m.exps[v] == 0) {
          continue;
        }
        auto name = h.variable_name(v);
        if (m.exps[v] != 1) {
          name += "^" + std::to_string(m.exps[v]);
        }
        factors.push_back(std::move(name));
      }
      if (m.tau != 0) {
        factors.emplace_back("tau");
      }
      out += to_string(c);
      if (factors.empty()) {
        out += " * 1";
      }
      for (auto const& f : factors) {
        out += " * " + f;
      }
    }
    return out;
  }

  // The abelianizing homomorphism on every chord degree.
  template <typename Coeff>
  H1Element<Coeff> h1_image(WreathDiagram<Coeff> const& x, SurfaceParams const& s) {
    H1Element<Coeff> out(s);
    for (auto const& [k, c] : x.terms()) {
      H1Monomial m = out.one();
      for (auto const& sym : k.first.symbols) {
        if (sym.kind == SymbolKind::Chord) {
          ++m.z12;
          continue;
        }
        auto v = static_cast<std::size_t>(pi1::dense_generator(sym.letter, s.genus));
        bool const defined = pi1::is_z(sym.letter) ? pi1::index(sym.letter) < s.boundary
                                                   : pi1::index(sym.letter) <= s.genus;
        if (!defined || v >= m.exps.size()) {
          throw InvalidGenerator("bead letter " + pi1::letter_name(sym.letter)
                                 + " is not defined on " + to_string(s));
        }
        m.exps[v] += pi1::is_inverse(sym.letter) ? -1 : 1;
      }
      m.tau = k.second.sign() < 0 ? 1 : 0;
      out.add(m, c);
    }
    return out;
  }

  // h1_image restricted to chord degree <= 1.
  template <typename Coeff>
  H1Element<Coeff> h1_class(WreathDiagram<Coeff> const& x, SurfaceParams const& s) {
    for (auto const& [k, c] : x.terms()) {
      if (k.first.chord_degree() >= 2) {
        throw UnsupportedDegree("h1_class is computed in chord degree 0 and 1 only");
      }
    }
    return h1_image(x, s);
  }

  // A monomial with nonzero coefficient, if any.
  template <typename Coeff>
  std::optional<std::pair<H1Monomial, Coeff>> h1_nonzero(H1Element<Coeff> const& h) {
    if (h.is_zero()) {
      return std::nullopt;
    }
    return *h.terms().begin();
  }

  template <typename Coeff>
  std::string certificate_string(H1Element<Coeff> const& h, H1Monomial const& m,
                                 Coeff const& c) {
    H1Element<Coeff> single(SurfaceParams{h.genus(), h.boundary(), 2});
    single.add(m, Coeff(1));
    return "coefficient " + to_string(c) + " at monomial "
           + to_string(single).substr(std::string("1 * ").size());
  }

  // ---------------------------------------------------------------------
  // Torsion in chord degree one

  struct TorsionReport {
    std::size_t          columns = 0;
    std::size_t          rows    = 0;
    std::vector<Integer> divisors;
    bool                 torsion_free = true;
  };

  // Integer elementary divisors of the span of the chord-degree-one relation
  // instances g.r.h whose terms all have bead length <= L, on the component
  // where every strand carries abelianized class zero.  Columns are the
  // canonical monomials of that component.
  inline TorsionReport degree_one_torsion(SurfaceParams const& s, Truncation t) {
    s.validate();
    int const          n = s.strands;
    int const          L = t.max_beads;
    SurfaceGroup const group(s);
    SegmentOps const   ops(group, n);
    auto const         letters = group.letters();
    std::size_t const  nvars   = static_cast<std::size_t>(s.num_pi1_generators());

    // Normal forms of words of length <= L, grouped by length.
    std::vector<std::vector<Word>> by_len(static_cast<std::size_t>(L) + 1);
    {
      std::set<Word>    seen{Word{}};
      std::vector<Word> layer{Word{}};
      by_len[0].push_back({});
      for (int r = 0; r < L; ++r) {
        std::vector<Word> next;
        for (auto const& w : layer) {
          for (auto x : letters) {
            auto nw = ops.mul(w, Word{x});
            if (seen.insert(nw).second) {
              int const len = ops.length(nw);
              if (len <= L) {
                by_len[static_cast<std::size_t>(len)].push_back(nw);
              }
              next.push_back(std::move(nw));
            }
          }
        }
        layer = std::move(next);
      }
    }
    auto word_class = [&](Word const& w) {
      std::vector<int> c(nvars, 0);
      for (auto x : w) {
        c[static_cast<std::size_t>(pi1::dense_generator(x, s.genus))] += pi1::is_inverse(x) ? -1 : 1;
      }
      return c;
    };

    // Enumerate the 2n words of a degree-one monomial with total length <= L
    // and every strand of class zero.
    std::map<CanonMono, int> index;
    std::vector<CanonMono>   cols;
    std::vector<std::pair<int, int>> chords;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        chords.emplace_back(i, j);
      }
    }
    std::size_t const slots = 2 * static_cast<std::size_t>(n);
    std::vector<Word> pick(slots);
    std::vector<std::vector<int>> strand_class(static_cast<std::size_t>(n),
                                               std::vector<int>(nvars, 0));
    auto rec = [&](auto&& self, std::size_t slot, int budget) -> void {
      if (slot == slots) {
        for (auto const& c : strand_class) {
          for (int e : c) {
            if (e != 0) {
              return;
            }
          }
        }
        for (auto const& ch : chords) {
          CanonMono m;
          m.segs.assign(2, Segment(static_cast<std::size_t>(n)));
          for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
            m.segs[0][k] = pick[k];
            m.segs[1][k] = pick[static_cast<std::size_t>(n) + k];
          }
          m.chords = {ch};
          index.emplace(m, static_cast<int>(cols.size()));
          cols.push_back(std::move(m));
        }
        return;
      }
      auto& cls = strand_class[slot % static_cast<std::size_t>(n)];
      for (int len = 0; len <= budget; ++len) {
        for (auto const& w : by_len[static_cast<std::size_t>(len)]) {
          auto wc = word_class(w);
          for (std::size_t v = 0; v < nvars; ++v) {
            cls[v] += wc[v];
          }
          pick[slot] = w;
          self(self, slot + 1, budget - len);
          for (std::size_t v = 0; v < nvars; ++v) {
            cls[v] -= wc[v];
          }
        }
      }
    };
    rec(rec, 0, L);

    std::vector<IntSparseRow> rows;
    std::set<IntSparseRow>    seen_rows;
    auto push_row = [&](IntSparseRow row) {
      for (auto it = row.begin(); it != row.end();) {
        it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
      }
      if (row.empty()) {
        return;
      }
      if (sgn(row.begin()->second) < 0) {
        for (auto& [k, v] : row) {
          v = -v;
        }
      }
      if (seen_rows.insert(row).second) {
        rows.push_back(std::move(row));
      }
    };
    auto col_of = [&](CanonMono const& m) -> int {
      if (ops.bead_length(m) > L) {
        return -1;
      }
      auto it = index.find(m);
      return it == index.end() ? -1 : it->second;
    };

    // Slides of one letter across the chord: (X, Z, Y) ~ (X l^-1, Z, l Y).
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto const& m = cols[c];
      auto const [ci, cj] = m.chords[0];
      for (auto x : letters) {
        for (int k = 0; k <= n; ++k) {
          if (k == ci || k == cj) {
            continue;
          }
          Segment u = ops.one();
          if (k == 0) {
            u[static_cast<std::size_t>(ci - 1)] = {x};
            u[static_cast<std::size_t>(cj - 1)] = {x};
          } else {
            u[static_cast<std::size_t>(k - 1)] = {x};
          }
          CanonMono moved = m;
          moved.segs[0]   = ops.mul(m.segs[0], ops.inv(u));
          moved.segs[1]   = ops.mul(u, m.segs[1]);
          int const d     = col_of(moved);
          if (d < 0 || d == static_cast<int>(c)) {
            continue;
          }
          push_row(IntSparseRow{{static_cast<int>(c), Integer(1)}, {d, Integer(-1)}});
        }
      }
    }

    // Closed surfaces: alpha . sum_s [a_s, b_s] . beta on one strand of one
    // segment, anchored at its s = 1 term.
    if (s.boundary == 0 && s.genus >= 1) {
      std::vector<Word> ball;
      for (auto const& layer : by_len) {
        ball.insert(ball.end(), layer.begin(), layer.end());
      }
      // For each alpha: alpha.a_h.b_h and alpha.b_h.a_h, then the inverse
      // of the anchor alpha.a_1.b_1.
      std::size_t const terms = 2 * static_cast<std::size_t>(s.genus);
      std::vector<std::vector<Word>> shifted(ball.size());
      std::vector<Word>              anchor_inv(ball.size());
      for (std::size_t a = 0; a < ball.size(); ++a) {
        for (int h = 1; h <= s.genus; ++h) {
          shifted[a].push_back(ops.mul(ball[a], Word{pi1::a(h), pi1::b(h)}));
          shifted[a].push_back(ops.mul(ball[a], Word{pi1::b(h), pi1::a(h)}));
        }
        anchor_inv[a] = ops.inv(shifted[a][0]);
      }
      // Replacement words of w, per alpha, that keep every term short.
      std::map<Word, std::vector<std::vector<Word>>> replacements;
      auto replacements_of = [&](Word const& w) -> std::vector<std::vector<Word>> const& {
        auto it = replacements.find(w);
        if (it != replacements.end()) {
          return it->second;
        }
        std::vector<std::vector<Word>> out;
        for (std::size_t a = 0; a < ball.size(); ++a) {
          Word const        beta = ops.mul(anchor_inv[a], w);
          std::vector<Word> row_words;
          for (std::size_t k = 0; k < terms; ++k) {
            Word term = ops.mul(shifted[a][k], beta);
            if (ops.length(term) > L) {
              break;
            }
            row_words.push_back(std::move(term));
          }
          if (row_words.size() == terms) {
            out.push_back(std::move(row_words));
          }
        }
        return replacements.emplace(w, std::move(out)).first->second;
      };
      for (auto const& m : cols) {
        for (std::size_t q = 0; q < 2; ++q) {
          for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            for (auto const& row_words : replacements_of(m.segs[q][i])) {
              IntSparseRow row;
              bool         fits = true;
              for (std::size_t k = 0; k < terms; ++k) {
                CanonMono term  = m;
                term.segs[q][i] = row_words[k];
                int const d     = col_of(term);
                if (d < 0) {
                  fits = false;
                  break;
                }
                row[d] += (k % 2 == 0) ? 1 : -1;
              }
              if (fits) {
                push_row(std::move(row));
              }
            }
          }
        }
      }
    }

    TorsionReport rep;
    rep.columns  = cols.size();
    rep.rows     = rows.size();
    rep.divisors = elementary_divisors(std::move(rows));
    for (auto const& d : rep.divisors) {
      if (d != 1) {
        rep.torsion_free = false;
      }
    }
    return rep;
  }

}  // namespace surfbraid

#endif  // SURFBRAID_ABELIANIZATION_HPP_
