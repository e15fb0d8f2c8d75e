#ifndef SURFBRAID_IDEAL_HPP_
#define SURFBRAID_IDEAL_HPP_

// Equality in the beaded chord algebra modulo its relation ideal, decided
// inside a window by exact span membership.
//
// Beads are group-ring labels, so a monomial is first written canonically
// as segments (one normalized pi_1 word per strand) separated by chords.
// BeadBead holds by construction.  BeadPush and BeadFar say that every
// u in H_c = {u : u_i = u_j} slides across a chord c = (i,j); both are
// binomial and are quotiented exactly by the orbit normal form below.  The
// remaining families (FourT, ChordFar and, on closed surfaces, ClosedSum)
// contribute rows g.r.h, searched breadth-first from the support of the
// target.  A row is admitted when the bead lengths of g, r and h add up to
// at most the window W.  Positive answers carry a certificate whose entries
// are instances of the relation list (including letter-level slides), and
// the certificate is re-expanded and compared to the input before return.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "diagram.hpp"
#include "linalg.hpp"
#include "surface.hpp"

namespace surfbraid {

  using Word    = std::vector<Pi1Letter>;
  using Segment = std::vector<Word>;

  struct CanonMono {
    std::vector<Segment>             segs;
    std::vector<std::pair<int, int>> chords;

    [[nodiscard]] int chord_degree() const {
      return static_cast<int>(chords.size());
    }
    [[nodiscard]] int bead_length() const {
      int len = 0;
      for (auto const& s : segs) {
        for (auto const& w : s) {
          len += static_cast<int>(w.size());
        }
      }
      return len;
    }

    auto operator<=>(CanonMono const&) const = default;
  };

  using CanonElement = std::map<CanonMono, Rational>;

  inline void add_term(CanonElement& x, CanonMono const& m, Rational const& c) {
    if (sgn(c) == 0) {
      return;
    }
    auto& slot = x[m];
    slot += c;
    if (sgn(slot) == 0) {
      x.erase(m);
    }
  }

  // Segment arithmetic, strand by strand.
  class SegmentOps {
   public:
    SegmentOps(SurfaceGroup const& group, int n) : group_(group), n_(n) {}

    [[nodiscard]] int strands() const {
      return n_;
    }
    [[nodiscard]] SurfaceGroup const& group() const {
      return group_;
    }

    [[nodiscard]] Segment one() const {
      return Segment(static_cast<std::size_t>(n_));
    }

    [[nodiscard]] Word mul(Word const& a, Word const& b) const {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      return group_.normal_form(std::move(w));
    }

    [[nodiscard]] Word inv(Word const& a) const {
      return group_.normal_form(inverse_word(a));
    }

    [[nodiscard]] Segment mul(Segment const& a, Segment const& b) const {
      Segment out(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = mul(a[k], b[k]);
      }
      return out;
    }

    [[nodiscard]] Segment inv(Segment const& a) const {
      Segment out(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = inv(a[k]);
      }
      return out;
    }

    // Length of the Dehn-reduced representative.  Normal forms of closed
    // surface groups need not be geodesic, so windows are measured by this.
    [[nodiscard]] int length(Word const& w) const {
      auto it = length_cache_.find(w);
      if (it != length_cache_.end()) {
        return it->second;
      }
      int len = static_cast<int>(group_.dehn_reduce(w).size());
      length_cache_.emplace(w, len);
      return len;
    }

    [[nodiscard]] int bead_length(CanonMono const& m) const {
      int len = 0;
      for (auto const& seg : m.segs) {
        for (auto const& w : seg) {
          len += length(w);
        }
      }
      return len;
    }

    [[nodiscard]] CanonMono unit() const {
      return CanonMono{{one()}, {}};
    }

    // x . y, merging the last segment of x with the first of y.
    [[nodiscard]] CanonMono concat(CanonMono const& x, CanonMono const& y) const {
      CanonMono out;
      out.segs.assign(x.segs.begin(), x.segs.end() - 1);
      out.segs.push_back(mul(x.segs.back(), y.segs.front()));
      out.segs.insert(out.segs.end(), y.segs.begin() + 1, y.segs.end());
      out.chords = x.chords;
      out.chords.insert(out.chords.end(), y.chords.begin(), y.chords.end());
      return out;
    }

    [[nodiscard]] CanonMono canonicalize(DiagMonomial const& m) const {
      CanonMono out;
      out.segs.push_back(one());
      for (auto const& s : m.symbols) {
        if (s.kind == SymbolKind::Chord) {
          out.chords.emplace_back(s.a, s.b);
          out.segs.push_back(one());
        } else {
          out.segs.back()[static_cast<std::size_t>(s.a - 1)].push_back(s.letter);
        }
      }
      for (auto& seg : out.segs) {
        for (auto& w : seg) {
          w = group_.normal_form(std::move(w));
        }
      }
      return out;
    }

    template <typename Coeff>
    [[nodiscard]] CanonElement canonicalize(WreathDiagram<Coeff> const& x,
                                            Permutation const&          pi) const {
      CanonElement out;
      for (auto const& [k, c] : x.terms()) {
        if (k.second == pi) {
          add_term(out, canonicalize(k.first), Rational(c));
        }
      }
      return out;
    }

   private:
    SurfaceGroup const&                 group_;
    int                                 n_;
    mutable std::map<Word, int>         length_cache_;
  };

  inline DiagMonomial to_diag(CanonMono const& m) {
    DiagMonomial out;
    for (std::size_t t = 0; t < m.segs.size(); ++t) {
      for (std::size_t k = 0; k < m.segs[t].size(); ++k) {
        for (auto x : m.segs[t][k]) {
          out.symbols.push_back(DiagSymbol::bead(static_cast<int>(k) + 1, x));
        }
      }
      if (t < m.chords.size()) {
        out.symbols.push_back(DiagSymbol::chord(m.chords[t].first, m.chords[t].second));
      }
    }
    return out;
  }

  inline std::string to_string(CanonMono const& m) {
    return to_string(to_diag(m));
  }

  // coef . (left . relation . right ; perm)
  struct CertificateEntry {
    Rational    coef;
    CanonMono   left;
    RelationRef relation;
    CanonMono   right;
    Permutation perm;
  };

  inline std::string to_string(CertificateEntry const& e) {
    return "(" + to_string(e.left) + ", " + to_string(e.relation) + ", " + to_string(e.right)
           + ", " + to_string(e.coef) + ")"
           + (e.perm.is_identity() ? std::string() : " perm=" + e.perm.cycles(true));
  }

  struct MembershipResult {
    bool                          member = false;
    std::vector<CertificateEntry> certificate;
    std::size_t                   rows      = 0;
    std::size_t                   columns   = 0;
    bool                          exhausted = false;
  };

  struct MembershipOptions {
    int         window      = 6;
    std::size_t max_columns = 2000000;
  };

  class IdealEngine {
   public:
    IdealEngine(IdealEngine const&)            = delete;
    IdealEngine& operator=(IdealEngine const&) = delete;

    IdealEngine(SurfaceParams const& s, Truncation t)
        : params_(s), trunc_(t), group_(s), ops_(group_, s.strands) {
      s.validate();
    }

    [[nodiscard]] SegmentOps const& ops() const {
      return ops_;
    }

    // Canonical expansion of a relation instance.
    [[nodiscard]] CanonElement relation_canon(RelationRef const& r) const {
      auto it = rel_cache_.find(r);
      if (it != rel_cache_.end()) {
        return it->second;
      }
      Truncation wide{8, 8};
      auto       el  = relation_element<Integer>(r, params_, wide);
      auto       out = ops_.canonicalize(el, Permutation(params_.strands));
      rel_cache_.emplace(r, out);
      return out;
    }

    // Orbit normal form under the slides.  When `wit` is given it receives
    // entries with m - NF(m) = sum coef . left . r . right, scaled by `scale`.
    [[nodiscard]] CanonMono normal_form(CanonMono m, std::vector<CertificateEntry>* wit = nullptr,
                                        Rational const& scale = 1,
                                        Permutation const* perm = nullptr) const {
      int const n = params_.strands;
      for (std::size_t t = 0; t < m.chords.size(); ++t) {
        auto const [ci, cj] = m.chords[t];
        Segment const X = m.segs[t];
        Segment const Y = m.segs[t + 1];
        struct Step {
          int       strand;  // 0 for a slide on both chord strands
          Pi1Letter letter;
        };
        // Letters leave X from its right end, so cur grows by prepending.
        std::vector<Step> steps;
        auto const&       push = X[static_cast<std::size_t>(cj - 1)];
        for (auto it = push.rbegin(); it != push.rend(); ++it) {
          steps.push_back({0, *it});
        }
        for (int k = 1; k <= n; ++k) {
          if (k == ci || k == cj) {
            continue;
          }
          auto const& far = X[static_cast<std::size_t>(k - 1)];
          for (auto it = far.rbegin(); it != far.rend(); ++it) {
            steps.push_back({k, *it});
          }
        }
        if (steps.empty()) {
          continue;
        }
        Segment cur = ops_.one();
        for (auto const& st : steps) {
          Segment prev = cur;
          auto    grow = [&](int k) {
            auto& w = cur[static_cast<std::size_t>(k - 1)];
            w       = ops_.mul(Word{st.letter}, w);
          };
          if (st.strand == 0) {
            grow(ci);
            grow(cj);
          } else {
            grow(st.strand);
          }
          if (wit != nullptr) {
            CertificateEntry e;
            e.coef = scale;
            e.left.segs.assign(m.segs.begin(), m.segs.begin() + static_cast<std::ptrdiff_t>(t));
            e.left.segs.push_back(ops_.mul(X, ops_.inv(cur)));
            e.left.chords.assign(m.chords.begin(), m.chords.begin() + static_cast<std::ptrdiff_t>(t));
            e.right.segs.push_back(ops_.mul(prev, Y));
            e.right.segs.insert(e.right.segs.end(),
                                m.segs.begin() + static_cast<std::ptrdiff_t>(t + 2), m.segs.end());
            e.right.chords.assign(m.chords.begin() + static_cast<std::ptrdiff_t>(t + 1),
                                  m.chords.end());
            if (st.strand == 0) {
              e.relation = {RelationFamily::BeadPush, {ci, cj}, {st.letter}};
            } else {
              e.relation = {RelationFamily::BeadFar, {ci, cj, st.strand}, {st.letter}};
            }
            e.perm = perm != nullptr ? *perm : Permutation(n);
            wit->push_back(std::move(e));
          }
        }
        m.segs[t]     = ops_.mul(X, ops_.inv(cur));
        m.segs[t + 1] = ops_.mul(cur, Y);
      }
      return m;
    }

    [[nodiscard]] CanonElement normal_form(CanonElement const& x) const {
      CanonElement out;
      for (auto const& [m, c] : x) {
        add_term(out, normal_form(m), c);
      }
      return out;
    }

    // Decides x in the ideal inside the window.  Terms are split by
    // permutation and chord degree, which the relations preserve.
    template <typename Coeff>
    MembershipResult member(WreathDiagram<Coeff> const& x, MembershipOptions opt) const {
      if (x.strands() != params_.strands) {
        throw DimensionError("diagram strand count does not match the surface parameters");
      }
      if (opt.window < trunc_.max_beads) {
        throw ParameterError("window " + std::to_string(opt.window)
                             + " is smaller than the truncation bead length "
                             + std::to_string(trunc_.max_beads));
      }
      std::set<Permutation> perms;
      for (auto const& [k, c] : x.terms()) {
        perms.insert(k.second);
      }
      MembershipResult total;
      total.member = true;
      for (auto const& pi : perms) {
        auto canon = ops_.canonicalize(x, pi);
        std::map<int, CanonElement> by_degree;
        for (auto const& [m, c] : canon) {
          by_degree[m.chord_degree()][m] = c;
        }
        for (auto const& [deg, part] : by_degree) {
          auto r = member_component(part, pi, opt);
          total.rows += r.rows;
          total.columns += r.columns;
          total.exhausted = total.exhausted || r.exhausted;
          if (!r.member) {
            total.member = false;
            total.certificate.clear();
            return total;
          }
          total.certificate.insert(total.certificate.end(), r.certificate.begin(),
                                   r.certificate.end());
        }
      }
      if (!verify(x, total.certificate)) {
        throw Error("ideal_member: certificate failed to re-expand to the input");
      }
      return total;
    }

    // Expands the certificate and compares with x term by term.
    template <typename Coeff>
    [[nodiscard]] bool verify(WreathDiagram<Coeff> const&          x,
                              std::vector<CertificateEntry> const& cert) const {
      std::map<Permutation, CanonElement> lhs, rhs;
      for (auto const& [k, c] : x.terms()) {
        add_term(lhs[k.second], ops_.canonicalize(k.first), Rational(c));
      }
      for (auto const& e : cert) {
        for (auto const& [m, c] : relation_canon(e.relation)) {
          add_term(rhs[e.perm], ops_.concat(ops_.concat(e.left, m), e.right), e.coef * c);
        }
      }
      auto strip = [](std::map<Permutation, CanonElement>& a) {
        for (auto it = a.begin(); it != a.end();) {
          it = it->second.empty() ? a.erase(it) : std::next(it);
        }
      };
      strip(lhs);
      strip(rhs);
      return lhs == rhs;
    }

   private:
    struct RowInfo {
      CanonMono   left;
      RelationRef relation;
      CanonMono   right;
    };

    MembershipResult member_component(CanonElement const& x, Permutation const& pi,
                                      MembershipOptions const& opt) const {
      MembershipResult res;
      std::map<CanonMono, int> col_index;
      std::vector<CanonMono>   cols;
      auto column = [&](CanonMono const& m) {
        auto it = col_index.find(m);
        if (it != col_index.end()) {
          return it->second;
        }
        int id = static_cast<int>(cols.size());
        col_index.emplace(m, id);
        cols.push_back(m);
        return id;
      };
      SparseVec target;
      for (auto const& [m, c] : x) {
        axpy(target, c, SparseVec{{column(normal_form(m)), Rational(1)}});
      }
      std::vector<RowInfo> rows;
      SparseVec            combo;
      if (!target.empty()) {
        Echelon ech(true);
        std::set<std::vector<std::pair<int, long>>> row_keys;
        auto add_row = [&](CanonMono const& left, RelationRef const& r, CanonMono const& right) {
          SparseVec vec;
          for (auto const& [m, c] : relation_canon(r)) {
            auto nf = normal_form(ops_.concat(ops_.concat(left, m), right));
            axpy(vec, c, SparseVec{{column(nf), Rational(1)}});
          }
          if (vec.empty()) {
            return;
          }
          std::vector<std::pair<int, long>> key;
          long const sign = sgn(vec.begin()->second);
          for (auto const& [k, v] : vec) {
            key.emplace_back(k, sign * v.get_num().get_si());
          }
          if (!row_keys.insert(std::move(key)).second) {
            return;
          }
          int id = static_cast<int>(rows.size());
          rows.push_back({left, r, right});
          ech.add(std::move(vec), id);
        };

        auto const deg2 = relation_refs(params_, Truncation{2, 0},
                                        {RelationFamily::ChordFar, RelationFamily::FourT});
        std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, std::vector<RelationRef>>
            by_pair;
        for (auto const& r : deg2) {
          std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
          for (auto const& [m, c] : relation_canon(r)) {
            pairs.insert({m.chords[0], m.chords[1]});
          }
          for (auto const& p : pairs) {
            by_pair[p].push_back(r);
          }
        }
        bool const closed_sum = params_.boundary == 0 && params_.genus >= 2;
        std::vector<Word> const  no_ball;
        std::vector<Word> const& ball =
            closed_sum ? word_ball(std::max(opt.window - 2, 0)) : no_ball;

        std::size_t processed = 0;
        int         stage     = 1;
        bool        found     = false;
        while (!found) {
          std::size_t const layer_end = cols.size();
          for (std::size_t c = processed; c < layer_end; ++c) {
            CanonMono const col = cols[c];
            rows_for_column(col, by_pair, opt.window, add_row);
            if (stage == 2) {
              closed_sum_rows(col, ball, opt.window, add_row);
            }
            if (cols.size() > opt.max_columns) {
              res.exhausted = true;
              break;
            }
          }
          processed = layer_end;
          found     = ech.contains(target, &combo);
          if (found || res.exhausted) {
            break;
          }
          if (processed == cols.size()) {
            if (stage == 1 && closed_sum) {
              stage     = 2;
              processed = 0;
              continue;
            }
            break;
          }
        }
        res.rows    = rows.size();
        res.columns = cols.size();
        if (!found) {
          return res;
        }
      }
      res.member = true;
      // x - sum lambda g r h = [x - NF x] - sum lambda [g r h - NF(g r h)].
      auto& cert = res.certificate;
      for (auto const& [m, c] : x) {
        (void)normal_form(m, &cert, c, &pi);
      }
      for (auto const& [id, lambda] : combo) {
        auto const& row = rows[static_cast<std::size_t>(id)];
        cert.push_back({lambda, row.left, row.relation, row.right, pi});
        for (auto const& [m, c] : relation_canon(row.relation)) {
          auto full = ops_.concat(ops_.concat(row.left, m), row.right);
          (void)normal_form(full, &cert, -lambda * c, &pi);
        }
      }
      return res;
    }

    // Rows g.r.h with r of chord degree 2 that hit column `col` at a pair of
    // consecutive chords.
    template <typename AddRow, typename ByPair>
    void rows_for_column(CanonMono const& col, ByPair const& by_pair, int window,
                         AddRow& add_row) const {
      int const d = col.chord_degree();
      for (int p = 0; p + 1 < d; ++p) {
        auto const a  = col.chords[static_cast<std::size_t>(p)];
        auto const b  = col.chords[static_cast<std::size_t>(p + 1)];
        auto       it = by_pair.find({a, b});
        if (it == by_pair.end()) {
          continue;
        }
        Segment const v = ops_.inv(col.segs[static_cast<std::size_t>(p + 1)]);
        auto          u = find_slide(v, a, b);
        if (!u) {
          continue;
        }
        Segment const w = ops_.mul(v, *u);
        CanonMono     left, right;
        left.segs.assign(col.segs.begin(), col.segs.begin() + p);
        left.segs.push_back(ops_.mul(col.segs[static_cast<std::size_t>(p)], *u));
        left.chords.assign(col.chords.begin(), col.chords.begin() + p);
        right.segs.push_back(ops_.mul(ops_.inv(w), col.segs[static_cast<std::size_t>(p + 2)]));
        right.segs.insert(right.segs.end(), col.segs.begin() + p + 3, col.segs.end());
        right.chords.assign(col.chords.begin() + p + 2, col.chords.end());
        if (ops_.bead_length(left) + ops_.bead_length(right) > window) {
          continue;
        }
        for (auto const& r : it->second) {
          add_row(left, r, right);
        }
      }
    }

    // u in H_a with v.u in H_b, if one exists.
    [[nodiscard]] std::optional<Segment> find_slide(Segment const& v, std::pair<int, int> a,
                                                    std::pair<int, int> b) const {
      auto const [i, j] = a;
      auto const [k, l] = b;
      auto       in_a   = [&](int x) { return x == i || x == j; };
      auto const& vk    = v[static_cast<std::size_t>(k - 1)];
      auto const& vl    = v[static_cast<std::size_t>(l - 1)];
      Segment     u     = ops_.one();
      if (in_a(k) && in_a(l)) {
        if (vk != vl) {
          return std::nullopt;
        }
      } else if (in_a(k) || !in_a(l)) {
        u[static_cast<std::size_t>(l - 1)] = ops_.mul(ops_.inv(vl), vk);
      } else {
        u[static_cast<std::size_t>(k - 1)] = ops_.mul(ops_.inv(vk), vl);
      }
      return u;
    }

    // Rows alpha_i . ClosedSum(i) . y inserted in one segment of `col`.
    template <typename AddRow>
    void closed_sum_rows(CanonMono const& col, std::vector<Word> const& ball, int window,
                         AddRow& add_row) const {
      int const n = params_.strands;
      for (std::size_t q = 0; q < col.segs.size(); ++q) {
        for (int i = 1; i <= n; ++i) {
          RelationRef r{RelationFamily::ClosedSum, {i}, {}};
          auto const  rel = relation_canon(r);
          for (auto const& [term, c] : rel) {
            Word const& t = term.segs[0][static_cast<std::size_t>(i - 1)];
            for (auto const& alpha : ball) {
              CanonMono left, right;
              left.segs.assign(col.segs.begin(), col.segs.begin() + static_cast<std::ptrdiff_t>(q));
              Segment x = col.segs[q];
              x[static_cast<std::size_t>(i - 1)] = alpha;
              left.segs.push_back(std::move(x));
              left.chords.assign(col.chords.begin(),
                                 col.chords.begin() + static_cast<std::ptrdiff_t>(q));
              Segment y = ops_.one();
              y[static_cast<std::size_t>(i - 1)] = ops_.mul(
                  ops_.inv(ops_.mul(alpha, t)), col.segs[q][static_cast<std::size_t>(i - 1)]);
              right.segs.push_back(std::move(y));
              right.segs.insert(right.segs.end(),
                                col.segs.begin() + static_cast<std::ptrdiff_t>(q + 1),
                                col.segs.end());
              right.chords.assign(col.chords.begin() + static_cast<std::ptrdiff_t>(q),
                                  col.chords.end());
              if (ops_.bead_length(left) + 2 + ops_.bead_length(right) > window) {
                continue;
              }
              add_row(left, r, right);
            }
          }
        }
      }
    }

    // Normal forms of all words of length <= radius.
    [[nodiscard]] std::vector<Word> const& word_ball(int radius) const {
      auto cached = ball_cache_.find(radius);
      if (cached != ball_cache_.end()) {
        return cached->second;
      }
      std::set<Word>    seen{Word{}};
      std::vector<Word> layer{Word{}};
      auto const        letters = group_.letters();
      for (int r = 0; r < radius; ++r) {
        std::vector<Word> next;
        for (auto const& w : layer) {
          for (auto x : letters) {
            auto nw = ops_.mul(w, Word{x});
            if (ops_.length(nw) <= radius && seen.insert(nw).second) {
              next.push_back(std::move(nw));
            }
          }
        }
        layer = std::move(next);
      }
      return ball_cache_.emplace(radius, std::vector<Word>(seen.begin(), seen.end()))
          .first->second;
    }

    SurfaceParams                               params_;
    Truncation                                  trunc_;
    SurfaceGroup                                group_;
    SegmentOps                                  ops_;
    mutable std::map<RelationRef, CanonElement> rel_cache_;
    mutable std::map<int, std::vector<Word>>    ball_cache_;
  };

  template <typename Coeff>
  MembershipResult ideal_member(WreathDiagram<Coeff> const& x, SurfaceParams const& s,
                                Truncation t, int window) {
    IdealEngine engine(s, t);
    return engine.member(x, MembershipOptions{window});
  }

  // Equality of x and y in the quotient, as membership of x - y.
  template <typename Coeff>
  MembershipResult ideal_equal(WreathDiagram<Coeff> const& x, WreathDiagram<Coeff> const& y,
                               SurfaceParams const& s, Truncation t, int window) {
    return ideal_member(x - y, s, t, window);
  }

}  // namespace surfbraid

#endif  // SURFBRAID_IDEAL_HPP_
