#ifndef SURFBRAID_BRAID_HPP_
#define SURFBRAID_BRAID_HPP_

// Braid words on a surface: the generators sigma_i, a_r, b_r, z_k, the
// relator families of the surface braid group presentation, the degree-zero
// evaluation epsilon0 into pi_1^n x| S_n, and a bounded breadth-first search
// for equality by relator moves.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "surface.hpp"

namespace surfbraid {

  enum class LetterKind : std::uint8_t { Sigma, A, B, Z, Singular };

  struct BraidLetter {
    LetterKind kind  = LetterKind::Sigma;
    int        index = 1;
    int        sign  = 1;

    auto operator<=>(BraidLetter const&) const = default;

    [[nodiscard]] BraidLetter inverse() const {
      return {kind, index, -sign};
    }
    [[nodiscard]] bool is_surface() const {
      return kind == LetterKind::A || kind == LetterKind::B || kind == LetterKind::Z;
    }
  };

  inline BraidLetter sigma(int i, int sign = 1) {
    return {LetterKind::Sigma, i, sign};
  }
  inline BraidLetter gen_a(int r, int sign = 1) {
    return {LetterKind::A, r, sign};
  }
  inline BraidLetter gen_b(int r, int sign = 1) {
    return {LetterKind::B, r, sign};
  }
  inline BraidLetter gen_z(int k, int sign = 1) {
    return {LetterKind::Z, k, sign};
  }
  inline BraidLetter singular(int i) {
    return {LetterKind::Singular, i, 1};
  }

  struct BraidWord {
    std::vector<BraidLetter> letters;

    BraidWord() = default;
    BraidWord(std::initializer_list<BraidLetter> il) : letters(il) {}
    explicit BraidWord(std::vector<BraidLetter> v) : letters(std::move(v)) {}

    [[nodiscard]] bool empty() const {
      return letters.empty();
    }
    [[nodiscard]] std::size_t size() const {
      return letters.size();
    }
    [[nodiscard]] int singular_count() const {
      return static_cast<int>(std::count_if(
          letters.begin(), letters.end(),
          [](BraidLetter const& x) { return x.kind == LetterKind::Singular; }));
    }

    auto operator<=>(BraidWord const&) const = default;
  };

  inline BraidWord operator*(BraidWord const& u, BraidWord const& v) {
    BraidWord w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
  }

  // The surface group letter carried by a bead generator.
  inline Pi1Letter to_pi1(BraidLetter const& x) {
    bool inv = x.sign < 0;
    switch (x.kind) {
      case LetterKind::A: return pi1::a(x.index, inv);
      case LetterKind::B: return pi1::b(x.index, inv);
      case LetterKind::Z: return pi1::z(x.index, inv);
      default: throw InvalidGenerator("not a surface group letter");
    }
  }

  inline BraidLetter from_pi1(Pi1Letter x) {
    int sign = pi1::is_inverse(x) ? -1 : 1;
    if (pi1::is_z(x)) {
      return gen_z(pi1::index(x), sign);
    }
    return pi1::is_a(x) ? gen_a(pi1::index(x), sign) : gen_b(pi1::index(x), sign);
  }

  inline std::string to_string(BraidLetter const& x) {
    std::string out;
    switch (x.kind) {
      case LetterKind::Sigma: out = "s"; break;
      case LetterKind::A: out = "a"; break;
      case LetterKind::B: out = "b"; break;
      case LetterKind::Z: out = "z"; break;
      case LetterKind::Singular: out = "x"; break;
    }
    out += std::to_string(x.index);
    if (x.sign < 0) {
      out += "^-1";
    }
    return out;
  }

  // Empty word prints as "1".
  inline std::string to_string(BraidWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += to_string(w.letters[i]);
    }
    return out;
  }

  inline BraidWord inverse(BraidWord const& w) {
    BraidWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      if (it->kind == LetterKind::Singular) {
        throw InvalidGenerator("singular crossings have no inverse");
      }
      out.letters.push_back(it->inverse());
    }
    return out;
  }

  // Cancels adjacent x x^-1 pairs; singular letters never cancel.
  inline BraidWord free_reduce(BraidWord w) {
    std::size_t top = 0;
    auto&       l   = w.letters;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (top > 0 && l[i].kind != LetterKind::Singular && l[top - 1] == l[i].inverse()) {
        --top;
      } else {
        l[top++] = l[i];
      }
    }
    l.resize(top);
    return w;
  }

  // Tokens s1 a1 b1 z1 (and x1 when singular letters are allowed), each
  // with an optional "^-1"; "1" stands for the empty word.
  inline BraidWord parse_braid_word(std::string const& text,
                                    bool                allow_singular = false) {
    std::istringstream in(text);
    std::string        tok;
    BraidWord          out;
    while (in >> tok) {
      if (tok == "1") {
        continue;
      }
      char head = tok[0];
      if (head == 's' || head == 'x') {
        std::string body = tok.substr(1);
        int         sign = 1;
        if (auto pos = body.find('^'); pos != std::string::npos) {
          if (body.substr(pos) != "^-1" || head == 'x') {
            throw ParseError("bad exponent in token '" + tok + "'");
          }
          sign = -1;
          body = body.substr(0, pos);
        }
        if (body.empty()
            || !std::all_of(body.begin(), body.end(),
                            [](char c) { return c >= '0' && c <= '9'; })) {
          throw ParseError("bad index in token '" + tok + "'");
        }
        int idx = std::stoi(body);
        if (idx < 1) {
          throw InvalidGenerator("crossing index must be positive: '" + tok + "'");
        }
        if (head == 'x') {
          if (!allow_singular) {
            throw ParseError("singular crossing '" + tok + "' not allowed here");
          }
          out.letters.push_back(singular(idx));
        } else {
          out.letters.push_back(sigma(idx, sign));
        }
        continue;
      }
      Pi1Letter x;
      if (!parse_pi1_token(tok, x)) {
        throw ParseError("unknown token '" + tok + "'");
      }
      out.letters.push_back(from_pi1(x));
    }
    return out;
  }

  inline void validate(BraidWord const& w, SurfaceParams const& s) {
    for (auto const& x : w.letters) {
      bool ok = false;
      switch (x.kind) {
        case LetterKind::Sigma:
        case LetterKind::Singular: ok = x.index >= 1 && x.index <= s.strands - 1; break;
        case LetterKind::A:
        case LetterKind::B: ok = x.index >= 1 && x.index <= s.genus; break;
        case LetterKind::Z: ok = x.index >= 1 && x.index <= s.boundary - 1; break;
      }
      if (!ok || (x.sign != 1 && x.sign != -1)) {
        throw InvalidGenerator("generator " + to_string(x)
                               + " is not defined for " + to_string(s));
      }
    }
  }

  inline BraidWord parse_braid_word(std::string const& text, SurfaceParams const& s,
                                    bool allow_singular = false) {
    BraidWord w = parse_braid_word(text, allow_singular);
    validate(w, s);
    return w;
  }

  // ---------------------------------------------------------------------
  // Relators

  enum class RelatorFamily : std::uint8_t { Braid, Commutativity, SkewHandle, Closed };

  inline std::string family_tag(RelatorFamily f) {
    switch (f) {
      case RelatorFamily::Braid: return "2.i";
      case RelatorFamily::Commutativity: return "2.ii";
      case RelatorFamily::SkewHandle: return "2.iii";
      case RelatorFamily::Closed: return "2.iv";
    }
    return "?";
  }

  struct Relator {
    RelatorFamily family;
    BraidWord     word;
  };

  // [x, y] = x y x^-1 y^-1.
  inline BraidWord commutator(BraidWord const& x, BraidWord const& y) {
    return free_reduce(x * y * inverse(x) * inverse(y));
  }

  // Every relator instance, each a word equal to the identity.
  inline std::vector<Relator> relators(SurfaceParams const& s) {
    s.validate();
    int const            n = s.strands, g = s.genus, p = s.boundary;
    std::vector<Relator> out;
    auto add = [&](RelatorFamily f, BraidWord w) {
      out.push_back({f, free_reduce(std::move(w))});
    };
    for (int i = 1; i + 1 <= n - 1; ++i) {
      add(RelatorFamily::Braid,
          BraidWord{sigma(i), sigma(i + 1), sigma(i), sigma(i + 1, -1), sigma(i, -1),
                    sigma(i + 1, -1)});
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        add(RelatorFamily::Braid, commutator({sigma(i)}, {sigma(j)}));
      }
    }

    std::vector<BraidLetter> handles;
    for (int r = 1; r <= g; ++r) {
      handles.push_back(gen_a(r));
      handles.push_back(gen_b(r));
    }
    std::vector<BraidLetter> loops;
    for (int k = 1; k <= p - 1; ++k) {
      loops.push_back(gen_z(k));
    }
    auto const s1 = sigma(1), s1i = sigma(1, -1);
    auto       c  = [&](BraidLetter x, BraidWord const& y) {
      add(RelatorFamily::Commutativity, commutator({x}, y));
    };
    // [x, sigma_i] for i > 1.
    for (int i = 2; i <= n - 1; ++i) {
      for (auto x : handles) {
        c(x, {sigma(i)});
      }
      for (auto x : loops) {
        c(x, {sigma(i)});
      }
    }
    // [x, sigma_1^-1 x sigma_1^-1].
    for (auto x : handles) {
      c(x, {s1i, x, s1i});
    }
    for (auto x : loops) {
      c(x, {s1i, x, s1i});
    }
    // Cross-handle and cross-loop pairs, s < r and j < i.
    for (int r = 1; r <= g; ++r) {
      for (int t = 1; t < r; ++t) {
        c(gen_a(r), {s1i, gen_a(t), s1});
        c(gen_a(r), {s1i, gen_b(t), s1});
        c(gen_b(r), {s1i, gen_a(t), s1});
        c(gen_b(r), {s1i, gen_b(t), s1});
      }
    }
    for (int i = 1; i <= p - 1; ++i) {
      for (int j = 1; j < i; ++j) {
        c(gen_z(i), {s1i, gen_z(j), s1});
      }
    }
    for (int r = 1; r <= g; ++r) {
      for (int k = 1; k <= p - 1; ++k) {
        c(gen_a(r), {s1i, gen_z(k), s1});
        c(gen_b(r), {s1i, gen_z(k), s1});
      }
    }

    for (int r = 1; r <= g; ++r) {
      add(RelatorFamily::SkewHandle,
          BraidWord{s1i, s1i} * commutator({gen_a(r)}, {s1i, gen_b(r), s1i}));
    }

    if (p == 0) {
      BraidWord lhs;
      for (int t = 1; t <= g; ++t) {
        lhs = lhs * commutator({gen_a(t)}, {gen_b(t, -1)});
      }
      BraidWord rhs;
      for (int i = 1; i <= n - 1; ++i) {
        rhs.letters.push_back(sigma(i));
      }
      for (int i = n - 1; i >= 1; --i) {
        rhs.letters.push_back(sigma(i));
      }
      add(RelatorFamily::Closed, lhs * inverse(rhs));
    }
    return out;
  }

  // ---------------------------------------------------------------------
  // Wreath elements and epsilon0

  struct WreathElement {
    std::vector<std::vector<Pi1Letter>> beads;
    Permutation                         perm;

    static WreathElement identity(int n) {
      return {std::vector<std::vector<Pi1Letter>>(static_cast<std::size_t>(n)),
              Permutation(n)};
    }

    [[nodiscard]] bool is_identity() const {
      return perm.is_identity()
             && std::all_of(beads.begin(), beads.end(),
                            [](auto const& b) { return b.empty(); });
    }

    auto operator<=>(WreathElement const&) const = default;
  };

  // (g; pi)(h; rho) = (g . pi|>h ; pi rho) with (pi|>h)_i = h_{pi^-1(i)}.
  inline WreathElement wreath_mul(WreathElement const& x, WreathElement const& y,
                                  SurfaceGroup const& group) {
    if (x.beads.size() != y.beads.size()) {
      throw DimensionError("wreath elements on different strand counts");
    }
    auto const    inv = x.perm.inverse();
    WreathElement out;
    out.perm = x.perm * y.perm;
    out.beads.resize(x.beads.size());
    for (std::size_t i = 0; i < x.beads.size(); ++i) {
      auto w = x.beads[i];
      auto const& h = y.beads[static_cast<std::size_t>(inv(static_cast<int>(i) + 1) - 1)];
      w.insert(w.end(), h.begin(), h.end());
      out.beads[i] = group.normal_form(std::move(w));
    }
    return out;
  }

  inline WreathElement wreath_inverse(WreathElement const& x, SurfaceGroup const& group) {
    // (g; pi)^-1 = (pi^-1 |> g^-1 ; pi^-1).
    WreathElement out;
    out.perm = x.perm.inverse();
    out.beads.resize(x.beads.size());
    for (std::size_t i = 0; i < x.beads.size(); ++i) {
      auto const& g = x.beads[static_cast<std::size_t>(x.perm(static_cast<int>(i) + 1) - 1)];
      out.beads[i]  = group.normal_form(inverse_word(g));
    }
    return out;
  }

  inline WreathElement generator_image(BraidLetter const& x, int n) {
    auto e = WreathElement::identity(n);
    if (x.kind == LetterKind::Sigma) {
      e.perm = Permutation::adjacent(n, x.index);
    } else if (x.is_surface()) {
      e.beads[0] = {to_pi1(x)};
    } else {
      throw InvalidGenerator("epsilon0 is not defined on singular crossings");
    }
    return e;
  }

  inline WreathElement epsilon0(BraidWord const& w, SurfaceParams const& s) {
    validate(w, s);
    SurfaceGroup const group(s);
    auto               e = WreathElement::identity(s.strands);
    for (auto const& x : w.letters) {
      e = wreath_mul(e, generator_image(x, s.strands), group);
    }
    return e;
  }

  // Strand beads in a tuple, then the permutation with fixed points.
  inline std::string to_string(WreathElement const& e) {
    std::string out = "beads=(";
    for (std::size_t i = 0; i < e.beads.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += to_string(Pi1Word(e.beads[i]));
    }
    out += ") perm=" + e.perm.cycles(true);
    return out;
  }

  // ---------------------------------------------------------------------
  // Relator moves and the bounded search

  enum class MoveKind : std::uint8_t { Substitute, Insert };

  // Substitute: the rotation R = P Q of relator (or its inverse) starting at
  // `rotation` has its prefix P (of `length` letters) matched at `position`
  // and replaced by Q^-1.  Insert: the whole rotation is inserted before
  // `position`.  Both are followed by free reduction.
  struct Move {
    MoveKind    kind     = MoveKind::Insert;
    std::size_t relator  = 0;
    bool        inverted = false;
    std::size_t rotation = 0;
    std::size_t position = 0;
    std::size_t length   = 0;

    auto operator<=>(Move const&) const = default;
  };

  inline std::string to_string(Move const& m) {
    std::ostringstream out;
    out << (m.kind == MoveKind::Insert ? "insert" : "substitute") << " relator#"
        << m.relator << (m.inverted ? "^-1" : "") << " rot=" << m.rotation
        << " pos=" << m.position;
    if (m.kind == MoveKind::Substitute) {
      out << " len=" << m.length;
    }
    return out.str();
  }

  inline std::vector<BraidLetter> rotated(std::vector<BraidLetter> const& r,
                                          std::size_t                     rot) {
    std::vector<BraidLetter> out(r.size());
    for (std::size_t t = 0; t < r.size(); ++t) {
      out[t] = r[(rot + t) % r.size()];
    }
    return out;
  }

  // Returns nullopt when the move does not apply to w.
  inline std::optional<BraidWord> apply_move(BraidWord const& w, Move const& m,
                                             std::vector<Relator> const& rels) {
    if (m.relator >= rels.size()) {
      return std::nullopt;
    }
    auto const& base = rels[m.relator].word;
    if (base.empty() || m.rotation >= base.size() || m.position > w.size()) {
      return std::nullopt;
    }
    auto R = rotated(m.inverted ? inverse(base).letters : base.letters, m.rotation);
    BraidWord out;
    auto const& l = w.letters;
    if (m.kind == MoveKind::Insert) {
      out.letters.assign(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(m.position));
      out.letters.insert(out.letters.end(), R.begin(), R.end());
      out.letters.insert(out.letters.end(),
                         l.begin() + static_cast<std::ptrdiff_t>(m.position), l.end());
      return free_reduce(std::move(out));
    }
    if (m.length == 0 || m.length > R.size() || m.position + m.length > l.size()) {
      return std::nullopt;
    }
    if (!std::equal(R.begin(), R.begin() + static_cast<std::ptrdiff_t>(m.length),
                    l.begin() + static_cast<std::ptrdiff_t>(m.position))) {
      return std::nullopt;
    }
    BraidWord q(std::vector<BraidLetter>(R.begin() + static_cast<std::ptrdiff_t>(m.length),
                                         R.end()));
    out.letters.assign(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(m.position));
    auto qi = inverse(q);
    out.letters.insert(out.letters.end(), qi.letters.begin(), qi.letters.end());
    out.letters.insert(out.letters.end(),
                       l.begin() + static_cast<std::ptrdiff_t>(m.position + m.length),
                       l.end());
    return free_reduce(std::move(out));
  }

  struct EqualityResult {
    bool              equal = false;
    std::vector<Move> moves;
    std::size_t       nodes_explored = 0;
    bool              budget_exhausted = false;
  };

  // Every move applicable to w, in a fixed order: substitutions before
  // insertions, then relator, inversion, rotation, position, length.
  inline std::vector<std::pair<Move, BraidWord>>
  expand_moves(BraidWord const& w, std::vector<Relator> const& rels) {
    std::vector<std::pair<Move, BraidWord>> out;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      for (bool inv : {false, true}) {
        auto const full = inv ? inverse(rels[ri].word).letters : rels[ri].word.letters;
        for (std::size_t rot = 0; rot < full.size(); ++rot) {
          auto R = rotated(full, rot);
          for (std::size_t pos = 0; pos < w.size(); ++pos) {
            std::size_t len = 0;
            while (len < R.size() && pos + len < w.size()
                   && w.letters[pos + len] == R[len]) {
              ++len;
              Move m{MoveKind::Substitute, ri, inv, rot, pos, len};
              if (auto next = apply_move(w, m, rels)) {
                out.emplace_back(m, std::move(*next));
              }
            }
          }
        }
      }
    }
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      for (bool inv : {false, true}) {
        for (std::size_t rot = 0; rot < rels[ri].word.size(); ++rot) {
          for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            Move m{MoveKind::Insert, ri, inv, rot, pos, 0};
            if (auto next = apply_move(w, m, rels)) {
              out.emplace_back(m, std::move(*next));
            }
          }
        }
      }
    }
    return out;
  }

  // Breadth-first search from u, as spelled, towards free_reduce(v) through
  // at most `depth` relator moves; every move free-reduces its result.  A
  // positive answer is replayed before it is returned; a negative answer is
  // inconclusive.
  inline EqualityResult bounded_equal(BraidWord const& u, BraidWord const& v,
                                      SurfaceParams const& s, int depth,
                                      std::size_t node_budget = 1000000) {
    if (depth < 0) {
      throw ParameterError("search depth must be non-negative");
    }
    validate(u, s);
    validate(v, s);
    auto const&    start  = u;
    auto const     target = free_reduce(v);
    EqualityResult res;
    if (free_reduce(start) == target) {
      res.equal = true;
      return res;
    }
    auto const rels = relators(s);
    struct Node {
      BraidWord parent;
      Move      move;
    };
    std::map<BraidWord, Node> seen;
    seen.emplace(start, Node{});
    std::vector<BraidWord> frontier{start};
    std::optional<BraidWord> found;
    for (int level = 0; level < depth && !found && !frontier.empty(); ++level) {
      std::vector<BraidWord> next;
      for (auto const& w : frontier) {
        for (auto& [m, child] : expand_moves(w, rels)) {
          if (seen.count(child) != 0) {
            continue;
          }
          seen.emplace(child, Node{w, m});
          ++res.nodes_explored;
          if (child == target) {
            found = child;
            break;
          }
          if (seen.size() >= node_budget) {
            res.budget_exhausted = true;
            return res;
          }
          next.push_back(std::move(child));
        }
        if (found) {
          break;
        }
      }
      frontier = std::move(next);
    }
    if (!found) {
      return res;
    }
    std::vector<Move> path;
    for (BraidWord w = *found; w != start;) {
      auto const& node = seen.at(w);
      path.push_back(node.move);
      w = node.parent;
    }
    std::reverse(path.begin(), path.end());
    BraidWord replay = start;
    for (auto const& m : path) {
      auto next = apply_move(replay, m, rels);
      if (!next) {
        throw Error("bounded_equal: move sequence failed to replay");
      }
      replay = std::move(*next);
    }
    if (replay != target) {
      throw Error("bounded_equal: replay did not reach the target word");
    }
    res.equal = true;
    res.moves = std::move(path);
    return res;
  }

}  // namespace surfbraid

#endif  // SURFBRAID_BRAID_HPP_
