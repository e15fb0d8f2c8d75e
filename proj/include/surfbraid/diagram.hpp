#ifndef SURFBRAID_DIAGRAM_HPP_
#define SURFBRAID_DIAGRAM_HPP_

// Beaded horizontal chord diagrams on n strands, twisted by permutations.
// A monomial is a word in Bead(strand, letter) and Chord(i < j) symbols read
// bottom to top; a WreathDiagram is a finite combination of (monomial,
// permutation) pairs kept inside a truncation (D chords, L beads).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "braid.hpp"
#include "errors.hpp"
#include "group_algebra.hpp"
#include "permutation.hpp"
#include "surface.hpp"

namespace surfbraid {

  struct Truncation {
    int max_chords = 2;
    int max_beads  = 4;

    auto operator<=>(Truncation const&) const = default;
  };

  enum class SymbolKind : std::uint8_t { Bead, Chord };

  // Bead: strand `a`, letter `letter`.  Chord: strands a < b.
  struct DiagSymbol {
    SymbolKind kind   = SymbolKind::Bead;
    int        a      = 1;
    int        b      = 0;
    Pi1Letter  letter = 0;

    static DiagSymbol bead(int strand, Pi1Letter x) {
      return {SymbolKind::Bead, strand, 0, x};
    }
    static DiagSymbol chord(int i, int j) {
      if (i == j) {
        throw InvalidGenerator("a chord needs two distinct strands");
      }
      return {SymbolKind::Chord, std::min(i, j), std::max(i, j), 0};
    }

    auto operator<=>(DiagSymbol const&) const = default;
  };

  struct DiagMonomial {
    std::vector<DiagSymbol> symbols;

    [[nodiscard]] int chord_degree() const {
      return static_cast<int>(std::count_if(symbols.begin(), symbols.end(), [](auto const& x) {
        return x.kind == SymbolKind::Chord;
      }));
    }
    [[nodiscard]] int bead_length() const {
      return static_cast<int>(symbols.size()) - chord_degree();
    }
    [[nodiscard]] bool fits(Truncation const& t) const {
      return chord_degree() <= t.max_chords && bead_length() <= t.max_beads;
    }

    auto operator<=>(DiagMonomial const&) const = default;
  };

  inline DiagMonomial operator*(DiagMonomial const& x, DiagMonomial const& y) {
    DiagMonomial out = x;
    out.symbols.insert(out.symbols.end(), y.symbols.begin(), y.symbols.end());
    return out;
  }

  // Moves everything on strand i to strand pi(i).
  inline DiagMonomial relabel(DiagMonomial const& m, Permutation const& pi) {
    DiagMonomial out = m;
    for (auto& x : out.symbols) {
      if (x.kind == SymbolKind::Bead) {
        x.a = pi(x.a);
      } else {
        x = DiagSymbol::chord(pi(x.a), pi(x.b));
      }
    }
    return out;
  }

  inline std::string to_string(DiagSymbol const& x) {
    if (x.kind == SymbolKind::Chord) {
      return "Z(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
    }
    return pi1::letter_name(x.letter) + "@" + std::to_string(x.a);
  }

  inline std::string to_string(DiagMonomial const& m) {
    if (m.symbols.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t k = 0; k < m.symbols.size(); ++k) {
      if (k != 0) {
        out += ' ';
      }
      out += to_string(m.symbols[k]);
    }
    return out;
  }

  inline DiagMonomial parse_diag_monomial(std::string const& text) {
    DiagMonomial       out;
    std::istringstream in(text);
    std::string        tok;
    while (in >> tok) {
      if (tok == "1") {
        continue;
      }
      if (tok.rfind("Z(", 0) == 0) {
        int  i = 0, j = 0;
        char close = 0, comma = 0;
        std::istringstream body(tok.substr(2));
        if (!(body >> i >> comma >> j >> close) || comma != ',' || close != ')'
            || body.peek() != EOF) {
          throw ParseError("bad chord token '" + tok + "'");
        }
        if (i < 1 || j < 1) {
          throw InvalidGenerator("chord strands must be positive: '" + tok + "'");
        }
        out.symbols.push_back(DiagSymbol::chord(i, j));
        continue;
      }
      auto at = tok.find('@');
      if (at == std::string::npos) {
        throw ParseError("bead token needs '@strand': '" + tok + "'");
      }
      Pi1Letter x;
      if (!parse_pi1_token(tok.substr(0, at), x)) {
        throw ParseError("bad bead letter in '" + tok + "'");
      }
      std::string strand = tok.substr(at + 1);
      if (strand.empty() || !std::all_of(strand.begin(), strand.end(),
                                         [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("bad strand in '" + tok + "'");
      }
      int k = std::stoi(strand);
      if (k < 1) {
        throw InvalidGenerator("strand index must be positive: '" + tok + "'");
      }
      out.symbols.push_back(DiagSymbol::bead(k, x));
    }
    return out;
  }

  template <typename Coeff = Integer>
  class WreathDiagram {
   public:
    using coeff_type = Coeff;
    using key_type   = std::pair<DiagMonomial, Permutation>;
    using term_map   = std::map<key_type, Coeff>;

    WreathDiagram() = default;
    WreathDiagram(int n, Truncation t) : n_(n), trunc_(t) {}

    static WreathDiagram monomial(int n, Truncation t, DiagMonomial m,
                                  Permutation pi, Coeff c = Coeff(1)) {
      WreathDiagram x(n, t);
      x.add(std::move(m), std::move(pi), c);
      return x;
    }

    [[nodiscard]] int strands() const {
      return n_;
    }
    [[nodiscard]] Truncation const& truncation() const {
      return trunc_;
    }
    [[nodiscard]] bool overflow() const {
      return overflow_;
    }
    [[nodiscard]] term_map const& terms() const {
      return terms_;
    }
    [[nodiscard]] bool is_zero() const {
      return terms_.empty();
    }

    void mark_overflow() {
      overflow_ = true;
    }

    // Terms outside the truncation are not stored; they set the flag.
    void add(DiagMonomial m, Permutation pi, Coeff const& c) {
      check_monomial(m, pi);
      if (surfbraid::is_zero(c)) {
        return;
      }
      if (!m.fits(trunc_)) {
        overflow_ = true;
        return;
      }
      key_type key{std::move(m), std::move(pi)};
      auto     it = terms_.find(key);
      if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
      }
      it->second += c;
      if (surfbraid::is_zero(it->second)) {
        terms_.erase(it);
      }
    }

    WreathDiagram& operator+=(WreathDiagram const& y) {
      check_same(y);
      for (auto const& [k, c] : y.terms_) {
        add(k.first, k.second, c);
      }
      overflow_ = overflow_ || y.overflow_;
      return *this;
    }
    WreathDiagram& operator-=(WreathDiagram const& y) {
      check_same(y);
      for (auto const& [k, c] : y.terms_) {
        add(k.first, k.second, -c);
      }
      overflow_ = overflow_ || y.overflow_;
      return *this;
    }
    friend WreathDiagram operator+(WreathDiagram x, WreathDiagram const& y) {
      return x += y;
    }
    friend WreathDiagram operator-(WreathDiagram x, WreathDiagram const& y) {
      return x -= y;
    }
    friend WreathDiagram operator*(Coeff const& c, WreathDiagram const& x) {
      WreathDiagram out(x.n_, x.trunc_);
      for (auto const& [k, d] : x.terms_) {
        out.add(k.first, k.second, c * d);
      }
      out.overflow_ = x.overflow_;
      return out;
    }

    // Equal terms; truncation and overflow are not compared.
    bool operator==(WreathDiagram const& y) const {
      return n_ == y.n_ && terms_ == y.terms_;
    }

    void check_same(WreathDiagram const& y) const {
      if (n_ != y.n_) {
        throw DimensionError("diagrams on " + std::to_string(n_) + " and "
                             + std::to_string(y.n_) + " strands");
      }
    }

   private:
    void check_monomial(DiagMonomial const& m, Permutation const& pi) const {
      if (pi.size() != n_) {
        throw DimensionError("permutation size does not match the strand count");
      }
      for (auto const& x : m.symbols) {
        if (x.a < 1 || x.a > n_ || (x.kind == SymbolKind::Chord && (x.b < 1 || x.b > n_))) {
          throw InvalidGenerator("symbol " + to_string(x) + " outside " + std::to_string(n_)
                                 + " strands");
        }
      }
    }

    int        n_ = 2;
    Truncation trunc_{};
    term_map   terms_;
    bool       overflow_ = false;
  };

  // (x; pi)(y; rho) = (x . pi(y); pi rho).
  template <typename Coeff>
  WreathDiagram<Coeff> diag_mul(WreathDiagram<Coeff> const& x, WreathDiagram<Coeff> const& y) {
    x.check_same(y);
    WreathDiagram<Coeff> out(x.strands(), x.truncation());
    if (x.overflow() || y.overflow()) {
      out.mark_overflow();
    }
    for (auto const& [kx, cx] : x.terms()) {
      for (auto const& [ky, cy] : y.terms()) {
        out.add(kx.first * relabel(ky.first, kx.second), kx.second * ky.second, cx * cy);
      }
    }
    return out;
  }

  template <typename Coeff>
  WreathDiagram<Coeff> operator*(WreathDiagram<Coeff> const& x, WreathDiagram<Coeff> const& y) {
    return diag_mul(x, y);
  }

  // Short display: "(Z(1,2); id) + -2 (a1@1 Z(1,2); (1 2))".
  template <typename Coeff>
  std::string to_string(WreathDiagram<Coeff> const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [k, c] : x.terms()) {
      if (!first) {
        out += " + ";
      }
      first = false;
      if (c != 1) {
        out += (c == -1 ? std::string("-") : to_string(c) + " ");
      }
      out += "(" + to_string(k.first) + "; " + to_string(k.second) + ")";
    }
    return out;
  }

  // Serialized form: "c * mono ; perm=(1)(2)" terms joined by " + ".
  template <typename Coeff>
  std::string format_terms(WreathDiagram<Coeff> const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [k, c] : x.terms()) {
      if (!first) {
        out += " + ";
      }
      first = false;
      out += to_string(c) + " * " + to_string(k.first) + " ; perm=" + k.second.cycles(true);
    }
    return out;
  }

  template <typename Coeff = Integer>
  WreathDiagram<Coeff> parse_wreath_diagram(std::string const& text, int n, Truncation t) {
    WreathDiagram<Coeff> out(n, t);
    std::vector<std::string> parts;
    std::size_t              start = 0;
    while (true) {
      auto plus = text.find(" + ", start);
      parts.push_back(text.substr(start, plus == std::string::npos ? std::string::npos
                                                                   : plus - start));
      if (plus == std::string::npos) {
        break;
      }
      start = plus + 3;
    }
    for (auto part : parts) {
      part.erase(0, part.find_first_not_of(" \t"));
      part.erase(part.find_last_not_of(" \t\r\n") + 1);
      if (part.empty() || part == "0") {
        continue;
      }
      Coeff c(1);
      if (auto star = part.find('*'); star != std::string::npos) {
        std::string cs = part.substr(0, star);
        cs.erase(cs.find_last_not_of(" \t") + 1);
        try {
          c = parse_coeff<Coeff>(cs);
        } catch (std::invalid_argument const& e) {
          throw ParseError(e.what());
        }
        part = part.substr(star + 1);
      }
      Permutation pi(n);
      if (auto semi = part.find(';'); semi != std::string::npos) {
        std::string tail = part.substr(semi + 1);
        tail.erase(0, tail.find_first_not_of(" \t"));
        if (tail.rfind("perm=", 0) != 0) {
          throw ParseError("expected 'perm=' after ';' in '" + part + "'");
        }
        pi   = parse_permutation(tail.substr(5), n);
        part = part.substr(0, semi);
      }
      auto m = parse_diag_monomial(part);
      if (!m.fits(t)) {
        throw OverflowError("monomial " + to_string(m) + " exceeds the truncation");
      }
      out.add(std::move(m), std::move(pi), c);
    }
    return out;
  }

  // The bead monomial of a wreath element: strand 1 first, then strand 2, ...
  inline DiagMonomial embed_beads(WreathElement const& e) {
    DiagMonomial m;
    for (std::size_t i = 0; i < e.beads.size(); ++i) {
      for (auto x : e.beads[i]) {
        m.symbols.push_back(DiagSymbol::bead(static_cast<int>(i) + 1, x));
      }
    }
    return m;
  }

  template <typename Coeff = Integer>
  WreathDiagram<Coeff> embed(WreathElement const& e, Truncation t) {
    auto m = embed_beads(e);
    if (!m.fits(t)) {
      throw OverflowError("bead word of length " + std::to_string(m.bead_length())
                          + " exceeds the truncation");
    }
    return WreathDiagram<Coeff>::monomial(static_cast<int>(e.beads.size()), t, std::move(m),
                                          e.perm);
  }

  // gamma^i Z_ij (gamma^-1)^i with identity permutation.
  template <typename Coeff = Integer>
  WreathDiagram<Coeff> gmp_generator(int i, int j, Pi1Word const& gamma,
                                     SurfaceParams const& s, Truncation t) {
    int const n = s.strands;
    if (i == j || i < 1 || j < 1 || i > n || j > n) {
      throw InvalidGenerator("gmp_generator needs distinct strands in 1.." + std::to_string(n));
    }
    SurfaceGroup const group(s);
    group.validate(gamma.letters);
    auto const g = Pi1Word(group.dehn_reduce(gamma.letters));
    DiagMonomial m;
    for (auto x : g.letters) {
      m.symbols.push_back(DiagSymbol::bead(i, x));
    }
    m.symbols.push_back(DiagSymbol::chord(i, j));
    for (auto x : inverse_word(g.letters)) {
      m.symbols.push_back(DiagSymbol::bead(i, x));
    }
    if (!m.fits(t)) {
      throw OverflowError("gmp_generator: bead length " + std::to_string(m.bead_length())
                          + " exceeds the truncation");
    }
    return WreathDiagram<Coeff>::monomial(n, t, std::move(m), Permutation(n));
  }

  // Sum of c . iota(eps0(u)) . (Z_{i,i+1}; s_i) . iota(eps0(v)).
  template <typename Coeff>
  WreathDiagram<Coeff> degree_one_symbol(JExpression<Coeff> const& e, SurfaceParams const& s,
                                         Truncation t) {
    validate(e, s);
    int const            n = s.strands;
    WreathDiagram<Coeff> out(n, t);
    for (auto const& term : e.summands) {
      auto left  = embed<Coeff>(epsilon0(term.u, s), t);
      auto right = embed<Coeff>(epsilon0(term.v, s), t);
      auto mid   = WreathDiagram<Coeff>::monomial(
          n, t, DiagMonomial{{DiagSymbol::chord(term.crossing, term.crossing + 1)}},
          Permutation::adjacent(n, term.crossing));
      auto prod = diag_mul(diag_mul(left, mid), right);
      if (prod.overflow()) {
        throw OverflowError("degree_one_symbol: product exceeds the truncation");
      }
      out += term.coef * prod;
    }
    return out;
  }

  // Erases every bead.  Lands in the beadless chord algebra, where chord
  // degree <= 1 has basis {(1; pi)} and {(Z_ij; pi)}.
  template <typename Coeff>
  WreathDiagram<Coeff> disk_augmentation(WreathDiagram<Coeff> const& x) {
    WreathDiagram<Coeff> out(x.strands(), x.truncation());
    if (x.overflow()) {
      out.mark_overflow();
    }
    for (auto const& [k, c] : x.terms()) {
      DiagMonomial m;
      for (auto const& sym : k.first.symbols) {
        if (sym.kind == SymbolKind::Chord) {
          m.symbols.push_back(sym);
        }
      }
      out.add(std::move(m), k.second, c);
    }
    return out;
  }

  // A basis element of chord degree <= 1 with a nonzero coordinate in the
  // disk augmentation, if any.  The coordinates are exact there because the
  // beadless relations start in chord degree 2.
  template <typename Coeff>
  std::optional<std::pair<typename WreathDiagram<Coeff>::key_type, Coeff>>
  disk_nonzero_certificate(WreathDiagram<Coeff> const& x) {
    auto aug = disk_augmentation(x);
    for (auto const& [k, c] : aug.terms()) {
      if (k.first.chord_degree() <= 1) {
        return std::make_pair(k, c);
      }
    }
    return std::nullopt;
  }

  // ---------------------------------------------------------------------
  // Relation instances

  enum class RelationFamily : std::uint8_t {
    BeadBead,
    BeadPush,
    BeadFar,
    ChordSym,
    ChordFar,
    FourT,
    ClosedSum
  };

  inline std::string to_string(RelationFamily f) {
    switch (f) {
      case RelationFamily::BeadBead: return "BeadBead";
      case RelationFamily::BeadPush: return "BeadPush";
      case RelationFamily::BeadFar: return "BeadFar";
      case RelationFamily::ChordSym: return "ChordSym";
      case RelationFamily::ChordFar: return "ChordFar";
      case RelationFamily::FourT: return "FourT";
      case RelationFamily::ClosedSum: return "ClosedSum";
    }
    return "?";
  }

  // Identifies one instance: family, strand indices and bead letters.
  //   BeadBead  [x^i, y^j]                      strands {i,j}, letters {x,y}
  //   BeadPush  x^i x^j Z_ij - Z_ij x^i x^j     strands {i,j}, letters {x}
  //   BeadFar   x^k Z_ij - Z_ij x^k             strands {i,j,k}, letters {x}
  //   ChordFar  [Z_ij, Z_kl]                    strands {i,j,k,l}
  //   FourT     [Z_ij, Z_jk + Z_ik]             strands {i,j,k}
  //   ClosedSum sum_s [A_s^i, B_s^i]            strands {i}
  struct RelationRef {
    RelationFamily         family = RelationFamily::FourT;
    std::vector<int>       strands;
    std::vector<Pi1Letter> letters;

    auto operator<=>(RelationRef const&) const = default;
  };

  inline std::string to_string(RelationRef const& r) {
    std::string out = to_string(r.family) + "(";
    for (std::size_t k = 0; k < r.letters.size(); ++k) {
      out += pi1::letter_name(r.letters[k]) + ";";
    }
    for (std::size_t k = 0; k < r.strands.size(); ++k) {
      out += (k == 0 ? "" : ",") + std::to_string(r.strands[k]);
    }
    return out + ")";
  }

  // The instance as a free-algebra element with identity permutation.
  template <typename Coeff = Integer>
  WreathDiagram<Coeff> relation_element(RelationRef const& r, SurfaceParams const& s,
                                        Truncation t) {
    int const            n = s.strands;
    WreathDiagram<Coeff> out(n, t);
    Permutation const    id(n);
    auto const&          st = r.strands;
    auto bead = [](int k, Pi1Letter x) { return DiagSymbol::bead(k, x); };
    auto add = [&](std::vector<DiagSymbol> syms, int sign) {
      out.add(DiagMonomial{std::move(syms)}, id, Coeff(sign));
    };
    switch (r.family) {
      case RelationFamily::BeadBead: {
        auto x = bead(st[0], r.letters[0]), y = bead(st[1], r.letters[1]);
        add({x, y}, 1);
        add({y, x}, -1);
        break;
      }
      case RelationFamily::BeadPush: {
        auto x = bead(st[0], r.letters[0]), y = bead(st[1], r.letters[0]);
        auto z = DiagSymbol::chord(st[0], st[1]);
        add({x, y, z}, 1);
        add({z, x, y}, -1);
        break;
      }
      case RelationFamily::BeadFar: {
        auto x = bead(st[2], r.letters[0]);
        auto z = DiagSymbol::chord(st[0], st[1]);
        add({x, z}, 1);
        add({z, x}, -1);
        break;
      }
      case RelationFamily::ChordSym: break;
      case RelationFamily::ChordFar: {
        auto z1 = DiagSymbol::chord(st[0], st[1]), z2 = DiagSymbol::chord(st[2], st[3]);
        add({z1, z2}, 1);
        add({z2, z1}, -1);
        break;
      }
      case RelationFamily::FourT: {
        auto zij = DiagSymbol::chord(st[0], st[1]);
        auto zjk = DiagSymbol::chord(st[1], st[2]);
        auto zik = DiagSymbol::chord(st[0], st[2]);
        add({zij, zjk}, 1);
        add({zij, zik}, 1);
        add({zjk, zij}, -1);
        add({zik, zij}, -1);
        break;
      }
      case RelationFamily::ClosedSum: {
        for (int h = 1; h <= s.genus; ++h) {
          auto a = bead(st[0], pi1::a(h)), b = bead(st[0], pi1::b(h));
          add({a, b}, 1);
          add({b, a}, -1);
        }
        break;
      }
    }
    return out;
  }

  struct RelationInstance {
    RelationRef            ref;
    WreathDiagram<Integer> element;
  };

  inline RelationFamily family_of(RelationInstance const& r) {
    return r.ref.family;
  }

  // Chord degree and bead length of the instances of a family.
  inline std::pair<int, int> relation_shape(RelationFamily f) {
    switch (f) {
      case RelationFamily::BeadBead: return {0, 2};
      case RelationFamily::BeadPush: return {1, 2};
      case RelationFamily::BeadFar: return {1, 1};
      case RelationFamily::ChordSym: return {1, 0};
      case RelationFamily::ChordFar: return {2, 0};
      case RelationFamily::FourT: return {2, 0};
      case RelationFamily::ClosedSum: return {0, 2};
    }
    return {0, 0};
  }

  // References of every instance of the given families with bead letters of
  // length one, restricted to shapes inside the truncation.  ChordSym has no
  // instances once chords are stored with i < j.
  inline std::vector<RelationRef> relation_refs(SurfaceParams const& s, Truncation t,
                                                std::vector<RelationFamily> const& families) {
    s.validate();
    int const                n       = s.strands;
    auto const               letters = SurfaceGroup(s).letters();
    std::vector<RelationRef> out;
    for (auto f : families) {
      auto [deg, len] = relation_shape(f);
      if (deg > t.max_chords || len > t.max_beads) {
        continue;
      }
      switch (f) {
        case RelationFamily::BeadBead:
          for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
              for (auto x : letters) {
                for (auto y : letters) {
                  out.push_back({f, {i, j}, {x, y}});
                }
              }
            }
          }
          break;
        case RelationFamily::BeadPush:
          for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
              for (auto x : letters) {
                out.push_back({f, {i, j}, {x}});
              }
            }
          }
          break;
        case RelationFamily::BeadFar:
          for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
              for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) {
                  continue;
                }
                for (auto x : letters) {
                  out.push_back({f, {i, j, k}, {x}});
                }
              }
            }
          }
          break;
        case RelationFamily::ChordSym: break;
        case RelationFamily::ChordFar:
          for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
              for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l) {
                  if (k == i || k == j || l == i || l == j || std::make_pair(i, j) > std::make_pair(k, l)) {
                    continue;
                  }
                  out.push_back({f, {i, j, k, l}, {}});
                }
              }
            }
          }
          break;
        case RelationFamily::FourT:
          for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
              for (int k = 1; k <= n; ++k) {
                if (i != j && j != k && i != k) {
                  out.push_back({f, {i, j, k}, {}});
                }
              }
            }
          }
          break;
        case RelationFamily::ClosedSum:
          if (s.boundary == 0 && s.genus >= 1) {
            for (int i = 1; i <= n; ++i) {
              out.push_back({f, {i}, {}});
            }
          }
          break;
      }
    }
    return out;
  }

  inline std::vector<RelationFamily> all_relation_families() {
    return {RelationFamily::BeadBead, RelationFamily::BeadPush, RelationFamily::BeadFar,
            RelationFamily::ChordSym, RelationFamily::ChordFar, RelationFamily::FourT,
            RelationFamily::ClosedSum};
  }

  inline std::vector<RelationInstance> relation_instances(SurfaceParams const& s, Truncation t) {
    std::vector<RelationInstance> out;
    for (auto const& ref : relation_refs(s, t, all_relation_families())) {
      out.push_back({ref, relation_element<Integer>(ref, s, t)});
    }
    return out;
  }

}  // namespace surfbraid

#endif  // SURFBRAID_DIAGRAM_HPP_
