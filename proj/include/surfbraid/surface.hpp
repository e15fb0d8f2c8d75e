#ifndef SURFBRAID_SURFACE_HPP_
#define SURFBRAID_SURFACE_HPP_

// Surface parameters and exact arithmetic in the fundamental group of the
// compact orientable surface of genus g with p boundary components.
//
// Generators are a_1..a_g, b_1..b_g, z_1..z_{p-1}.  A letter is an int code;
// the low bit is the inverse flag, so inverse(x) == x ^ 1.  Codes are laid
// out so that integer order is the tie-break order
//   a_1 < a_1^-1 < b_1 < b_1^-1 < a_2 < ... < z_1 < ... < z_{p-1}^-1.
//
// Normal forms:
//   p >= 1          free reduction (the group is free of rank 2g+p-1)
//   p = 0, g = 1    abelian form a^m b^k
//   p = 0, g >= 2   Dehn reduction against the cyclic permutations of
//                   [a_1,b_1^-1]...[a_g,b_g^-1] and its inverse, then the
//                   normal form of the splitting F(a_1,b_1) *_C F(a_2..b_g)
//                   over C = <[a_1,b_1^-1]> with shortlex coset transversals.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace surfbraid {

  struct SurfaceParams {
    int genus    = 0;
    int boundary = 0;
    int strands  = 2;

    auto operator<=>(SurfaceParams const&) const = default;

    // Rank of the free generating set {a_s, b_s, z_k}.
    [[nodiscard]] int num_pi1_generators() const {
      return 2 * genus + std::max(boundary - 1, 0);
    }

    [[nodiscard]] bool closed() const {
      return boundary == 0;
    }

    void validate() const {
      if (genus < 0 || boundary < 0) {
        throw ParameterError("genus and boundary must be non-negative");
      }
      if (strands < 2) {
        throw ParameterError("at least two strands are required");
      }
      if (strands > 64) {
        throw ParameterError("strand count above 64 is not supported");
      }
    }
  };

  inline std::string to_string(SurfaceParams const& s) {
    return "(g=" + std::to_string(s.genus) + ",p=" + std::to_string(s.boundary)
           + ",n=" + std::to_string(s.strands) + ")";
  }

  using Pi1Letter = std::int32_t;

  namespace pi1 {
    constexpr Pi1Letter z_offset = 1 << 20;

    constexpr Pi1Letter a(int s, bool inverse = false) {
      return 4 * (s - 1) + (inverse ? 1 : 0);
    }
    constexpr Pi1Letter b(int s, bool inverse = false) {
      return 4 * (s - 1) + 2 + (inverse ? 1 : 0);
    }
    constexpr Pi1Letter z(int k, bool inverse = false) {
      return z_offset + 2 * (k - 1) + (inverse ? 1 : 0);
    }
    constexpr Pi1Letter inverse(Pi1Letter x) {
      return x ^ 1;
    }
    constexpr bool is_inverse(Pi1Letter x) {
      return (x & 1) != 0;
    }
    constexpr bool is_z(Pi1Letter x) {
      return x >= z_offset;
    }
    // 1-based handle (a, b) or boundary (z) index.
    constexpr int index(Pi1Letter x) {
      return is_z(x) ? (x - z_offset) / 2 + 1 : x / 4 + 1;
    }
    constexpr bool is_a(Pi1Letter x) {
      return !is_z(x) && (x % 4) < 2;
    }
    constexpr bool is_b(Pi1Letter x) {
      return !is_z(x) && (x % 4) >= 2;
    }
    // Dense index 0..2g+p-2 of the underlying generator.
    constexpr int dense_generator(Pi1Letter x, int genus) {
      return is_z(x) ? 2 * genus + index(x) - 1 : x / 2;
    }

    inline std::string letter_name(Pi1Letter x) {
      std::string out = is_z(x) ? "z" : (is_a(x) ? "a" : "b");
      out += std::to_string(index(x));
      if (is_inverse(x)) {
        out += "^-1";
      }
      return out;
    }
  }  // namespace pi1

  struct Pi1Word {
    std::vector<Pi1Letter> letters;

    Pi1Word() = default;
    Pi1Word(std::initializer_list<Pi1Letter> il) : letters(il) {}
    explicit Pi1Word(std::vector<Pi1Letter> v) : letters(std::move(v)) {}

    [[nodiscard]] bool empty() const {
      return letters.empty();
    }
    [[nodiscard]] std::size_t size() const {
      return letters.size();
    }

    auto operator<=>(Pi1Word const&) const = default;
  };

  // Length first, then letter codes.
  inline bool shortlex_less(std::vector<Pi1Letter> const& u,
                            std::vector<Pi1Letter> const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  inline void free_reduce_in_place(std::vector<Pi1Letter>& w) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (top > 0 && w[top - 1] == pi1::inverse(w[i])) {
        --top;
      } else {
        w[top++] = w[i];
      }
    }
    w.resize(top);
  }

  inline std::vector<Pi1Letter> free_reduce(std::vector<Pi1Letter> w) {
    free_reduce_in_place(w);
    return w;
  }

  inline std::vector<Pi1Letter> inverse_word(std::vector<Pi1Letter> const& w) {
    std::vector<Pi1Letter> out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x = pi1::inverse(x);
    }
    return out;
  }

  inline std::string to_string(Pi1Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += pi1::letter_name(w.letters[i]);
    }
    return out;
  }

  // Parses one token "a1", "b2^-1", "z1".  Returns false if the token does not
  // start with a, b or z; throws ParseError on a malformed index or suffix.
  inline bool parse_pi1_token(std::string const& tok, Pi1Letter& out) {
    if (tok.empty() || (tok[0] != 'a' && tok[0] != 'b' && tok[0] != 'z')) {
      return false;
    }
    std::string body = tok.substr(1);
    bool        inv  = false;
    if (auto pos = body.find('^'); pos != std::string::npos) {
      if (body.substr(pos) != "^-1") {
        throw ParseError("bad exponent in token '" + tok + "'");
      }
      inv  = true;
      body = body.substr(0, pos);
    }
    if (body.empty()
        || !std::all_of(body.begin(), body.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      throw ParseError("bad index in token '" + tok + "'");
    }
    int idx = std::stoi(body);
    if (idx < 1) {
      throw InvalidGenerator("generator index must be positive: '" + tok + "'");
    }
    switch (tok[0]) {
      case 'a': out = pi1::a(idx, inv); break;
      case 'b': out = pi1::b(idx, inv); break;
      default: out = pi1::z(idx, inv); break;
    }
    return true;
  }

  // The fundamental group of the surface, with its normal form.  Cheap to
  // construct; instances are immutable after construction.
  class SurfaceGroup {
   public:
    explicit SurfaceGroup(SurfaceParams s) : params_(s) {
      if (s.genus < 0 || s.boundary < 0) {
        throw ParameterError("genus and boundary must be non-negative");
      }
      for (int r = 1; r <= s.genus; ++r) {
        relator_.insert(relator_.end(),
                        {pi1::a(r), pi1::b(r, true), pi1::a(r, true), pi1::b(r)});
      }
      if (uses_amalgam()) {
        c_left_ = {relator_.begin(), relator_.begin() + 4};
        c_right_ = inverse_word({relator_.begin() + 4, relator_.end()});
      }
    }

    [[nodiscard]] SurfaceParams const& params() const {
      return params_;
    }

    [[nodiscard]] bool is_free() const {
      return params_.boundary >= 1;
    }

    // The word [a_1,b_1^-1]...[a_g,b_g^-1]; trivial in the group when p = 0.
    [[nodiscard]] std::vector<Pi1Letter> const& surface_relator() const {
      return relator_;
    }

    [[nodiscard]] bool valid_letter(Pi1Letter x) const {
      if (x < 0) {
        return false;
      }
      int idx = pi1::index(x);
      if (pi1::is_z(x)) {
        return idx >= 1 && idx <= params_.boundary - 1;
      }
      return idx >= 1 && idx <= params_.genus;
    }

    void validate(std::vector<Pi1Letter> const& w) const {
      for (auto x : w) {
        if (!valid_letter(x)) {
          throw InvalidGenerator("generator " + pi1::letter_name(x)
                                 + " is not defined on the surface "
                                 + to_string(params_));
        }
      }
    }

    // Every signed generator letter, in tie-break order.
    [[nodiscard]] std::vector<Pi1Letter> letters() const {
      std::vector<Pi1Letter> out;
      for (int s = 1; s <= params_.genus; ++s) {
        out.insert(out.end(),
                   {pi1::a(s), pi1::a(s, true), pi1::b(s), pi1::b(s, true)});
      }
      for (int k = 1; k <= params_.boundary - 1; ++k) {
        out.insert(out.end(), {pi1::z(k), pi1::z(k, true)});
      }
      return out;
    }

    [[nodiscard]] Pi1Word normalize(Pi1Word const& w) const {
      validate(w.letters);
      return Pi1Word(normal_form(w.letters));
    }

    [[nodiscard]] Pi1Word mul(Pi1Word const& u, Pi1Word const& v) const {
      std::vector<Pi1Letter> w = u.letters;
      w.insert(w.end(), v.letters.begin(), v.letters.end());
      return normalize(Pi1Word(std::move(w)));
    }

    [[nodiscard]] Pi1Word inv(Pi1Word const& u) const {
      return normalize(Pi1Word(inverse_word(u.letters)));
    }

    [[nodiscard]] bool is_trivial(Pi1Word const& w) const {
      validate(w.letters);
      if (uses_amalgam()) {
        return dehn_reduce(w.letters).empty();
      }
      return normal_form(w.letters).empty();
    }

    [[nodiscard]] bool equal(Pi1Word const& u, Pi1Word const& v) const {
      return normalize(u) == normalize(v);
    }

    // Unchecked normal form on raw letters (callers validated already).
    [[nodiscard]] std::vector<Pi1Letter>
    normal_form(std::vector<Pi1Letter> w) const {
      free_reduce_in_place(w);
      if (w.empty() || is_free()) {
        return w;
      }
      if (params_.genus == 1) {
        return abelian_form(w);
      }
      return amalgam_form(dehn_reduce(std::move(w)));
    }

    // Greedy Dehn reduction for the closed surface relator (g >= 2): replace
    // any subword longer than half a cyclic permutation of the relator (or
    // its inverse) by the inverse of the complementary piece.  Each letter
    // occurs once in the relator, so a letter fixes its relator position.
    [[nodiscard]] std::vector<Pi1Letter>
    dehn_reduce(std::vector<Pi1Letter> w) const {
      free_reduce_in_place(w);
      if (relator_.empty() || params_.boundary != 0) {
        return w;
      }
      std::size_t const len  = relator_.size();
      std::size_t const half = len / 2;
      std::vector<Pi1Letter> const rel_inv = inverse_word(relator_);
      auto position = [&](std::vector<Pi1Letter> const& r, Pi1Letter x) {
        return static_cast<std::size_t>(
            std::find(r.begin(), r.end(), x) - r.begin());
      };
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t k = 0; k < w.size() && !changed; ++k) {
          for (auto const* r : {&relator_, &rel_inv}) {
            std::size_t q = position(*r, w[k]);
            if (q == len) {
              continue;
            }
            std::size_t run = 0;
            while (run < len && k + run < w.size()
                   && w[k + run] == (*r)[(q + run) % len]) {
              ++run;
            }
            if (run <= half) {
              continue;
            }
            std::vector<Pi1Letter> comp;
            for (std::size_t t = run; t < len; ++t) {
              comp.push_back((*r)[(q + t) % len]);
            }
            comp = inverse_word(comp);
            std::vector<Pi1Letter> next(w.begin(), w.begin() + k);
            next.insert(next.end(), comp.begin(), comp.end());
            next.insert(next.end(), w.begin() + k + run, w.end());
            free_reduce_in_place(next);
            w       = std::move(next);
            changed = true;
            break;
          }
        }
      }
      return w;
    }

   private:
    [[nodiscard]] bool uses_amalgam() const {
      return params_.boundary == 0 && params_.genus >= 2;
    }

    static std::vector<Pi1Letter> abelian_form(std::vector<Pi1Letter> const& w) {
      long ea = 0, eb = 0;
      for (auto x : w) {
        long d = pi1::is_inverse(x) ? -1 : 1;
        (pi1::is_a(x) ? ea : eb) += d;
      }
      std::vector<Pi1Letter> out;
      for (long i = 0; i < std::labs(ea); ++i) {
        out.push_back(pi1::a(1, ea < 0));
      }
      for (long i = 0; i < std::labs(eb); ++i) {
        out.push_back(pi1::b(1, eb < 0));
      }
      return out;
    }

    // Factor 0 holds a_1, b_1; factor 1 holds the other handles.
    static int factor(Pi1Letter x) {
      return pi1::index(x) == 1 ? 0 : 1;
    }

    [[nodiscard]] std::vector<Pi1Letter> const& amalgam_c(int f) const {
      return f == 0 ? c_left_ : c_right_;
    }

    [[nodiscard]] std::vector<Pi1Letter> c_power(int f, long j) const {
      auto const& c = amalgam_c(f);
      std::vector<Pi1Letter> base = j >= 0 ? c : inverse_word(c);
      std::vector<Pi1Letter> out;
      for (long t = 0; t < std::labs(j); ++t) {
        out.insert(out.end(), base.begin(), base.end());
      }
      return out;
    }

    // y = c^j r with r the shortlex-least element of the coset C y.
    [[nodiscard]] std::pair<long, std::vector<Pi1Letter>>
    decompose(std::vector<Pi1Letter> const& y, int f) const {
      long const bound = 2 * static_cast<long>(y.size())
                             / static_cast<long>(amalgam_c(f).size())
                         + 2;
      long                   best_j = 0;
      std::vector<Pi1Letter> best   = y;
      for (long j = -bound; j <= bound; ++j) {
        auto cand = c_power(f, -j);
        cand.insert(cand.end(), y.begin(), y.end());
        free_reduce_in_place(cand);
        if (shortlex_less(cand, best)) {
          best   = std::move(cand);
          best_j = j;
        }
      }
      return {best_j, best};
    }

    [[nodiscard]] std::vector<Pi1Letter>
    amalgam_form(std::vector<Pi1Letter> const& w) const {
      struct Syllable {
        int                    f;
        std::vector<Pi1Letter> w;
      };
      long                  k = 0;
      std::vector<Syllable> syl;

      auto push_left = [&](long j) {
        for (std::size_t idx = syl.size(); idx-- > 0 && j != 0;) {
          auto y = syl[idx].w;
          auto c = c_power(syl[idx].f, j);
          y.insert(y.end(), c.begin(), c.end());
          free_reduce_in_place(y);
          auto [j2, r] = decompose(y, syl[idx].f);
          syl[idx].w   = std::move(r);
          j            = j2;
        }
        k += j;
      };

      auto append = [&](int f, std::vector<Pi1Letter> y) {
        if (!syl.empty() && syl.back().f == f) {
          auto merged = std::move(syl.back().w);
          syl.pop_back();
          merged.insert(merged.end(), y.begin(), y.end());
          y = std::move(merged);
        }
        free_reduce_in_place(y);
        auto [j, r] = decompose(y, f);
        push_left(j);
        if (!r.empty()) {
          syl.push_back({f, std::move(r)});
        }
      };

      std::size_t i = 0;
      while (i < w.size()) {
        int         f = factor(w[i]);
        std::size_t j = i;
        while (j < w.size() && factor(w[j]) == f) {
          ++j;
        }
        append(f, {w.begin() + i, w.begin() + j});
        i = j;
      }
      std::vector<Pi1Letter> out = c_power(0, k);
      for (auto const& s : syl) {
        out.insert(out.end(), s.w.begin(), s.w.end());
      }
      free_reduce_in_place(out);
      return out;
    }

    SurfaceParams          params_;
    std::vector<Pi1Letter> relator_;
    std::vector<Pi1Letter> c_left_;
    std::vector<Pi1Letter> c_right_;
  };

  inline Pi1Word pi1_normalize(Pi1Word const& w, SurfaceParams const& s) {
    return SurfaceGroup(s).normalize(w);
  }

  inline Pi1Word pi1_mul(Pi1Word const& u, Pi1Word const& v,
                         SurfaceParams const& s) {
    return SurfaceGroup(s).mul(u, v);
  }

  inline Pi1Word pi1_inv(Pi1Word const& u, SurfaceParams const& s) {
    return SurfaceGroup(s).inv(u);
  }

  // Whitespace-separated tokens.  Braid tokens (s1, x1) are rejected here.
  inline Pi1Word parse_pi1_word(std::string const& text) {
    std::istringstream in(text);
    std::string        tok;
    Pi1Word            out;
    while (in >> tok) {
      if (tok == "1") {
        continue;
      }
      Pi1Letter x;
      if (!parse_pi1_token(tok, x)) {
        throw ParseError("'" + tok + "' is not a surface group generator");
      }
      out.letters.push_back(x);
    }
    return out;
  }

  inline Pi1Word parse_pi1_word(std::string const& text, SurfaceParams const& s) {
    Pi1Word w = parse_pi1_word(text);
    SurfaceGroup(s).validate(w.letters);
    return w;
  }

}  // namespace surfbraid

#endif  // SURFBRAID_SURFACE_HPP_
