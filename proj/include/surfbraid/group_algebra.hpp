#ifndef SURFBRAID_GROUP_ALGEBRA_HPP_
#define SURFBRAID_GROUP_ALGEBRA_HPP_

// Formal combinations of braid words, singular braids and their
// desingularization, and expressions in the ideal J generated by the
// differences sigma_i - sigma_i^-1.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "braid.hpp"

namespace surfbraid {

  // Terms are freely reduced words with nonzero coefficients.
  template <typename Coeff = Integer>
  class AlgebraElement {
   public:
    using coeff_type = Coeff;
    using term_map   = std::map<BraidWord, Coeff>;

    AlgebraElement() = default;

    static AlgebraElement word(BraidWord const& w, Coeff c = Coeff(1)) {
      AlgebraElement x;
      x.add(w, c);
      return x;
    }

    void add(BraidWord const& w, Coeff const& c) {
      if (surfbraid::is_zero(c)) {
        return;
      }
      auto key = free_reduce(w);
      auto it  = terms_.find(key);
      if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
      }
      it->second += c;
      if (surfbraid::is_zero(it->second)) {
        terms_.erase(it);
      }
    }

    [[nodiscard]] term_map const& terms() const {
      return terms_;
    }
    [[nodiscard]] bool is_zero() const {
      return terms_.empty();
    }
    [[nodiscard]] std::size_t size() const {
      return terms_.size();
    }

    AlgebraElement& operator+=(AlgebraElement const& y) {
      for (auto const& [w, c] : y.terms_) {
        add(w, c);
      }
      return *this;
    }
    AlgebraElement& operator-=(AlgebraElement const& y) {
      for (auto const& [w, c] : y.terms_) {
        add(w, -c);
      }
      return *this;
    }
    friend AlgebraElement operator+(AlgebraElement x, AlgebraElement const& y) {
      return x += y;
    }
    friend AlgebraElement operator-(AlgebraElement x, AlgebraElement const& y) {
      return x -= y;
    }
    friend AlgebraElement operator*(Coeff const& c, AlgebraElement const& x) {
      AlgebraElement out;
      for (auto const& [w, d] : x.terms_) {
        out.add(w, c * d);
      }
      return out;
    }

    bool operator==(AlgebraElement const&) const = default;

   private:
    term_map terms_;
  };

  // Bilinear extension of concatenation followed by free reduction.
  template <typename Coeff>
  AlgebraElement<Coeff> algebra_mul(AlgebraElement<Coeff> const& x,
                                    AlgebraElement<Coeff> const& y) {
    AlgebraElement<Coeff> out;
    for (auto const& [u, c] : x.terms()) {
      for (auto const& [v, d] : y.terms()) {
        out.add(u * v, c * d);
      }
    }
    return out;
  }

  template <typename Coeff>
  AlgebraElement<Coeff> operator*(AlgebraElement<Coeff> const& x,
                                  AlgebraElement<Coeff> const& y) {
    return algebra_mul(x, y);
  }

  // One "coef * word" per line; "0" for the zero element.
  template <typename Coeff>
  std::string to_string(AlgebraElement<Coeff> const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [w, c] : x.terms()) {
      out += to_string(c) + " * " + to_string(w) + "\n";
    }
    out.pop_back();
    return out;
  }

  template <typename Coeff = Integer>
  AlgebraElement<Coeff> parse_algebra_element(std::string const& text) {
    AlgebraElement<Coeff> out;
    std::istringstream    in(text);
    std::string           line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line == "0") {
        continue;
      }
      auto star = line.find('*');
      if (star == std::string::npos) {
        throw ParseError("expected 'coef * word' in '" + line + "'");
      }
      std::string cs = line.substr(0, star);
      cs.erase(0, cs.find_first_not_of(" \t"));
      cs.erase(cs.find_last_not_of(" \t") + 1);
      Coeff c;
      try {
        c = parse_coeff<Coeff>(cs);
      } catch (std::invalid_argument const& e) {
        throw ParseError(e.what());
      }
      out.add(parse_braid_word(line.substr(star + 1)), c);
    }
    return out;
  }

  // Each singular crossing becomes sigma_i (sign +) or sigma_i^-1 (sign -);
  // all 2^d resolutions are summed with the product of the signs.
  template <typename Coeff = Integer>
  AlgebraElement<Coeff> desingularize(BraidWord const& w) {
    std::vector<std::size_t> where;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w.letters[k].kind == LetterKind::Singular) {
        where.push_back(k);
      }
    }
    AlgebraElement<Coeff> out;
    std::size_t const     count = std::size_t{1} << where.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      BraidWord r    = w;
      int       sign = 1;
      for (std::size_t t = 0; t < where.size(); ++t) {
        bool negative = ((mask >> t) & 1U) != 0;
        int  idx      = w.letters[where[t]].index;
        r.letters[where[t]] = sigma(idx, negative ? -1 : 1);
        if (negative) {
          sign = -sign;
        }
      }
      out.add(r, Coeff(sign));
    }
    return out;
  }

  // c * u * (sigma_i - sigma_i^-1) * v.
  template <typename Coeff = Integer>
  struct JSummand {
    Coeff     coef = Coeff(1);
    BraidWord u;
    int       crossing = 1;
    BraidWord v;
  };

  template <typename Coeff = Integer>
  struct JExpression {
    std::vector<JSummand<Coeff>> summands;
  };

  template <typename Coeff>
  void validate(JExpression<Coeff> const& e, SurfaceParams const& s) {
    for (auto const& t : e.summands) {
      if (t.crossing < 1 || t.crossing > s.strands - 1) {
        throw InvalidGenerator("crossing index " + std::to_string(t.crossing)
                               + " out of range for " + to_string(s));
      }
      validate(t.u, s);
      validate(t.v, s);
    }
  }

  template <typename Coeff>
  AlgebraElement<Coeff> jexpr_value(JExpression<Coeff> const& e) {
    AlgebraElement<Coeff> out;
    for (auto const& t : e.summands) {
      if (t.crossing < 1) {
        throw InvalidGenerator("crossing index must be positive");
      }
      out.add(t.u * BraidWord{sigma(t.crossing)} * t.v, t.coef);
      out.add(t.u * BraidWord{sigma(t.crossing, -1)} * t.v, -t.coef);
    }
    return out;
  }

  // The factors of w = w_0 x_{i_1} w_1 ... x_{i_d} w_d as d one-summand
  // J-expressions u_k (sigma - sigma^-1) with the trailing word w_d kept
  // apart; their product times w_d is the desingularization of w.
  template <typename Coeff = Integer>
  std::pair<std::vector<JExpression<Coeff>>, BraidWord>
  singular_factors(BraidWord const& w) {
    std::vector<JExpression<Coeff>> factors;
    BraidWord                       pending;
    for (auto const& x : w.letters) {
      if (x.kind == LetterKind::Singular) {
        factors.push_back({{JSummand<Coeff>{Coeff(1), pending, x.index, {}}}});
        pending = {};
      } else {
        pending.letters.push_back(x);
      }
    }
    return {factors, pending};
  }

  // Parses "coef | u | i | v" summands separated by ';'.  An empty field is
  // the empty word.
  template <typename Coeff = Integer>
  JExpression<Coeff> parse_jexpression(std::string const& text) {
    JExpression<Coeff> out;
    std::size_t        start = 0;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      auto last = s.find_last_not_of(" \t");
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    while (start <= text.size()) {
      auto        stop = text.find(';', start);
      std::string part = text.substr(start, stop == std::string::npos ? std::string::npos
                                                                       : stop - start);
      start = stop == std::string::npos ? text.size() + 1 : stop + 1;
      if (trim(part).empty()) {
        continue;
      }
      std::vector<std::string> fields;
      std::size_t              f = 0;
      while (true) {
        auto bar = part.find('|', f);
        fields.push_back(trim(part.substr(f, bar == std::string::npos ? std::string::npos
                                                                      : bar - f)));
        if (bar == std::string::npos) {
          break;
        }
        f = bar + 1;
      }
      if (fields.size() != 4) {
        throw ParseError("J-expression summand needs 4 fields: '" + part + "'");
      }
      JSummand<Coeff> t;
      try {
        t.coef     = parse_coeff<Coeff>(fields[0].empty() ? "1" : fields[0]);
        t.crossing = std::stoi(fields[2]);
      } catch (std::exception const&) {
        throw ParseError("bad coefficient or crossing in '" + part + "'");
      }
      t.u = parse_braid_word(fields[1]);
      t.v = parse_braid_word(fields[3]);
      out.summands.push_back(std::move(t));
    }
    return out;
  }

  template <typename Coeff>
  std::string to_string(JExpression<Coeff> const& e) {
    std::string out;
    for (std::size_t k = 0; k < e.summands.size(); ++k) {
      auto const& t = e.summands[k];
      if (k != 0) {
        out += " ; ";
      }
      out += to_string(t.coef) + " | " + (t.u.empty() ? "" : to_string(t.u)) + " | "
             + std::to_string(t.crossing) + " | " + (t.v.empty() ? "" : to_string(t.v));
    }
    return out;
  }

}  // namespace surfbraid

#endif  // SURFBRAID_GROUP_ALGEBRA_HPP_
