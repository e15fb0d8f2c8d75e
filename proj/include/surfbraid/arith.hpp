#ifndef SURFBRAID_ARITH_HPP_
#define SURFBRAID_ARITH_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <type_traits>

namespace surfbraid {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  inline std::string to_string(Integer const& x) {
    return x.get_str();
  }

  inline std::string to_string(Rational const& x) {
    return x.get_str();
  }

  inline bool is_zero(Integer const& x) {
    return sgn(x) == 0;
  }

  inline bool is_zero(Rational const& x) {
    return sgn(x) == 0;
  }

  // Parses "3", "-2", "1/2"; throws std::invalid_argument on junk.
  template <typename Coeff>
  Coeff parse_coeff(std::string const& text) {
    Coeff c;
    if (c.set_str(text, 10) != 0) {
      throw std::invalid_argument("bad coefficient '" + text + "'");
    }
    if constexpr (std::is_same_v<Coeff, Rational>) {
      c.canonicalize();
    }
    return c;
  }

}  // namespace surfbraid

#endif  // SURFBRAID_ARITH_HPP_
