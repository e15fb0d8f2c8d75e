#ifndef SURFBRAID_ERRORS_HPP_
#define SURFBRAID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace surfbraid {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A token or index that does not name a generator of the ambient surface.
  class InvalidGenerator : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // Operands built for different strand counts.
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  // A product or embedding left the truncation (D, L).
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  class ParameterError : public Error {
   public:
    using Error::Error;
  };

  class HypothesisError : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedDegree : public Error {
   public:
    using Error::Error;
  };

  // Search budgets and combinatorial caps.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

}  // namespace surfbraid

#endif  // SURFBRAID_ERRORS_HPP_
