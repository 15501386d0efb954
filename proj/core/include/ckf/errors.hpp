#ifndef CKF_ERRORS_HPP_
#define CKF_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace ckf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial quotient requested where the divisor does not divide exactly.
struct NonDivisible : Error {
  using Error::Error;
};

// A compact space whose Poincare polynomial is neither computable nor tabulated.
struct Unresolvable : Error {
  using Error::Error;
};

struct NotFound : Error {
  NotFound(const std::string& what, std::vector<std::string> near)
      : Error(what), suggestions(std::move(near)) {}
  std::vector<std::string> suggestions;
};

struct ParseError : Error {
  using Error::Error;
};

// Carries every failed identity, one line per failure ("<record>: <equation>").
struct ValidationError : Error {
  explicit ValidationError(std::vector<std::string> failures_);
  std::vector<std::string> failures;
};

struct MissingAssociated : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

} // namespace ckf

#endif
