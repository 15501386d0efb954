#ifndef CKF_POLYNOMIAL_HPP_
#define CKF_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ckf/integer.hpp"

namespace ckf {

// Dense univariate polynomial in t with exact integer coefficients.
// coeffs()[k] is the coefficient of t^k; trailing zeros are always trimmed,
// so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial monomial(std::size_t degree, Integer coefficient = 1);
  // 1 + t^degree
  static IntPolynomial one_plus_power(std::size_t degree);
  // 1 - t^degree
  static IntPolynomial one_minus_power(std::size_t degree);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Integer coefficient(std::size_t k) const;
  Integer evaluate(const Integer& t) const;

  // "1 + t^3 + 2t^7"; with max_terms > 0 the tail is elided as " + ...".
  std::string to_string(std::size_t max_terms = 0) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q);

inline Integer coefficient(const IntPolynomial& p, std::size_t k) { return p.coefficient(k); }

// Returns r with p == q * r; throws NonDivisible otherwise (including q == 0).
IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q);

// coefficient(k) == coefficient(top - k) for every 0 <= k <= top.
// Throws std::invalid_argument if top < degree(p).
bool is_palindromic(const IntPolynomial& p, std::size_t top);

// Product of (1 + t^d) over the given degrees.
IntPolynomial exterior_poincare(const std::vector<int>& degrees);

} // namespace ckf

#endif
