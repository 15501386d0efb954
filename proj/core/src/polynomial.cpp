#include "ckf/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "ckf/errors.hpp"

namespace ckf {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, Integer coefficient) {
  std::vector<Integer> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::one_plus_power(std::size_t degree) {
  return one() + monomial(degree);
}

IntPolynomial IntPolynomial::one_minus_power(std::size_t degree) {
  return one() - monomial(degree);
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string IntPolynomial::to_string(std::size_t max_terms) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  std::size_t written = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (max_terms > 0 && written == max_terms) {
      out << " + ...";
      break;
    }
    Integer mag = c < 0 ? Integer(-c) : c;
    if (written == 0) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
    ++written;
  }
  return out.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw NonDivisible("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree())
    throw NonDivisible("(" + p.to_string() + ") / (" + q.to_string() + ") is not a polynomial");

  std::vector<Integer> rem = p.coeffs();
  const auto& den = q.coeffs();
  const Integer& lead = den.back();
  const std::size_t shift_max = rem.size() - den.size();
  std::vector<Integer> quot(shift_max + 1);

  for (std::size_t s = shift_max + 1; s-- > 0;) {
    const Integer& top = rem[s + den.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0)
      throw NonDivisible("(" + p.to_string() + ") / (" + q.to_string() +
                         ") needs a non-integral coefficient");
    Integer factor = top / lead;
    for (std::size_t j = 0; j < den.size(); ++j) rem[s + j] -= factor * den[j];
    quot[s] = std::move(factor);
  }
  for (const auto& r : rem)
    if (r != 0)
      throw NonDivisible("(" + p.to_string() + ") / (" + q.to_string() + ") leaves a remainder");
  return IntPolynomial(std::move(quot));
}

bool is_palindromic(const IntPolynomial& p, std::size_t top) {
  if (p.degree() > static_cast<long>(top))
    throw std::invalid_argument("palindrome top degree below polynomial degree");
  for (std::size_t k = 0; k <= top / 2; ++k)
    if (p.coefficient(k) != p.coefficient(top - k)) return false;
  return true;
}

IntPolynomial exterior_poincare(const std::vector<int>& degrees) {
  IntPolynomial out = IntPolynomial::one();
  for (int d : degrees) {
    if (d <= 0) throw std::invalid_argument("exterior generator degree must be positive");
    out *= IntPolynomial::one_plus_power(static_cast<std::size_t>(d));
  }
  return out;
}

} // namespace ckf
