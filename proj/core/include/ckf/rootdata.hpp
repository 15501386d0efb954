#ifndef CKF_ROOTDATA_HPP_
#define CKF_ROOTDATA_HPP_

// Numeric invariants of simple complex Lie algebras and of reductive
// algebras built from them: rank, dimension, Weyl group order and the
// degrees of the fundamental invariant polynomials.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ckf/integer.hpp"

namespace ckf {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class CartanType {
public:
  // Throws std::invalid_argument outside A>=1, B>=2, C>=2, D>=3, E6-8, F4, G2.
  CartanType(Family family, int rank);

  // Accepts "E6", "d4", "A1"; case-insensitive.
  static CartanType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const;

  // C2 = B2 and D3 = A3 are admitted but are not new algebras.
  bool is_alias() const;

  auto operator<=>(const CartanType&) const = default;

private:
  Family family_;
  int rank_;
};

// Classical degrees d_i; the cardinality is the rank.
std::vector<int> invariant_degrees(const CartanType& t);
int number_of_roots(const CartanType& t);
int dimension(const CartanType& t);
Integer weyl_order(const CartanType& t);

// Simple factors plus a central torus, e.g. A5+A1+T1 for the complexified
// maximal compact subalgebra of su(2,4).
class ReductiveType {
public:
  ReductiveType() = default;
  ReductiveType(std::vector<CartanType> factors, int torus_rank = 0);

  // "A5+A1+T1", "C2+C2", "T1", "0" (trivial); empty text is trivial too.
  static ReductiveType parse(std::string_view text);

  const std::vector<CartanType>& factors() const { return factors_; }
  int torus_rank() const { return torus_rank_; }
  bool is_trivial() const { return factors_.empty() && torus_rank_ == 0; }

  int rank() const;
  int dimension() const;
  Integer weyl_order() const;
  // Degrees of all simple factors, followed by one 1 per torus dimension.
  std::vector<int> invariant_degrees() const;
  std::string label() const;

  bool operator==(const ReductiveType&) const = default;

private:
  std::vector<CartanType> factors_; // kept sorted, so equality is multiset equality
  int torus_rank_ = 0;
};

} // namespace ckf

#endif
