#ifndef CKF_COHOMOLOGY_HPP_
#define CKF_COHOMOLOGY_HPP_

// Rational Poincare polynomials and Euler characteristics of compact Lie
// groups and compact homogeneous spaces, plus the degree test that decides
// when a Pontryagin class is forced to vanish.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ckf/integer.hpp"
#include "ckf/polynomial.hpp"
#include "ckf/rootdata.hpp"

namespace ckf {

// Product of (1 + t^d) over explicit degrees.
struct FactorTerm {
  std::vector<int> degrees;
  bool operator==(const FactorTerm&) const = default;
};

// A built-in family, e.g. {"SU(2n)/Sp(n)", 3} for SU(6)/Sp(3).
struct TemplateTerm {
  std::string name;
  int n = 0;
  bool operator==(const TemplateTerm&) const = default;
};

using ClosedFormTerm = std::variant<FactorTerm, TemplateTerm>;

// Names accepted by TemplateTerm.
std::vector<std::string> closed_form_templates();

// Degrees d with P = prod (1 + t^d) for a template instance.
// SU(2n)/Sp(n): 5, 9, ..., 4n-3.
// SU(n)/SO(n): 5, 9, ..., 4k+1 for n = 2k+1; 5, ..., 4k-3 and 2k for n = 2k.
std::vector<int> template_degrees(const TemplateTerm& term);

struct ClosedFormEntry {
  std::string id;
  ReductiveType ambient;
  ReductiveType subgroup;
  std::vector<ClosedFormTerm> terms;
  std::string citation;

  IntPolynomial poincare() const;
  bool operator==(const ClosedFormEntry&) const = default;
};

// Read-only after construction. add() rejects entries whose top degree does
// not equal dim(ambient) - dim(subgroup), or that lack a citation.
class ClosedFormTable {
public:
  void add(ClosedFormEntry entry);
  const ClosedFormEntry* find(const std::string& id) const;
  const std::map<std::string, ClosedFormEntry>& entries() const { return entries_; }
  bool operator==(const ClosedFormTable&) const = default;

private:
  std::map<std::string, ClosedFormEntry> entries_;
};

// Checks an entry without inserting it; returns one message per problem.
std::vector<std::string> check_closed_form(const ClosedFormEntry& entry);

enum class SpaceKind { Group, EqualRankQuotient, ClosedForm, Imported };

const char* to_string(SpaceKind kind);
std::optional<SpaceKind> space_kind_from_string(const std::string& s);

struct CompactSpaceDescriptor {
  std::string label;                     // e.g. "E6/F4"
  SpaceKind kind = SpaceKind::Group;
  ReductiveType ambient;                 // unused for kind=ClosedForm
  std::optional<ReductiveType> subgroup; // absent for kind=Group
  std::string closed_form_id;            // kind=ClosedForm
  std::string citation;                  // kind=Imported

  bool operator==(const CompactSpaceDescriptor&) const = default;
};

CompactSpaceDescriptor group_space(const ReductiveType& g);
CompactSpaceDescriptor equal_rank_space(const ReductiveType& g, const ReductiveType& h);

// prod over simple factors of prod_i (1 + t^(2 d_i - 1)), times (1 + t)^torus.
IntPolynomial poincare_compact_group(const ReductiveType& g);

// prod_i (1 - t^(2 d_i(G))) / prod_j (1 - t^(2 e_j(H))), torus entries of h
// counting as e_j = 1. Requires rank(g) == rank(h); throws
// std::invalid_argument otherwise and NonDivisible if the quotient fails.
IntPolynomial poincare_equal_rank_quotient(const ReductiveType& g, const ReductiveType& h);

// Resolves any descriptor; throws Unresolvable for kind=Imported, for
// closed-form ids missing from the table and for unequal-rank quotients.
IntPolynomial symmetric_space_poincare(const CompactSpaceDescriptor& d,
                                       const ClosedFormTable& table);

// |W_G| / |W_H| at equal rank, 0 when the ambient rank is larger.
// Throws Unresolvable when neither ambient nor subgroup is known.
Integer euler_characteristic(const CompactSpaceDescriptor& d, const ClosedFormTable& table);

enum class DegreeVanishing { Vanishes, UnknownByDegree };

// Vanishes iff the coefficient of t^(4i) is exactly zero. Never certifies
// non-vanishing. Propagates Unresolvable.
DegreeVanishing pontryagin_vanishes_by_degree(const CompactSpaceDescriptor& d, int i,
                                              const ClosedFormTable& table);

} // namespace ckf

#endif
