#ifndef CKF_OBSTRUCTIONS_HPP_
#define CKF_OBSTRUCTIONS_HPP_

// Tests that rule out solvable (hence amenable) compact Clifford-Klein forms
// of a reductive homogeneous space G/H, and their aggregate.
//
//   rank           rank g = rank h forces chi(G_u/H_u) != 0, impossible for
//                  a solvmanifold quotient.
//   cohomology     with n = dim g - (d(G) - d(H)), H^n(g) = H^n(g_u) = 0
//                  contradicts injectivity of H^n(g,b) -> H^n(g).
//   pontryagin     p_i(K/K_H) = p_i(G_u/D_u) = 0 != p_i(G_u/H_u).
//   imported       exclusion flags taken from external tables.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ckf/catalog.hpp"

namespace ckf {

enum class Status { Obstructed, NotObstructed, Unknown };

enum class ReasonKind { EqualRank, CohomologyDegree, Pontryagin, ImportedExclusion };

struct Reason {
  ReasonKind kind = ReasonKind::EqualRank;
  int index = 0; // n for CohomologyDegree, i for Pontryagin
  bool operator==(const Reason&) const = default;
};

struct Evidence {
  std::string quantity;
  std::string value;
  std::string citation;
  bool operator==(const Evidence&) const = default;
};

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Reason> reason; // present iff Obstructed
  std::vector<Evidence> evidence;
  std::vector<std::string> missing; // non-empty iff Unknown

  bool operator==(const Verdict&) const = default;
};

const char* to_string(Status s);
std::string to_string(const Reason& r); // "CohomologyDegree(16)"
// "Obstructed (Pontryagin(2))", "NotObstructed", "Unknown"
std::string summary(const Verdict& v);

Verdict rank_obstruction(const Catalog& c, const PairRecord& p);

// dim g - (noncompact_dim(g) - noncompact_dim(h)), checked against
// dim k + dim p_H; throws DimensionMismatch when the two disagree.
int codimension_n(const Catalog& c, const PairRecord& p);

Verdict solvable_cohomology_obstruction(const Catalog& c, const PairRecord& p);

// Applies to symmetric records and to any record that supplies d.
bool pontryagin_applicable(const PairRecord& p);
Verdict pontryagin_obstruction(const Catalog& c, const PairRecord& p, int i);

Verdict imported_exclusion(const PairRecord& p);

struct PairAssessment {
  std::string pair;
  PairFamily family = PairFamily::Symmetric;
  Verdict rank;
  Verdict cohomology;
  std::optional<Verdict> pontryagin; // empty when not applicable
  Verdict imported;
  Verdict aggregate;
};

// Runs every applicable test. The aggregate is Obstructed iff some test is;
// its reason is the first to fire in the order rank, cohomology, Pontryagin
// (indices in the given order), imported.
PairAssessment assess(const Catalog& c, const PairRecord& p,
                      std::span<const int> pontryagin_indices);
Verdict amenable_verdict(const Catalog& c, const PairRecord& p,
                         std::span<const int> pontryagin_indices);
Verdict amenable_verdict(const Catalog& c, const PairRecord& p);

} // namespace ckf

#endif
