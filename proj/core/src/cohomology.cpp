#include "ckf/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ckf/errors.hpp"

namespace ckf {

std::vector<std::string> closed_form_templates() { return {"SU(2n)/Sp(n)", "SU(n)/SO(n)"}; }

std::vector<int> template_degrees(const TemplateTerm& term) {
  std::vector<int> d;
  if (term.name == "SU(2n)/Sp(n)") {
    if (term.n < 1) throw std::invalid_argument("SU(2n)/Sp(n) needs n >= 1");
    for (int j = 1; j <= term.n - 1; ++j) d.push_back(4 * j + 1);
  } else if (term.name == "SU(n)/SO(n)") {
    if (term.n < 2) throw std::invalid_argument("SU(n)/SO(n) needs n >= 2");
    const int k = term.n / 2;
    if (term.n % 2 == 1) {
      for (int j = 1; j <= k; ++j) d.push_back(4 * j + 1);
    } else {
      for (int j = 1; j <= k - 1; ++j) d.push_back(4 * j + 1);
      d.push_back(2 * k); // Euler class of the oriented bundle
    }
  } else {
    throw std::invalid_argument("unknown closed-form template '" + term.name + "'");
  }
  return d;
}

IntPolynomial ClosedFormEntry::poincare() const {
  IntPolynomial p = IntPolynomial::one();
  for (const auto& term : terms) {
    if (const auto* f = std::get_if<FactorTerm>(&term))
      p *= exterior_poincare(f->degrees);
    else
      p *= exterior_poincare(template_degrees(std::get<TemplateTerm>(term)));
  }
  return p;
}

std::vector<std::string> check_closed_form(const ClosedFormEntry& entry) {
  std::vector<std::string> problems;
  if (entry.id.empty()) problems.push_back("closed form without id");
  if (entry.citation.empty()) problems.push_back(entry.id + ": missing citation");
  long top = 0;
  try {
    top = entry.poincare().degree();
  } catch (const std::invalid_argument& e) {
    problems.push_back(entry.id + ": " + e.what());
    return problems;
  }
  const int expected = entry.ambient.dimension() - entry.subgroup.dimension();
  if (top != expected)
    problems.push_back(entry.id + ": top degree " + std::to_string(top) +
                       " != dim(ambient) - dim(subgroup) = " + std::to_string(expected));
  return problems;
}

void ClosedFormTable::add(ClosedFormEntry entry) {
  auto problems = check_closed_form(entry);
  if (!problems.empty()) throw std::invalid_argument(problems.front());
  if (entries_.count(entry.id)) throw std::invalid_argument("duplicate closed form " + entry.id);
  auto id = entry.id;
  entries_.emplace(std::move(id), std::move(entry));
}

const ClosedFormEntry* ClosedFormTable::find(const std::string& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Group: return "group";
    case SpaceKind::EqualRankQuotient: return "equal_rank";
    case SpaceKind::ClosedForm: return "closed_form";
    case SpaceKind::Imported: return "imported";
  }
  return "?";
}

std::optional<SpaceKind> space_kind_from_string(const std::string& s) {
  for (auto k : {SpaceKind::Group, SpaceKind::EqualRankQuotient, SpaceKind::ClosedForm,
                 SpaceKind::Imported})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

CompactSpaceDescriptor group_space(const ReductiveType& g) {
  CompactSpaceDescriptor d;
  d.label = g.label();
  d.kind = SpaceKind::Group;
  d.ambient = g;
  return d;
}

CompactSpaceDescriptor equal_rank_space(const ReductiveType& g, const ReductiveType& h) {
  CompactSpaceDescriptor d;
  d.label = g.label() + "/" + h.label();
  d.kind = SpaceKind::EqualRankQuotient;
  d.ambient = g;
  d.subgroup = h;
  return d;
}

IntPolynomial poincare_compact_group(const ReductiveType& g) {
  std::vector<int> gens;
  for (int d : g.invariant_degrees()) gens.push_back(2 * d - 1);
  return exterior_poincare(gens);
}

IntPolynomial poincare_equal_rank_quotient(const ReductiveType& g, const ReductiveType& h) {
  if (g.rank() != h.rank())
    throw std::invalid_argument("equal-rank quotient of " + g.label() + " by " + h.label() +
                                " with unequal ranks");
  IntPolynomial num = IntPolynomial::one();
  for (int d : g.invariant_degrees()) num *= IntPolynomial::one_minus_power(2 * d);
  IntPolynomial den = IntPolynomial::one();
  for (int e : h.invariant_degrees()) den *= IntPolynomial::one_minus_power(2 * e);
  try {
    return exact_divide(num, den);
  } catch (const NonDivisible&) {
    throw NonDivisible("inconsistent equal-rank pair " + g.label() + " / " + h.label());
  }
}

namespace {

const ClosedFormEntry& closed_form_or_throw(const CompactSpaceDescriptor& d,
                                            const ClosedFormTable& table) {
  const auto* entry = table.find(d.closed_form_id);
  if (!entry)
    throw Unresolvable(d.label + ": closed form '" + d.closed_form_id + "' not in table");
  return *entry;
}

} // namespace

IntPolynomial symmetric_space_poincare(const CompactSpaceDescriptor& d,
                                       const ClosedFormTable& table) {
  switch (d.kind) {
    case SpaceKind::Group:
      return poincare_compact_group(d.ambient);
    case SpaceKind::EqualRankQuotient:
      if (!d.subgroup || d.subgroup->rank() != d.ambient.rank())
        throw Unresolvable(d.label + ": not an equal-rank quotient");
      return poincare_equal_rank_quotient(d.ambient, *d.subgroup);
    case SpaceKind::ClosedForm:
      return closed_form_or_throw(d, table).poincare();
    case SpaceKind::Imported:
      break;
  }
  throw Unresolvable(d.label + ": Poincare polynomial not available (imported space)");
}

Integer euler_characteristic(const CompactSpaceDescriptor& d, const ClosedFormTable& table) {
  ReductiveType ambient = d.ambient;
  ReductiveType subgroup;
  switch (d.kind) {
    case SpaceKind::Group:
      break;
    case SpaceKind::ClosedForm: {
      const auto& entry = closed_form_or_throw(d, table);
      ambient = entry.ambient;
      subgroup = entry.subgroup;
      break;
    }
    case SpaceKind::EqualRankQuotient:
    case SpaceKind::Imported:
      if (!d.subgroup) throw Unresolvable(d.label + ": subgroup unknown");
      subgroup = *d.subgroup;
      break;
  }
  if (ambient.rank() > subgroup.rank()) return 0;
  if (ambient.rank() < subgroup.rank())
    throw std::invalid_argument(d.label + ": subgroup rank exceeds ambient rank");
  return ambient.weyl_order() / subgroup.weyl_order();
}

DegreeVanishing pontryagin_vanishes_by_degree(const CompactSpaceDescriptor& d, int i,
                                              const ClosedFormTable& table) {
  if (i <= 0) throw std::invalid_argument("Pontryagin index must be positive");
  const IntPolynomial p = symmetric_space_poincare(d, table);
  return p.coefficient(static_cast<std::size_t>(4 * i)) == 0 ? DegreeVanishing::Vanishes
                                                             : DegreeVanishing::UnknownByDegree;
}

} // namespace ckf
