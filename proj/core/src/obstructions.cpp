#include "ckf/obstructions.hpp"

#include <algorithm>
#include <sstream>

#include "ckf/errors.hpp"

namespace ckf {

const char* to_string(Status s) {
  switch (s) {
    case Status::Obstructed: return "Obstructed";
    case Status::NotObstructed: return "NotObstructed";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(const Reason& r) {
  switch (r.kind) {
    case ReasonKind::EqualRank: return "EqualRank";
    case ReasonKind::CohomologyDegree: return "CohomologyDegree(" + std::to_string(r.index) + ")";
    case ReasonKind::Pontryagin: return "Pontryagin(" + std::to_string(r.index) + ")";
    case ReasonKind::ImportedExclusion: return "ImportedExclusion";
  }
  return "?";
}

std::string summary(const Verdict& v) {
  std::string s = to_string(v.status);
  if (v.reason) s += " (" + to_string(*v.reason) + ")";
  return s;
}

namespace {

std::string join(const std::vector<int>& xs, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? sep : "") << xs[k];
  return out.str();
}

std::string str(const Integer& x) { return x.str(); }

Verdict obstructed(Reason reason, std::vector<Evidence> evidence) {
  Verdict v;
  v.status = Status::Obstructed;
  v.reason = reason;
  v.evidence = std::move(evidence);
  return v;
}

Verdict not_obstructed(std::vector<Evidence> evidence) {
  Verdict v;
  v.status = Status::NotObstructed;
  v.evidence = std::move(evidence);
  return v;
}

Verdict unknown(std::vector<Evidence> evidence, std::vector<std::string> missing) {
  Verdict v;
  v.status = Status::Unknown;
  v.evidence = std::move(evidence);
  v.missing = std::move(missing);
  return v;
}

std::string poincare_source(const CompactSpaceDescriptor& d, const ClosedFormTable& table) {
  switch (d.kind) {
    case SpaceKind::Group:
      return "exterior algebra on generators of degree 2d_i - 1";
    case SpaceKind::EqualRankQuotient:
      return "equal-rank quotient prod(1 - t^(2d_i)) / prod(1 - t^(2e_j))";
    case SpaceKind::ClosedForm:
      if (const auto* e = table.find(d.closed_form_id)) return e->citation;
      break;
    case SpaceKind::Imported:
      break;
  }
  return d.citation;
}

} // namespace

Verdict rank_obstruction(const Catalog& c, const PairRecord& p) {
  const RealForm& g = c.g_of(p);
  const RealForm& h = c.h_of(p);
  const int rg = g.complexification.rank();
  const int rh = h.complexification.rank();
  std::vector<Evidence> ev{
      {"rank g", std::to_string(rg), "complexification " + g.complexification.label()},
      {"rank h", std::to_string(rh), "complexification " + h.complexification.label()}};
  if (rg != rh) return not_obstructed(std::move(ev));

  const auto space = equal_rank_space(g.complexification, h.complexification);
  const Integer wg = g.complexification.weyl_order();
  const Integer wh = h.complexification.weyl_order();
  const Integer chi = euler_characteristic(space, ClosedFormTable{});
  ev.push_back({"chi(G_u/H_u)", str(wg) + "/" + str(wh) + " = " + str(chi),
                "equal rank: chi(G_u/H_u) = |W_G|/|W_H| != 0 (Hopf-Samelson)"});
  ev.push_back({"chi(compact solvmanifold)", "0",
                "Euler characteristic of a compact solvmanifold vanishes"});
  return obstructed({ReasonKind::EqualRank, 0}, std::move(ev));
}

int codimension_n(const Catalog& c, const PairRecord& p) {
  const RealForm& g = c.g_of(p);
  const RealForm& h = c.h_of(p);
  const int via_noncompact = g.dim - (g.noncompact_dim - h.noncompact_dim);
  const int via_compact = g.compact_dim + p.dims.p_h;
  if (via_noncompact != via_compact)
    throw DimensionMismatch(p.id + ": dim g - (d(G) - d(H)) = " + std::to_string(via_noncompact) +
                            " but dim k + dim p_H = " + std::to_string(via_compact));
  return via_noncompact;
}

Verdict solvable_cohomology_obstruction(const Catalog& c, const PairRecord& p) {
  const RealForm& g = c.g_of(p);
  const RealForm& h = c.h_of(p);
  const int n = codimension_n(c, p);
  std::vector<int> gens;
  for (int d : g.complexification.invariant_degrees()) gens.push_back(2 * d - 1);
  const IntPolynomial poly = poincare_compact_group(g.complexification);
  const Integer coeff = poly.coefficient(static_cast<std::size_t>(n));

  std::vector<Evidence> ev{
      {"n", "dim g - (d(G) - d(H)) = " + std::to_string(g.dim) + " - (" +
                std::to_string(g.noncompact_dim) + " - " + std::to_string(h.noncompact_dim) +
                ") = " + std::to_string(n),
       "dimension of the compact manifold Gamma_H\\G/B for a syndetic hull B"},
      {"generator degrees of H*(g_u)", join(gens),
       "H*(g) = H*(g_u), exterior algebra on degrees 2d_i - 1 of " +
           g.complexification.label()},
      {"dim H^" + std::to_string(n) + "(g)", str(coeff), "coefficient of t^" +
           std::to_string(n) + " in the Poincare polynomial of g_u"}};
  if (coeff == 0) return obstructed({ReasonKind::CohomologyDegree, n}, std::move(ev));
  return not_obstructed(std::move(ev));
}

bool pontryagin_applicable(const PairRecord& p) {
  return p.family == PairFamily::Symmetric || p.associated_d.has_value();
}

namespace {

enum class Side { Vanishes, Nonzero, Open };

struct SideResult {
  Side side = Side::Open;
  std::optional<Evidence> evidence;
  std::string missing;
};

// p_i of one compact space: imported fact first, then the degree argument.
SideResult pontryagin_side(const Catalog& c, const std::optional<CompactSpaceDescriptor>& d,
                           const char* role, int i) {
  const std::string pi = "p_" + std::to_string(i);
  if (!d) return {Side::Open, std::nullopt, std::string("compact space ") + role + " not recorded"};
  if (const ImportedFact* fact = c.find_fact(d->label, i)) {
    const bool nonzero = fact->claim == PontryaginClaim::Nonzero;
    return {nonzero ? Side::Nonzero : Side::Vanishes,
            Evidence{pi + "(" + d->label + ")", nonzero ? "nonzero" : "0", fact->citation}, {}};
  }
  try {
    const IntPolynomial poly = symmetric_space_poincare(*d, c.closed_forms());
    const std::size_t deg = static_cast<std::size_t>(4 * i);
    Evidence ev{"dim H^" + std::to_string(deg) + "(" + d->label + ")",
                str(poly.coefficient(deg)) + " in P(t) = " + poly.to_string(),
                poincare_source(*d, c.closed_forms())};
    if (pontryagin_vanishes_by_degree(*d, i, c.closed_forms()) == DegreeVanishing::Vanishes)
      return {Side::Vanishes, ev, {}};
    return {Side::Open, ev,
            "imported fact on " + pi + "(" + d->label + ") (H^" + std::to_string(deg) + " != 0)"};
  } catch (const Unresolvable&) {
    return {Side::Open, std::nullopt,
            "Poincare polynomial or imported fact for " + pi + "(" + d->label + ")"};
  }
}

} // namespace

Verdict pontryagin_obstruction(const Catalog& c, const PairRecord& p, int i) {
  if (i <= 0) throw std::invalid_argument("Pontryagin index must be positive");
  std::vector<Evidence> ev;
  const RealForm* d = nullptr;
  try {
    d = &associated_pair(c, p);
  } catch (const MissingAssociated& e) {
    return unknown({}, {e.what()});
  }
  ev.push_back({"associated d", d->name,
                "d = k_H + p_H^perp, dim " + std::to_string(p.dims.k_h) + " + " +
                    std::to_string(p.dims.p_h_perp) + " = " + std::to_string(d->dim)});

  const SideResult target = pontryagin_side(c, p.duals.gu_hu, "G_u/H_u", i);
  const SideResult fiber = pontryagin_side(c, p.duals.k_kh, "K/K_H", i);
  const SideResult dual_d = pontryagin_side(c, p.duals.gu_du, "G_u/D_u", i);
  for (const auto* s : {&fiber, &dual_d, &target})
    if (s->evidence) ev.push_back(*s->evidence);

  // The corollary can no longer apply.
  if (target.side == Side::Vanishes || fiber.side == Side::Nonzero ||
      dual_d.side == Side::Nonzero)
    return not_obstructed(std::move(ev));

  if (target.side == Side::Nonzero && fiber.side == Side::Vanishes &&
      dual_d.side == Side::Vanishes)
    return obstructed({ReasonKind::Pontryagin, i}, std::move(ev));

  std::vector<std::string> missing;
  for (const auto* s : {&fiber, &dual_d, &target})
    if (s->side == Side::Open &&
        std::find(missing.begin(), missing.end(), s->missing) == missing.end())
      missing.push_back(s->missing);
  return unknown(std::move(ev), std::move(missing));
}

Verdict imported_exclusion(const PairRecord& p) {
  std::vector<Evidence> ev;
  auto describe = [](const CitedFlag& f) {
    return f.value ? (*f.value ? std::string("true") : std::string("false"))
                   : std::string("unrecorded");
  };
  ev.push_back({"excluded_by_morita", describe(p.excluded_by_morita), p.excluded_by_morita.citation});
  ev.push_back({"admits_proper_sl2", describe(p.admits_proper_sl2), p.admits_proper_sl2.citation});
  const bool morita = p.excluded_by_morita.value.value_or(false);
  const bool no_sl2 = !p.admits_proper_sl2.value.value_or(true);
  if (!morita && !no_sl2) return not_obstructed(std::move(ev));
  std::vector<Evidence> fired;
  if (morita) fired.push_back(ev[0]);
  if (no_sl2) fired.push_back(ev[1]);
  return obstructed({ReasonKind::ImportedExclusion, 0}, std::move(fired));
}

namespace {

Verdict combine_indices(const std::vector<Verdict>& per_index) {
  for (const auto& v : per_index)
    if (v.status == Status::Obstructed) return v;
  Verdict out;
  out.status = Status::NotObstructed;
  for (const auto& v : per_index) {
    out.evidence.insert(out.evidence.end(), v.evidence.begin(), v.evidence.end());
    if (v.status == Status::Unknown) {
      out.status = Status::Unknown;
      out.missing.insert(out.missing.end(), v.missing.begin(), v.missing.end());
    }
  }
  return out;
}

} // namespace

PairAssessment assess(const Catalog& c, const PairRecord& p,
                      std::span<const int> pontryagin_indices) {
  PairAssessment a;
  a.pair = p.id;
  a.family = p.family;
  a.rank = rank_obstruction(c, p);
  a.cohomology = solvable_cohomology_obstruction(c, p);
  if (pontryagin_applicable(p)) {
    std::vector<Verdict> per_index;
    for (int i : pontryagin_indices) per_index.push_back(pontryagin_obstruction(c, p, i));
    a.pontryagin = combine_indices(per_index);
  }
  a.imported = imported_exclusion(p);

  std::vector<const Verdict*> ordered{&a.rank, &a.cohomology};
  if (a.pontryagin) ordered.push_back(&*a.pontryagin);
  ordered.push_back(&a.imported);

  for (const Verdict* v : ordered) {
    if (v->status != Status::Obstructed) continue;
    a.aggregate = *v;
    if (v->reason->kind != ReasonKind::ImportedExclusion)
      a.aggregate.evidence.push_back(
          {"amenable forms", "none",
           "no solvable compact form; by the Tits alternative an amenable linear discrete "
           "group is virtually solvable"});
    return a;
  }

  a.aggregate.status = Status::NotObstructed;
  for (const Verdict* v : ordered) {
    if (v->status == Status::Unknown) {
      a.aggregate.status = Status::Unknown;
      for (const auto& m : v->missing)
        if (std::find(a.aggregate.missing.begin(), a.aggregate.missing.end(), m) ==
            a.aggregate.missing.end())
          a.aggregate.missing.push_back(m);
    }
  }
  return a;
}

Verdict amenable_verdict(const Catalog& c, const PairRecord& p,
                         std::span<const int> pontryagin_indices) {
  return assess(c, p, pontryagin_indices).aggregate;
}

Verdict amenable_verdict(const Catalog& c, const PairRecord& p) {
  static constexpr int kDefault[] = {2};
  return amenable_verdict(c, p, kDefault);
}

} // namespace ckf
