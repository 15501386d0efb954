// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ckf/catalog.hpp"
#include "ckf/cohomology.hpp"
#include "ckf/obstructions.hpp"
#include "ckf/report.hpp"
#include "ckf/rootdata.hpp"
#include "support.hpp"

using namespace ckf;
using ckf::testing::shipped;

namespace {

constexpr int kIndex2[] = {2};

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::vector<int> generator_degrees(const char* type) {
  std::vector<int> gens;
  for (int d : ReductiveType::parse(type).invariant_degrees()) gens.push_back(2 * d - 1);
  return gens;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s;
}

std::multiset<int> bag(const std::vector<int>& xs) { return {xs.begin(), xs.end()}; }

bool has_evidence(const Verdict& v, const std::string& quantity, const std::string& value) {
  return std::any_of(v.evidence.begin(), v.evidence.end(), [&](const Evidence& e) {
    return e.quantity == quantity && e.value.find(value) != std::string::npos;
  });
}

void criterion1(Check& c) {
  const auto so8 = generator_degrees("D4");
  const auto e6 = generator_degrees("E6");
  c.expect(bag(so8) == bag({3, 7, 11, 7}), "so(8) generators");
  c.expect(bag(e6) == bag({3, 9, 11, 15, 17, 23}), "e6 generators");
  c.detail << "so(8): {" << join(so8) << "}, e6: {" << join(e6) << "}";
}

void criterion2(Check& c) {
  const auto d4 = poincare_compact_group(ReductiveType::parse("D4"));
  const auto e6 = poincare_compact_group(ReductiveType::parse("E6"));
  c.expect(d4.coefficient(16) == 0, "H^16(so(8)) = 0");
  c.expect(d4.coefficient(20) == 0, "H^20(so(8)) = 0");
  c.expect(e6.coefficient(62) == 0, "H^62(e6) = 0");
  c.detail << "D4 t^16: " << d4.coefficient(16) << ", t^20: " << d4.coefficient(20)
           << ", E6 t^62: " << e6.coefficient(62);
}

void criterion3(Check& c) {
  const Catalog& cat = shipped();
  const int a = codimension_n(cat, cat.pair("so(4,4)/su(1,2)"));
  const int e = codimension_n(cat, cat.pair("e6(-14)/f4(-20)"));
  const int b = codimension_n(cat, cat.pair("so(4,4)/g2(2)"));
  c.expect(a == 16, "n(so(4,4)/su(1,2)) = 16");
  c.expect(e == 62, "n(e6(-14)/f4(-20)) = 62");
  c.expect(b == 20, "n(so(4,4)/g2(2)) = 20");
  const auto report = classify(cat, FamilyFilter::ThreeSymmetric, kIndex2);
  const auto it = std::find_if(report.discrepancies.begin(), report.discrepancies.end(),
                               [](const Discrepancy& d) { return d.pair == "so(4,4)/g2(2)"; });
  const bool recorded = it != report.discrepancies.end() && it->computed == 20 &&
                        it->reported == 21 &&
                        it->note.find("dim H^20(g) = 0") != std::string::npos;
  c.expect(recorded, "discrepancy 20 vs 21 recorded with the degree-20 check");
  c.detail << "n = " << a << ", " << e << ", " << b;
  if (it != report.discrepancies.end())
    c.detail << "; discrepancy computed " << it->computed << " reported " << it->reported;
}

void criterion4(Check& c) {
  const Catalog& cat = shipped();
  const auto& p = cat.pair("e6(2)/sp(3,1)");
  const auto e6f4 = symmetric_space_poincare(*p.duals.gu_du, cat.closed_forms());
  const auto su6 = symmetric_space_poincare(*p.duals.k_kh, cat.closed_forms());
  const auto e6f4_ref = IntPolynomial::one_plus_power(9) * IntPolynomial::one_plus_power(17);
  const auto su6_ref = IntPolynomial::one_plus_power(5) * IntPolynomial::one_plus_power(9);
  c.expect(e6f4 == e6f4_ref && su6 == su6_ref, "closed forms match (1+t^9)(1+t^17), (1+t^5)(1+t^9)");
  c.expect(e6f4.coefficient(8) == 0 && su6.coefficient(8) == 0, "t^8 coefficients vanish");
  c.expect(pontryagin_vanishes_by_degree(*p.duals.gu_du, 2, cat.closed_forms()) ==
               DegreeVanishing::Vanishes,
           "E6/F4 vanishes by degree");
  c.expect(pontryagin_vanishes_by_degree(*p.duals.k_kh, 2, cat.closed_forms()) ==
               DegreeVanishing::Vanishes,
           "SU(6)/Sp(3) vanishes by degree");
  const Verdict v = pontryagin_obstruction(cat, p, 2);
  c.expect(v.status == Status::Obstructed && v.reason == Reason{ReasonKind::Pontryagin, 2},
           "Obstructed (Pontryagin(2))");
  c.expect(has_evidence(v, "p_2(E6/Sp(4))", "nonzero"), "imported p_2(E6/Sp(4)) != 0");
  c.detail << "E6/F4 t^8: " << e6f4.coefficient(8) << ", SU(6)/Sp(3) t^8: " << su6.coefficient(8)
           << ", verdict " << summary(v);
}

void criterion5(Check& c) {
  const Catalog& cat = shipped();
  const auto r = classify(cat, FamilyFilter::Symmetric, kIndex2);
  std::set<std::string> expected;
  std::set<std::string> families;
  for (const auto& p : cat.pairs())
    if (p.family == PairFamily::Symmetric && p.instance_of) {
      expected.insert(p.id);
      families.insert(p.instance_of->name);
    }
  const std::set<std::string> got(r.exceptions.begin(), r.exceptions.end());
  c.expect(got == expected, "exceptions = shipped classical instantiations");
  c.expect(families.size() == 3, "all three classical families instantiated");
  c.expect(!got.count("e6(2)/sp(3,1)") && !got.count("e6(-14)/f4(-20)"),
           "both exceptional pairs eliminated");
  c.detail << got.size() << " exceptions over " << families.size() << " families:";
  for (const auto& e : got) c.detail << ' ' << e;
}

void criterion6(Check& c) {
  const Catalog& cat = shipped();
  const auto r = classify(cat, FamilyFilter::ThreeSymmetric, kIndex2);
  c.expect(r.exceptions == std::vector<std::string>{"so(3,5)/g2(2)"}, "exceptions = {so(3,5)/g2(2)}");
  for (const char* id : {"so(4,4)/su(1,2)", "so(4,4)/g2(2)"}) {
    const Verdict v = amenable_verdict(cat, cat.pair(id));
    c.expect(v.status == Status::Obstructed && v.reason &&
                 v.reason->kind == ReasonKind::CohomologyDegree,
             std::string(id) + " eliminated by cohomology degree");
    c.detail << id << ": " << summary(v) << "; ";
  }
  c.detail << "exceptions:";
  for (const auto& e : r.exceptions) c.detail << ' ' << e;
}

void criterion7(Check& c) {
  const Catalog& cat = shipped();
  const Verdict v = rank_obstruction(cat, cat.pair("sp(4,r)/sp(2,c)"));
  c.expect(v.status == Status::Obstructed && v.reason == Reason{ReasonKind::EqualRank, 0},
           "Obstructed (EqualRank)");
  c.expect(has_evidence(v, "chi(G_u/H_u)", "384/64 = 6"), "chi = 384/64 = 6");
  const auto chi = euler_characteristic(
      equal_rank_space(ReductiveType::parse("C4"), ReductiveType::parse("C2+C2")), {});
  c.expect(chi == 6, "euler_characteristic = 6");
  c.detail << summary(v) << ", chi = " << chi;
}

void criterion8(Check& c) {
  int types = 0;
  const std::pair<char, std::pair<int, int>> ranges[] = {
      {'A', {1, 8}}, {'B', {2, 8}}, {'C', {2, 8}}, {'D', {3, 8}},
      {'E', {6, 8}}, {'F', {4, 4}}, {'G', {2, 2}}};
  for (auto [f, r] : ranges)
    for (int n = r.first; n <= r.second; ++n) {
      const CartanType t(static_cast<Family>(f), n);
      int sum = 0;
      Integer prod = 1;
      for (int d : invariant_degrees(t)) {
        sum += 2 * d - 1;
        prod *= d;
      }
      c.expect(sum == dimension(t) && prod == weyl_order(t), "degree identities " + t.label());
      const auto poly = poincare_compact_group(ReductiveType({t}));
      c.expect(is_palindromic(poly, static_cast<std::size_t>(dimension(t))) &&
                   poly.evaluate(1) == (Integer(1) << t.rank()),
               "palindromic, P(1) = 2^rank for " + t.label());
      ++types;
    }

  int quotients = 0;
  const std::pair<const char*, const char*> eq[] = {
      {"C4", "C2+C2"}, {"D4", "A1+A1+A1+A1"}, {"G2", "A1+A1"}, {"E6", "D5+T1"},
      {"E6", "A5+A1"}, {"F4", "B4"},          {"E7", "A7"},    {"E8", "D8"}};
  for (auto [g, h] : eq) {
    const auto G = ReductiveType::parse(g), H = ReductiveType::parse(h);
    const auto q = poincare_equal_rank_quotient(G, H);
    const bool nonneg = std::all_of(q.coeffs().begin(), q.coeffs().end(),
                                    [](const Integer& x) { return x >= 0; });
    c.expect(nonneg && q.evaluate(1) == G.weyl_order() / H.weyl_order(),
             std::string("equal-rank quotient ") + g + "/" + h);
    ++quotients;
  }

  int oracle = 0;
  const Catalog& cat = shipped();
  std::set<std::string> seen;
  for (const auto& rf : cat.real_forms()) {
    if (!seen.insert(rf.complexification.label()).second) continue;
    std::vector<int> gens;
    for (int d : rf.complexification.invariant_degrees()) gens.push_back(2 * d - 1);
    if (gens.size() > 20) continue;
    const auto poly = poincare_compact_group(rf.complexification);
    for (int k = 0; k <= rf.complexification.dimension(); ++k)
      if (poly.coefficient(static_cast<std::size_t>(k)) !=
          Integer(ckf::testing::subset_sum_count(gens, k))) {
        c.expect(false, "subset-sum oracle " + rf.complexification.label());
        break;
      }
    ++oracle;
  }

  c.expect(load_catalog(serialize_catalog(cat)) == cat, "catalog round trip");

  nlohmann::json doc = nlohmann::json::parse(serialize_catalog(cat));
  std::map<std::string, Verdict> baseline;
  for (const auto& p : cat.pairs()) baseline[p.id] = amenable_verdict(cat, p);
  std::mt19937 rng(42);
  bool stable = true;
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(doc["pairs"].begin(), doc["pairs"].end(), rng);
    std::shuffle(doc["real_forms"].begin(), doc["real_forms"].end(), rng);
    const Catalog shuffled = load_catalog(doc.dump());
    for (const auto& p : shuffled.pairs()) stable &= amenable_verdict(shuffled, p) == baseline[p.id];
  }
  c.expect(stable, "verdicts invariant under record permutation");

  c.detail << types << " Cartan types, " << quotients << " equal-rank quotients, " << oracle
           << " shipped generator multisets, round trip and permutation checks";
}

} // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"generator degrees", criterion1},      {"vanishing coefficients", criterion2},
      {"codimension values", criterion3},     {"exceptional symmetric pair e6(2)/sp(3,1)", criterion4},
      {"symmetric classification", criterion5}, {"3-symmetric classification", criterion6},
      {"equal-rank exemplar", criterion7},    {"property suites", criterion8}};
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << index++ << " (" << name
              << "): " << c.detail.str() << '\n';
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
