// ckf: inspect invariants, check single pairs, and replay the classification
// over a catalog.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ckf/catalog.hpp"
#include "ckf/cohomology.hpp"
#include "ckf/errors.hpp"
#include "ckf/obstructions.hpp"
#include "ckf/report.hpp"
#include "ckf/rootdata.hpp"

#ifndef CKF_DEFAULT_DATA_DIR
#define CKF_DEFAULT_DATA_DIR "data"
#endif

namespace {

using nlohmann::json;

constexpr std::size_t kPolyTerms = 12;

struct Options {
  std::string catalog;
  std::string format = "md";
  std::string family = "all";
  std::vector<int> indices{2};
  bool full_poly = false;
  std::string label;
};

std::string default_catalog() {
  if (const char* env = std::getenv("CKF_DATA_DIR"); env && *env) return env;
  return CKF_DEFAULT_DATA_DIR;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + std::to_string(xs[k]);
  return out;
}

std::string poly_text(const ckf::IntPolynomial& p, bool full) {
  return p.to_string(full ? 0 : kPolyTerms);
}

json type_json(const ckf::ReductiveType& t, bool full) {
  std::vector<int> gens;
  for (int d : t.invariant_degrees()) gens.push_back(2 * d - 1);
  const auto poly = ckf::poincare_compact_group(t);
  return {{"type", t.label()},
          {"rank", t.rank()},
          {"dim", t.dimension()},
          {"degrees", t.invariant_degrees()},
          {"generator_degrees", gens},
          {"weyl_order", t.weyl_order().str()},
          {"poincare", poly_text(poly, full)}};
}

void print_type_md(std::ostream& out, const ckf::ReductiveType& t, bool full) {
  std::vector<int> gens;
  for (int d : t.invariant_degrees()) gens.push_back(2 * d - 1);
  out << "- rank: " << t.rank() << '\n'
      << "- dim: " << t.dimension() << '\n'
      << "- degrees: " << join(t.invariant_degrees()) << '\n'
      << "- generator degrees of H*: " << join(gens) << '\n'
      << "- |W|: " << t.weyl_order() << '\n'
      << "- P(t): " << poly_text(ckf::poincare_compact_group(t), full) << '\n';
}

int cmd_info(const Options& o) {
  std::optional<ckf::Catalog> catalog;
  std::vector<std::string> near;
  try {
    catalog = ckf::load_catalog_path(o.catalog);
  } catch (const ckf::Error&) {
    catalog.reset(); // type labels resolve without a catalog
  }
  if (catalog) {
    if (const auto* rf = catalog->find_real_form(o.label)) {
      if (o.format == "json") {
        std::cout << json{{"name", rf->name},
                          {"dim", rf->dim},
                          {"maximal_compact", rf->maximal_compact.label()},
                          {"compact_dim", rf->compact_dim},
                          {"noncompact_dim", rf->noncompact_dim},
                          {"complexification", type_json(rf->complexification, o.full_poly)}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "# " << rf->name << "\n\n"
                  << "- dim: " << rf->dim << '\n'
                  << "- maximal compact K: " << rf->maximal_compact.label() << " (dim "
                  << rf->compact_dim << ")\n"
                  << "- noncompact dim d = dim p: " << rf->noncompact_dim << "\n\n"
                  << "## complexification " << rf->complexification.label() << "\n\n";
        print_type_md(std::cout, rf->complexification, o.full_poly);
      }
      return 0;
    }
    if (const auto* p = catalog->find_pair(o.label)) {
      const int n = ckf::codimension_n(*catalog, *p);
      if (o.format == "json") {
        std::cout << json{{"pair", p->id},
                          {"g", p->g},
                          {"h", p->h},
                          {"family", ckf::to_string(p->family)},
                          {"associated_d", p->associated_d ? json(*p->associated_d) : json()},
                          {"dims",
                           {{"k_h", p->dims.k_h},
                            {"p_h", p->dims.p_h},
                            {"k_h_perp", p->dims.k_h_perp},
                            {"p_h_perp", p->dims.p_h_perp}}},
                          {"codimension_n", n}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "# " << p->id << "\n\n"
                  << "- family: " << ckf::to_string(p->family) << '\n'
                  << "- associated d: " << p->associated_d.value_or("unrecorded") << '\n'
                  << "- dim k_H, p_H, k_H^perp, p_H^perp: " << p->dims.k_h << ", "
                  << p->dims.p_h << ", " << p->dims.k_h_perp << ", " << p->dims.p_h_perp << '\n'
                  << "- codimension n: " << n << '\n';
      }
      return 0;
    }
    near = catalog->suggestions(o.label);
  }
  try {
    const auto t = ckf::ReductiveType::parse(o.label);
    if (o.format == "json") {
      std::cout << type_json(t, o.full_poly).dump(2) << '\n';
    } else {
      std::cout << "# " << t.label() << "\n\n";
      print_type_md(std::cout, t, o.full_poly);
    }
    return 0;
  } catch (const std::invalid_argument&) {
  }
  if (!catalog) catalog = ckf::load_catalog_path(o.catalog); // rethrows the load error
  throw ckf::NotFound("no real form, pair or Cartan type named '" + o.label + "'", near);
}

json verdict_json(const ckf::Verdict& v) {
  json ev = json::array();
  for (const auto& e : v.evidence)
    ev.push_back({{"quantity", e.quantity}, {"value", e.value}, {"citation", e.citation}});
  return {{"status", ckf::to_string(v.status)},
          {"reason", v.reason ? json(ckf::to_string(*v.reason)) : json()},
          {"evidence", ev},
          {"missing", v.missing}};
}

void print_verdict_md(std::ostream& out, const char* name, const ckf::Verdict& v) {
  out << "## " << name << ": " << ckf::summary(v) << "\n\n";
  for (const auto& e : v.evidence) {
    out << "- " << e.quantity << " = " << e.value;
    if (!e.citation.empty()) out << "  (" << e.citation << ")";
    out << '\n';
  }
  for (const auto& m : v.missing) out << "- missing: " << m << '\n';
  out << '\n';
}

int cmd_check(const Options& o) {
  const ckf::Catalog catalog = ckf::load_catalog_path(o.catalog);
  const ckf::PairRecord& p = catalog.pair(o.label);
  const ckf::PairAssessment a = ckf::assess(catalog, p, o.indices);
  if (o.format == "json") {
    json doc{{"pair", a.pair},
             {"family", ckf::to_string(a.family)},
             {"codimension_n", ckf::codimension_n(catalog, p)},
             {"rank", verdict_json(a.rank)},
             {"cohomology", verdict_json(a.cohomology)},
             {"pontryagin", a.pontryagin ? verdict_json(*a.pontryagin) : json()},
             {"imported", verdict_json(a.imported)},
             {"aggregate", verdict_json(a.aggregate)}};
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  std::cout << "# " << a.pair << " (" << ckf::to_string(a.family) << ")\n\n";
  print_verdict_md(std::cout, "rank", a.rank);
  print_verdict_md(std::cout, "cohomology", a.cohomology);
  if (a.pontryagin)
    print_verdict_md(std::cout, "pontryagin", *a.pontryagin);
  else
    std::cout << "## pontryagin: n/a\n\n";
  print_verdict_md(std::cout, "imported", a.imported);
  print_verdict_md(std::cout, "aggregate", a.aggregate);
  return 0;
}

int cmd_classify(const Options& o) {
  const ckf::Catalog catalog = ckf::load_catalog_path(o.catalog);
  const auto family = ckf::family_filter_from_string(o.family);
  const auto report = ckf::classify(catalog, *family, o.indices);
  if (o.format == "json") std::cout << ckf::to_json(report);
  else if (o.format == "csv") std::cout << ckf::to_csv(report);
  else std::cout << ckf::to_markdown(report);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact obstruction engine for compact Clifford-Klein forms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.catalog = default_catalog();
  app.add_option("--catalog", o.catalog, "Catalog file or directory (default: shipped data)");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"md", "json", "csv"}));
  app.add_option("--pontryagin-index", o.indices, "Pontryagin index i (repeatable)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--full-poly", o.full_poly, "Print untruncated polynomials");

  auto* info = app.add_subcommand("info", "Invariants of a Cartan type, real form or pair");
  info->add_option("label", o.label, "Label such as e6, so(4,4) or so(4,4)/su(1,2)")->required();
  auto* check = app.add_subcommand("check", "Run every obstruction test on one pair");
  check->add_option("pair", o.label, "Pair label g/h")->required();
  auto* classify = app.add_subcommand("classify", "Classify all catalog pairs of a family");
  classify->add_option("--family", o.family, "Family filter")
      ->check(CLI::IsMember({"symmetric", "3-symmetric", "all"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (o.format == "csv" && !classify->parsed())
      throw CLI::ValidationError("--format csv applies to classify only");
    if (info->parsed()) return cmd_info(o);
    if (check->parsed()) return cmd_check(o);
    return cmd_classify(o);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const ckf::NotFound& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (!e.suggestions.empty()) {
      std::cerr << "did you mean:";
      for (const auto& s : e.suggestions) std::cerr << ' ' << s;
      std::cerr << '\n';
    }
    return 3;
  } catch (const ckf::ValidationError& e) {
    std::cerr << "error: catalog validation failed\n";
    for (const auto& f : e.failures) std::cerr << "  " << f << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
