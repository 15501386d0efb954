#ifndef CKF_CATALOG_HPP_
#define CKF_CATALOG_HPP_

// Structured data about real forms and reductive pairs: Cartan decomposition
// dimensions, associated symmetric pairs, compact duals, imported flags and
// imported facts about Pontryagin classes.
//
// Catalog documents are JSON (see docs/schema.md). A catalog may be assembled
// from several documents; each may carry any of the sections real_forms,
// pairs, aliases, closed_forms and facts. schema_version is mandatory.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ckf/cohomology.hpp"
#include "ckf/rootdata.hpp"

namespace ckf {

inline constexpr int kCatalogSchemaVersion = 1;

struct RealForm {
  std::string name;              // canonical label, e.g. "e6(-14)"
  ReductiveType complexification;
  int dim = 0;
  ReductiveType maximal_compact; // complexified k
  int compact_dim = 0;           // dim k
  int noncompact_dim = 0;        // dim p

  bool operator==(const RealForm&) const = default;
};

enum class PairFamily { Symmetric, ThreeSymmetric, OtherReductive };

const char* to_string(PairFamily f);
std::optional<PairFamily> pair_family_from_string(const std::string& s);

// An imported boolean; value is empty when the source tables say nothing.
struct CitedFlag {
  std::optional<bool> value;
  std::string citation;
  bool operator==(const CitedFlag&) const = default;
};

// h = k_H + p_H, k = k_H + k_H^perp, p = p_H + p_H^perp.
struct DecompositionDims {
  int k_h = 0;
  int p_h = 0;
  int k_h_perp = 0;
  int p_h_perp = 0;
  bool operator==(const DecompositionDims&) const = default;
};

struct CompactDuals {
  std::optional<CompactSpaceDescriptor> gu_hu; // G_u/H_u
  std::optional<CompactSpaceDescriptor> gu_du; // G_u/D_u
  std::optional<CompactSpaceDescriptor> k_kh;  // K/K_H
  bool operator==(const CompactDuals&) const = default;
};

// Concrete member of a parameterized family, e.g. SU(2p,2q)/Sp(p,q) at p=1, q=2.
struct TemplateInstance {
  std::string name;
  std::map<std::string, int> params;
  bool operator==(const TemplateInstance&) const = default;
};

struct PairRecord {
  std::string id; // "<g>/<h>"
  std::string g;
  std::string h;
  PairFamily family = PairFamily::Symmetric;
  std::optional<std::string> associated_d;
  DecompositionDims dims;
  CompactDuals duals;
  CitedFlag admits_proper_sl2;
  CitedFlag excluded_by_morita;
  std::vector<std::string> citations;
  // Codimension as stated in the literature, compared against the computed one.
  std::optional<int> reported_codimension;
  std::string reported_codimension_note;
  std::optional<TemplateInstance> instance_of;

  bool operator==(const PairRecord&) const = default;
};

enum class PontryaginClaim { Zero, Nonzero };

struct ImportedFact {
  std::string space; // matches CompactSpaceDescriptor::label
  PontryaginClaim claim = PontryaginClaim::Nonzero;
  int index = 0;     // i in p_i
  std::string citation;
  bool operator==(const ImportedFact&) const = default;
};

// Lowercases, strips blanks, maps R/C blackboard letters to r/c.
std::string normalize_label(std::string_view label);

class Catalog {
public:
  Catalog() = default;

  const std::vector<RealForm>& real_forms() const { return real_forms_; }
  const std::vector<PairRecord>& pairs() const { return pairs_; }
  const std::vector<ImportedFact>& facts() const { return facts_; }
  const std::map<std::string, std::string>& aliases() const { return aliases_; }
  const ClosedFormTable& closed_forms() const { return closed_forms_; }

  // Lookups accept aliases and any spelling normalize_label() maps to the
  // canonical name. Throw NotFound carrying near-miss suggestions.
  const RealForm& real_form(std::string_view name) const;
  const PairRecord& pair(std::string_view id) const;
  const RealForm* find_real_form(std::string_view name) const;
  const PairRecord* find_pair(std::string_view id) const;

  const RealForm& g_of(const PairRecord& p) const { return real_form(p.g); }
  const RealForm& h_of(const PairRecord& p) const { return real_form(p.h); }

  std::optional<PontryaginClaim> fact_for(const std::string& space, int index) const;
  const ImportedFact* find_fact(const std::string& space, int index) const;

  // Labels closest to `label` by edit distance, best first.
  std::vector<std::string> suggestions(std::string_view label, std::size_t limit = 3) const;

  bool operator==(const Catalog&) const = default;

private:
  friend Catalog load_catalog(const std::vector<std::string>& documents);
  std::string resolve(std::string_view label) const;

  std::vector<RealForm> real_forms_;
  std::vector<PairRecord> pairs_;
  std::vector<ImportedFact> facts_;
  std::map<std::string, std::string> aliases_;
  ClosedFormTable closed_forms_;
};

// Parses and validates. Throws ParseError for malformed documents and
// ValidationError listing every failed identity with its record id.
Catalog load_catalog(const std::vector<std::string>& documents);
Catalog load_catalog(std::string_view document);

// A file, or a directory whose *.json files are loaded in name order.
Catalog load_catalog_path(const std::filesystem::path& path);

// Single JSON document; load_catalog(serialize_catalog(c)) == c.
std::string serialize_catalog(const Catalog& c);

// Validation without throwing; empty when the catalog is consistent.
std::vector<std::string> validate_catalog(const Catalog& c);

// The algebra d = k_H + p_H^perp of the associated symmetric pair.
// Throws MissingAssociated when the record has none.
const RealForm& associated_pair(const Catalog& c, const PairRecord& p);

// Rebuilds real forms and the pair record of a shipped parameterized family:
//   "SO(n,m)/SO(n-k,m)xSO(k)"  params n, m, k
//   "SU(2p,2q)/Sp(p,q)"        params p, q
//   "SU(2m-1,2m-1)/SO*(4m-2)"  params m
// Used as an independent check of hand-entered catalog dimensions.
struct GeneratedInstance {
  RealForm g;
  RealForm h;
  RealForm d;
  DecompositionDims dims;
};
GeneratedInstance instantiate_template(const TemplateInstance& instance);
std::vector<std::string> pair_templates();

// Builders for the classical real forms, shared with instantiate_template.
RealForm real_form_so(int p, int q);      // so(p,q)
RealForm real_form_su(int p, int q);      // su(p,q)
RealForm real_form_sp(int p, int q);      // sp(p,q)
RealForm real_form_so_star(int n);        // so*(2n)
RealForm real_form_sp_real(int n);        // sp(n,R)

} // namespace ckf

#endif
