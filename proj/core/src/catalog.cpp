#include "ckf/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ckf/errors.hpp"

namespace ckf {

using nlohmann::json;

ValidationError::ValidationError(std::vector<std::string> failures_)
    : Error([&] {
        std::string msg = "catalog validation failed (" + std::to_string(failures_.size()) +
                          " problem" + (failures_.size() == 1 ? "" : "s") + ")";
        for (const auto& f : failures_) msg += "\n  " + f;
        return msg;
      }()),
      failures(std::move(failures_)) {}

const char* to_string(PairFamily f) {
  switch (f) {
    case PairFamily::Symmetric: return "symmetric";
    case PairFamily::ThreeSymmetric: return "3-symmetric";
    case PairFamily::OtherReductive: return "other-reductive";
  }
  return "?";
}

std::optional<PairFamily> pair_family_from_string(const std::string& s) {
  for (auto f : {PairFamily::Symmetric, PairFamily::ThreeSymmetric, PairFamily::OtherReductive})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

std::string normalize_label(std::string_view label) {
  static const std::pair<std::string_view, std::string_view> kReplace[] = {
      {"\xE2\x84\x9D", "r"}, // U+211D double-struck R
      {"\xE2\x84\x82", "c"}, // U+2102 double-struck C
      {"\xC3\x97", "+"},     // U+00D7 multiplication sign
  };
  std::string out;
  out.reserve(label.size());
  for (std::size_t i = 0; i < label.size();) {
    bool replaced = false;
    for (const auto& [from, to] : kReplace) {
      if (label.substr(i, from.size()) == from) {
        out += to;
        i += from.size();
        replaced = true;
        break;
      }
    }
    if (replaced) continue;
    unsigned char ch = static_cast<unsigned char>(label[i++]);
    if (std::isspace(ch)) continue;
    out += static_cast<char>(std::tolower(ch));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lookups

std::string Catalog::resolve(std::string_view label) const {
  std::string n = normalize_label(label);
  auto it = aliases_.find(n);
  return it == aliases_.end() ? n : it->second;
}

const RealForm* Catalog::find_real_form(std::string_view name) const {
  const std::string key = resolve(name);
  for (const auto& rf : real_forms_)
    if (rf.name == key) return &rf;
  return nullptr;
}

const PairRecord* Catalog::find_pair(std::string_view id) const {
  std::string key = resolve(id);
  auto lookup = [&](const std::string& k) -> const PairRecord* {
    for (const auto& p : pairs_)
      if (p.id == k) return &p;
    return nullptr;
  };
  if (const auto* p = lookup(key)) return p;
  // Resolve aliases on either side of "g/h".
  auto slash = key.find('/');
  if (slash == std::string::npos) return nullptr;
  return lookup(resolve(key.substr(0, slash)) + "/" + resolve(key.substr(slash + 1)));
}

const RealForm& Catalog::real_form(std::string_view name) const {
  if (const auto* rf = find_real_form(name)) return *rf;
  throw NotFound("real form '" + std::string(name) + "' not in catalog", suggestions(name));
}

const PairRecord& Catalog::pair(std::string_view id) const {
  if (const auto* p = find_pair(id)) return *p;
  throw NotFound("pair '" + std::string(id) + "' not in catalog", suggestions(id));
}

const ImportedFact* Catalog::find_fact(const std::string& space, int index) const {
  for (const auto& f : facts_)
    if (f.space == space && f.index == index) return &f;
  return nullptr;
}

std::optional<PontryaginClaim> Catalog::fact_for(const std::string& space, int index) const {
  if (const auto* f = find_fact(space, index)) return f->claim;
  return std::nullopt;
}

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

} // namespace

std::vector<std::string> Catalog::suggestions(std::string_view label, std::size_t limit) const {
  const std::string key = normalize_label(label);
  std::vector<std::pair<std::size_t, std::string>> scored;
  auto consider = [&](const std::string& candidate) {
    scored.emplace_back(edit_distance(key, candidate), candidate);
  };
  for (const auto& rf : real_forms_) consider(rf.name);
  for (const auto& p : pairs_) consider(p.id);
  for (const auto& [id, entry] : closed_forms_.entries()) consider(id);
  std::sort(scored.begin(), scored.end());
  scored.erase(std::unique(scored.begin(), scored.end()), scored.end());
  std::vector<std::string> out;
  const std::size_t cutoff = std::max<std::size_t>(3, key.size() / 2);
  for (const auto& [dist, name] : scored) {
    if (out.size() == limit || dist > cutoff) break;
    out.push_back(name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) parse_fail(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string get_string_or(const json& obj, const char* key, const std::string& where,
                          std::string fallback) {
  if (!obj.contains(key)) return fallback;
  return get_string(obj, key, where);
}

int get_int(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) parse_fail(where, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

ReductiveType get_type(const json& obj, const char* key, const std::string& where) {
  const std::string text = get_string(obj, key, where);
  try {
    return ReductiveType::parse(text);
  } catch (const std::invalid_argument& e) {
    parse_fail(where, std::string("field '") + key + "': " + e.what());
  }
}

std::vector<std::string> get_string_list(const json& obj, const char* key,
                                         const std::string& where) {
  std::vector<std::string> out;
  if (!obj.contains(key)) return out;
  const json& arr = obj.at(key);
  if (!arr.is_array()) parse_fail(where, std::string("field '") + key + "' must be an array");
  for (const auto& v : arr) {
    if (!v.is_string()) parse_fail(where, std::string("'") + key + "' entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

RealForm parse_real_form(const json& j, std::size_t index) {
  std::string where = "real_forms[" + std::to_string(index) + "]";
  RealForm rf;
  rf.name = normalize_label(get_string(j, "name", where));
  where += " (" + rf.name + ")";
  rf.complexification = get_type(j, "complexification", where);
  rf.dim = get_int(j, "dim", where);
  rf.maximal_compact = get_type(j, "maximal_compact", where);
  rf.compact_dim = get_int(j, "compact_dim", where);
  rf.noncompact_dim = get_int(j, "noncompact_dim", where);
  return rf;
}

CompactSpaceDescriptor parse_descriptor(const json& j, const std::string& where) {
  CompactSpaceDescriptor d;
  d.label = get_string(j, "label", where);
  const std::string kind = get_string(j, "kind", where);
  auto k = space_kind_from_string(kind);
  if (!k) parse_fail(where, "unknown space kind '" + kind + "'");
  d.kind = *k;
  switch (d.kind) {
    case SpaceKind::Group:
      d.ambient = get_type(j, "ambient", where);
      break;
    case SpaceKind::EqualRankQuotient:
      d.ambient = get_type(j, "ambient", where);
      d.subgroup = get_type(j, "subgroup", where);
      break;
    case SpaceKind::ClosedForm:
      d.closed_form_id = get_string_or(j, "closed_form_id", where, d.label);
      break;
    case SpaceKind::Imported:
      d.ambient = get_type(j, "ambient", where);
      if (j.contains("subgroup")) d.subgroup = get_type(j, "subgroup", where);
      d.citation = get_string(j, "citation", where);
      break;
  }
  return d;
}

CitedFlag parse_flag(const json& flags, const char* key, const std::string& where) {
  CitedFlag f;
  if (!flags.contains(key)) return f;
  const json& j = flags.at(key);
  const std::string sub = where + "." + key;
  const json& v = field(j, "value", sub);
  if (v.is_boolean()) f.value = v.get<bool>();
  else if (!v.is_null()) parse_fail(sub, "'value' must be true, false or null");
  f.citation = get_string_or(j, "citation", sub, "");
  return f;
}

PairRecord parse_pair(const json& j, std::size_t index) {
  std::string where = "pairs[" + std::to_string(index) + "]";
  PairRecord p;
  p.g = normalize_label(get_string(j, "g", where));
  p.h = normalize_label(get_string(j, "h", where));
  p.id = normalize_label(get_string_or(j, "id", where, p.g + "/" + p.h));
  where += " (" + p.id + ")";

  const std::string fam = get_string(j, "family", where);
  auto f = pair_family_from_string(fam);
  if (!f) parse_fail(where, "unknown family '" + fam + "'");
  p.family = *f;

  if (j.contains("associated_d") && !j.at("associated_d").is_null())
    p.associated_d = normalize_label(get_string(j, "associated_d", where));

  const json& dims = field(j, "dims", where);
  p.dims.k_h = get_int(dims, "k_h", where + ".dims");
  p.dims.p_h = get_int(dims, "p_h", where + ".dims");
  p.dims.k_h_perp = get_int(dims, "k_h_perp", where + ".dims");
  p.dims.p_h_perp = get_int(dims, "p_h_perp", where + ".dims");

  if (j.contains("compact_duals")) {
    const json& cd = j.at("compact_duals");
    auto opt = [&](const char* key) -> std::optional<CompactSpaceDescriptor> {
      if (!cd.contains(key) || cd.at(key).is_null()) return std::nullopt;
      return parse_descriptor(cd.at(key), where + ".compact_duals." + key);
    };
    p.duals.gu_hu = opt("gu_hu");
    p.duals.gu_du = opt("gu_du");
    p.duals.k_kh = opt("k_kh");
  }

  if (j.contains("flags")) {
    const json& flags = j.at("flags");
    p.admits_proper_sl2 = parse_flag(flags, "admits_proper_sl2", where + ".flags");
    p.excluded_by_morita = parse_flag(flags, "excluded_by_morita", where + ".flags");
  }

  if (j.contains("reported_codimension")) {
    const json& rc = j.at("reported_codimension");
    p.reported_codimension = get_int(rc, "value", where + ".reported_codimension");
    p.reported_codimension_note = get_string_or(rc, "note", where, "");
  }

  if (j.contains("template")) {
    const json& t = j.at("template");
    TemplateInstance inst;
    inst.name = get_string(t, "name", where + ".template");
    const json& params = field(t, "params", where + ".template");
    if (!params.is_object()) parse_fail(where, "template params must be an object");
    for (const auto& [k, v] : params.items()) {
      if (!v.is_number_integer()) parse_fail(where, "template param '" + k + "' must be an integer");
      inst.params[k] = v.get<int>();
    }
    p.instance_of = std::move(inst);
  }

  p.citations = get_string_list(j, "citations", where);
  return p;
}

ClosedFormEntry parse_closed_form(const json& j, std::size_t index) {
  std::string where = "closed_forms[" + std::to_string(index) + "]";
  ClosedFormEntry e;
  e.id = get_string(j, "id", where);
  where += " (" + e.id + ")";
  e.ambient = get_type(j, "ambient", where);
  e.subgroup = get_type(j, "subgroup", where);
  e.citation = get_string_or(j, "citation", where, "");
  const json& terms = field(j, "terms", where);
  if (!terms.is_array()) parse_fail(where, "'terms' must be an array");
  for (const auto& t : terms) {
    if (t.contains("factors")) {
      FactorTerm f;
      const json& arr = t.at("factors");
      if (!arr.is_array()) parse_fail(where, "'factors' must be an array");
      for (const auto& d : arr) {
        if (!d.is_number_integer()) parse_fail(where, "factor degrees must be integers");
        f.degrees.push_back(d.get<int>());
      }
      e.terms.emplace_back(std::move(f));
    } else {
      TemplateTerm tt;
      tt.name = get_string(t, "template", where);
      tt.n = get_int(t, "n", where);
      e.terms.emplace_back(std::move(tt));
    }
  }
  return e;
}

ImportedFact parse_fact(const json& j, std::size_t index) {
  const std::string where = "facts[" + std::to_string(index) + "]";
  ImportedFact f;
  f.space = get_string(j, "space", where);
  const std::string claim = get_string(j, "claim", where);
  if (claim == "pontryagin_nonzero") f.claim = PontryaginClaim::Nonzero;
  else if (claim == "pontryagin_zero") f.claim = PontryaginClaim::Zero;
  else parse_fail(where, "unknown claim '" + claim + "'");
  f.index = get_int(j, "index", where);
  f.citation = get_string_or(j, "citation", where, "");
  return f;
}

const json* section(const json& doc, const char* key, const std::string& where) {
  if (!doc.contains(key)) return nullptr;
  const json& s = doc.at(key);
  if (!s.is_array() && !(std::string(key) == "aliases" && s.is_object()))
    parse_fail(where, std::string("section '") + key + "' has the wrong shape");
  return &s;
}

} // namespace

// ---------------------------------------------------------------------------
// Validation

namespace {

void check_descriptor(const Catalog& c, const PairRecord& p, const char* slot,
                      const std::optional<CompactSpaceDescriptor>& d,
                      std::vector<std::string>& out) {
  if (!d) return;
  const std::string where = p.id + " " + slot + " (" + d->label + ")";
  if (d->label.empty()) out.push_back(p.id + " " + slot + ": empty label");
  switch (d->kind) {
    case SpaceKind::EqualRankQuotient:
      if (!d->subgroup || d->subgroup->rank() != d->ambient.rank())
        out.push_back(where + ": equal_rank requires rank(ambient) = rank(subgroup)");
      break;
    case SpaceKind::ClosedForm:
      if (!c.closed_forms().find(d->closed_form_id))
        out.push_back(where + ": closed form '" + d->closed_form_id + "' not in table");
      break;
    case SpaceKind::Imported:
      if (d->citation.empty()) out.push_back(where + ": imported space without citation");
      break;
    case SpaceKind::Group:
      break;
  }
}

} // namespace

std::vector<std::string> validate_catalog(const Catalog& c) {
  std::vector<std::string> out;
  auto eq = [&](const std::string& where, const std::string& lhs_text, long lhs,
                const std::string& rhs_text, long rhs) {
    if (lhs != rhs)
      out.push_back(where + ": " + lhs_text + " = " + std::to_string(lhs) + " != " + rhs_text +
                    " = " + std::to_string(rhs));
  };

  std::set<std::string> names;
  for (const auto& rf : c.real_forms()) {
    if (!names.insert(rf.name).second) out.push_back(rf.name + ": duplicate real form");
    eq(rf.name, "dim", rf.dim, "dim(complexification " + rf.complexification.label() + ")",
       rf.complexification.dimension());
    eq(rf.name, "compact_dim", rf.compact_dim,
       "dim(maximal_compact " + rf.maximal_compact.label() + ")", rf.maximal_compact.dimension());
    eq(rf.name, "dim", rf.dim, "compact_dim + noncompact_dim", rf.compact_dim + rf.noncompact_dim);
    if (rf.maximal_compact.rank() > rf.complexification.rank())
      out.push_back(rf.name + ": rank(maximal_compact) > rank(complexification)");
  }

  for (const auto& [alias, target] : c.aliases())
    if (!c.find_real_form(target) && !c.find_pair(target))
      out.push_back("alias '" + alias + "' -> '" + target + "': target not in catalog");

  std::set<std::string> ids;
  for (const auto& p : c.pairs()) {
    if (!ids.insert(p.id).second) out.push_back(p.id + ": duplicate pair id");
    const RealForm* g = c.find_real_form(p.g);
    const RealForm* h = c.find_real_form(p.h);
    if (!g) out.push_back(p.id + ": g '" + p.g + "' not in catalog");
    if (!h) out.push_back(p.id + ": h '" + p.h + "' not in catalog");
    const auto& d = p.dims;
    if (h) {
      eq(p.id, "dim k_H", d.k_h, "compact_dim(h)", h->compact_dim);
      eq(p.id, "dim p_H", d.p_h, "noncompact_dim(h)", h->noncompact_dim);
      eq(p.id, "dim k_H + dim p_H", d.k_h + d.p_h, "dim h", h->dim);
    }
    if (g) {
      eq(p.id, "dim k_H + dim k_H^perp", d.k_h + d.k_h_perp, "dim k", g->compact_dim);
      eq(p.id, "dim p_H + dim p_H^perp", d.p_h + d.p_h_perp, "dim p", g->noncompact_dim);
    }
    if (g && h && h->complexification.rank() > g->complexification.rank())
      out.push_back(p.id + ": rank(h) = " + std::to_string(h->complexification.rank()) +
                    " exceeds rank(g) = " + std::to_string(g->complexification.rank()));
    for (int v : {d.k_h, d.p_h, d.k_h_perp, d.p_h_perp})
      if (v < 0) {
        out.push_back(p.id + ": negative decomposition dimension");
        break;
      }
    if (p.associated_d) {
      const RealForm* dd = c.find_real_form(*p.associated_d);
      if (!dd) {
        out.push_back(p.id + ": associated_d '" + *p.associated_d + "' not in catalog");
      } else {
        eq(p.id, "dim d", dd->dim, "dim k_H + dim p_H^perp", d.k_h + d.p_h_perp);
        eq(p.id, "compact_dim(d)", dd->compact_dim, "dim k_H", d.k_h);
        eq(p.id, "noncompact_dim(d)", dd->noncompact_dim, "dim p_H^perp", d.p_h_perp);
      }
    }
    check_descriptor(c, p, "gu_hu", p.duals.gu_hu, out);
    check_descriptor(c, p, "gu_du", p.duals.gu_du, out);
    check_descriptor(c, p, "k_kh", p.duals.k_kh, out);
    for (const auto* flag : {&p.admits_proper_sl2, &p.excluded_by_morita})
      if (flag->value && flag->citation.empty())
        out.push_back(p.id + ": flag set without citation");
    if (p.reported_codimension && p.reported_codimension_note.empty())
      out.push_back(p.id + ": reported_codimension without note");
    if (p.instance_of) {
      try {
        (void)instantiate_template(*p.instance_of);
      } catch (const std::exception& e) {
        out.push_back(p.id + ": template " + p.instance_of->name + ": " + e.what());
      }
    }
  }

  for (const auto& [id, entry] : c.closed_forms().entries())
    for (auto& msg : check_closed_form(entry)) out.push_back(std::move(msg));

  for (const auto& f : c.facts()) {
    const std::string where = "fact p_" + std::to_string(f.index) + "(" + f.space + ")";
    if (f.citation.empty()) out.push_back(where + ": missing citation");
    if (f.index <= 0) out.push_back(where + ": index must be positive");
  }
  for (std::size_t a = 0; a < c.facts().size(); ++a)
    for (std::size_t b = a + 1; b < c.facts().size(); ++b) {
      const auto& x = c.facts()[a];
      const auto& y = c.facts()[b];
      if (x.space == y.space && x.index == y.index)
        out.push_back("fact p_" + std::to_string(x.index) + "(" + x.space + ") stated twice");
    }
  return out;
}

// ---------------------------------------------------------------------------
// Loading and serialization

Catalog load_catalog(const std::vector<std::string>& documents) {
  Catalog c;
  std::vector<ClosedFormEntry> closed;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    const std::string where = "document " + std::to_string(i);
    json doc;
    try {
      doc = json::parse(documents[i]);
    } catch (const json::parse_error& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(where + ": top level must be an object");
    const int version = get_int(doc, "schema_version", where);
    if (version != kCatalogSchemaVersion)
      throw ParseError(where + ": unsupported schema_version " + std::to_string(version));

    if (const json* s = section(doc, "real_forms", where))
      for (std::size_t k = 0; k < s->size(); ++k)
        c.real_forms_.push_back(parse_real_form((*s)[k], k));
    if (const json* s = section(doc, "pairs", where))
      for (std::size_t k = 0; k < s->size(); ++k) c.pairs_.push_back(parse_pair((*s)[k], k));
    if (const json* s = section(doc, "closed_forms", where))
      for (std::size_t k = 0; k < s->size(); ++k) closed.push_back(parse_closed_form((*s)[k], k));
    if (const json* s = section(doc, "facts", where))
      for (std::size_t k = 0; k < s->size(); ++k) c.facts_.push_back(parse_fact((*s)[k], k));
    if (const json* s = section(doc, "aliases", where)) {
      for (const auto& [alias, target] : s->items()) {
        if (!target.is_string()) throw ParseError(where + ": alias targets must be strings");
        c.aliases_[normalize_label(alias)] = normalize_label(target.get<std::string>());
      }
    }
  }

  std::vector<std::string> failures;
  for (auto& entry : closed) {
    auto problems = check_closed_form(entry);
    if (!problems.empty()) {
      failures.insert(failures.end(), problems.begin(), problems.end());
      continue;
    }
    if (c.closed_forms_.find(entry.id)) {
      failures.push_back(entry.id + ": duplicate closed form");
      continue;
    }
    c.closed_forms_.add(std::move(entry));
  }
  auto rest = validate_catalog(c);
  failures.insert(failures.end(), rest.begin(), rest.end());
  if (!failures.empty()) throw ValidationError(std::move(failures));
  return c;
}

Catalog load_catalog(std::string_view document) {
  return load_catalog(std::vector<std::string>{std::string(document)});
}

Catalog load_catalog_path(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else {
    throw Error("catalog path '" + path.string() + "' does not exist");
  }
  std::vector<std::string> docs;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw Error("cannot read '" + f.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    docs.push_back(buf.str());
  }
  return load_catalog(docs);
}

namespace {

json descriptor_json(const CompactSpaceDescriptor& d) {
  json j = {{"label", d.label}, {"kind", to_string(d.kind)}};
  switch (d.kind) {
    case SpaceKind::Group:
      j["ambient"] = d.ambient.label();
      break;
    case SpaceKind::EqualRankQuotient:
      j["ambient"] = d.ambient.label();
      j["subgroup"] = d.subgroup ? d.subgroup->label() : "0";
      break;
    case SpaceKind::ClosedForm:
      j["closed_form_id"] = d.closed_form_id;
      break;
    case SpaceKind::Imported:
      j["ambient"] = d.ambient.label();
      if (d.subgroup) j["subgroup"] = d.subgroup->label();
      j["citation"] = d.citation;
      break;
  }
  return j;
}

json flag_json(const CitedFlag& f) {
  json j;
  j["value"] = f.value ? json(*f.value) : json(nullptr);
  j["citation"] = f.citation;
  return j;
}

} // namespace

std::string serialize_catalog(const Catalog& c) {
  json doc;
  doc["schema_version"] = kCatalogSchemaVersion;
  doc["aliases"] = json::object();
  for (const auto& [a, t] : c.aliases()) doc["aliases"][a] = t;

  doc["real_forms"] = json::array();
  for (const auto& rf : c.real_forms())
    doc["real_forms"].push_back({{"name", rf.name},
                                 {"complexification", rf.complexification.label()},
                                 {"dim", rf.dim},
                                 {"maximal_compact", rf.maximal_compact.label()},
                                 {"compact_dim", rf.compact_dim},
                                 {"noncompact_dim", rf.noncompact_dim}});

  doc["pairs"] = json::array();
  for (const auto& p : c.pairs()) {
    json j = {{"id", p.id}, {"g", p.g}, {"h", p.h}, {"family", to_string(p.family)}};
    j["associated_d"] = p.associated_d ? json(*p.associated_d) : json(nullptr);
    j["dims"] = {{"k_h", p.dims.k_h},
                 {"p_h", p.dims.p_h},
                 {"k_h_perp", p.dims.k_h_perp},
                 {"p_h_perp", p.dims.p_h_perp}};
    json duals = json::object();
    if (p.duals.gu_hu) duals["gu_hu"] = descriptor_json(*p.duals.gu_hu);
    if (p.duals.gu_du) duals["gu_du"] = descriptor_json(*p.duals.gu_du);
    if (p.duals.k_kh) duals["k_kh"] = descriptor_json(*p.duals.k_kh);
    j["compact_duals"] = duals;
    j["flags"] = {{"admits_proper_sl2", flag_json(p.admits_proper_sl2)},
                  {"excluded_by_morita", flag_json(p.excluded_by_morita)}};
    if (p.reported_codimension)
      j["reported_codimension"] = {{"value", *p.reported_codimension},
                                   {"note", p.reported_codimension_note}};
    if (p.instance_of) {
      json params = json::object();
      for (const auto& [k, v] : p.instance_of->params) params[k] = v;
      j["template"] = {{"name", p.instance_of->name}, {"params", params}};
    }
    j["citations"] = p.citations;
    doc["pairs"].push_back(std::move(j));
  }

  doc["closed_forms"] = json::array();
  for (const auto& [id, e] : c.closed_forms().entries()) {
    json terms = json::array();
    for (const auto& t : e.terms) {
      if (const auto* f = std::get_if<FactorTerm>(&t))
        terms.push_back({{"factors", f->degrees}});
      else
        terms.push_back({{"template", std::get<TemplateTerm>(t).name},
                         {"n", std::get<TemplateTerm>(t).n}});
    }
    doc["closed_forms"].push_back({{"id", e.id},
                                   {"ambient", e.ambient.label()},
                                   {"subgroup", e.subgroup.label()},
                                   {"terms", terms},
                                   {"citation", e.citation}});
  }

  doc["facts"] = json::array();
  for (const auto& f : c.facts())
    doc["facts"].push_back(
        {{"space", f.space},
         {"claim", f.claim == PontryaginClaim::Nonzero ? "pontryagin_nonzero" : "pontryagin_zero"},
         {"index", f.index},
         {"citation", f.citation}});
  return doc.dump(2) + "\n";
}

const RealForm& associated_pair(const Catalog& c, const PairRecord& p) {
  if (!p.associated_d) throw MissingAssociated(p.id + ": no associated symmetric pair recorded");
  const RealForm& d = c.real_form(*p.associated_d);
  if (d.dim != p.dims.k_h + p.dims.p_h_perp)
    throw ValidationError({p.id + ": dim d = " + std::to_string(d.dim) +
                           " != dim k_H + dim p_H^perp = " +
                           std::to_string(p.dims.k_h + p.dims.p_h_perp)});
  return d;
}

// ---------------------------------------------------------------------------
// Classical real forms and parameterized families

namespace {

// Complexification of so(n) (equivalently the compact so(n)).
ReductiveType so_type(int n) {
  if (n <= 1) return {};
  if (n == 2) return ReductiveType({}, 1);
  if (n == 3) return ReductiveType({CartanType(Family::A, 1)});
  if (n == 4) return ReductiveType({CartanType(Family::A, 1), CartanType(Family::A, 1)});
  if (n % 2 == 1) return ReductiveType({CartanType(Family::B, (n - 1) / 2)});
  return ReductiveType({CartanType(Family::D, n / 2)});
}

ReductiveType su_type(int n) {
  if (n <= 1) return {};
  return ReductiveType({CartanType(Family::A, n - 1)});
}

ReductiveType sp_type(int n) {
  if (n <= 0) return {};
  if (n == 1) return ReductiveType({CartanType(Family::A, 1)});
  return ReductiveType({CartanType(Family::C, n)});
}

ReductiveType sum(const ReductiveType& a, const ReductiveType& b) {
  auto f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return ReductiveType(std::move(f), a.torus_rank() + b.torus_rank());
}

RealForm direct_sum(const RealForm& a, const RealForm& b) {
  if (a.dim == 0) return b;
  if (b.dim == 0) return a;
  RealForm r;
  r.name = a.name + "+" + b.name;
  r.complexification = sum(a.complexification, b.complexification);
  r.dim = a.dim + b.dim;
  r.maximal_compact = sum(a.maximal_compact, b.maximal_compact);
  r.compact_dim = a.compact_dim + b.compact_dim;
  r.noncompact_dim = a.noncompact_dim + b.noncompact_dim;
  return r;
}

std::string signature_name(const char* base, int p, int q) {
  std::string s = std::string(base) + "(" + std::to_string(p);
  if (q > 0) s += "," + std::to_string(q);
  return s + ")";
}

int param(const TemplateInstance& t, const char* key) {
  auto it = t.params.find(key);
  if (it == t.params.end()) throw std::invalid_argument(std::string("missing parameter ") + key);
  return it->second;
}

DecompositionDims decompose(const RealForm& g, const RealForm& h) {
  return {h.compact_dim, h.noncompact_dim, g.compact_dim - h.compact_dim,
          g.noncompact_dim - h.noncompact_dim};
}

} // namespace

RealForm real_form_so(int p, int q) {
  RealForm r;
  r.name = signature_name("so", p, q);
  const int n = p + q;
  r.complexification = so_type(n);
  r.dim = n * (n - 1) / 2;
  r.maximal_compact = sum(so_type(p), so_type(q));
  r.compact_dim = p * (p - 1) / 2 + q * (q - 1) / 2;
  r.noncompact_dim = p * q;
  return r;
}

RealForm real_form_su(int p, int q) {
  RealForm r;
  r.name = signature_name("su", p, q);
  const int n = p + q;
  r.complexification = su_type(n);
  r.dim = n * n - 1;
  r.maximal_compact = sum(su_type(p), su_type(q));
  if (p > 0 && q > 0) r.maximal_compact = sum(r.maximal_compact, ReductiveType({}, 1));
  r.compact_dim = r.maximal_compact.dimension();
  r.noncompact_dim = 2 * p * q;
  return r;
}

RealForm real_form_sp(int p, int q) {
  RealForm r;
  r.name = signature_name("sp", p, q);
  const int n = p + q;
  r.complexification = sp_type(n);
  r.dim = n * (2 * n + 1);
  r.maximal_compact = sum(sp_type(p), sp_type(q));
  r.compact_dim = p * (2 * p + 1) + q * (2 * q + 1);
  r.noncompact_dim = 4 * p * q;
  return r;
}

RealForm real_form_so_star(int n) {
  RealForm r;
  r.name = "so*(" + std::to_string(2 * n) + ")";
  r.complexification = so_type(2 * n);
  r.dim = n * (2 * n - 1);
  r.maximal_compact = sum(su_type(n), ReductiveType({}, 1));
  r.compact_dim = n * n;
  r.noncompact_dim = n * (n - 1);
  return r;
}

RealForm real_form_sp_real(int n) {
  RealForm r;
  r.name = "sp(" + std::to_string(n) + ",r)";
  r.complexification = sp_type(n);
  r.dim = n * (2 * n + 1);
  r.maximal_compact = sum(su_type(n), ReductiveType({}, 1));
  r.compact_dim = n * n;
  r.noncompact_dim = n * (n + 1);
  return r;
}

std::vector<std::string> pair_templates() {
  return {"SO(n,m)/SO(n-k,m)xSO(k)", "SU(2p,2q)/Sp(p,q)", "SU(2m-1,2m-1)/SO*(4m-2)"};
}

GeneratedInstance instantiate_template(const TemplateInstance& t) {
  GeneratedInstance out;
  if (t.name == "SO(n,m)/SO(n-k,m)xSO(k)") {
    const int n = param(t, "n"), m = param(t, "m"), k = param(t, "k");
    if (!(0 < n && n <= m && k > 0 && k <= n))
      throw std::invalid_argument("need 0 < n <= m and 0 < k <= n");
    out.g = real_form_so(n, m);
    out.h = direct_sum(real_form_so(n - k, m), real_form_so(k, 0));
    out.d = direct_sum(real_form_so(k, m), real_form_so(n - k, 0));
  } else if (t.name == "SU(2p,2q)/Sp(p,q)") {
    const int p = param(t, "p"), q = param(t, "q");
    if (!(p > 0 && q > 0)) throw std::invalid_argument("need p, q > 0");
    out.g = real_form_su(2 * p, 2 * q);
    out.h = real_form_sp(p, q);
    out.d = real_form_sp(p, q);
  } else if (t.name == "SU(2m-1,2m-1)/SO*(4m-2)") {
    const int m = param(t, "m");
    if (m < 1) throw std::invalid_argument("need m >= 1");
    out.g = real_form_su(2 * m - 1, 2 * m - 1);
    out.h = real_form_so_star(2 * m - 1);
    out.d = real_form_sp_real(2 * m - 1);
  } else {
    throw std::invalid_argument("unknown pair template '" + t.name + "'");
  }
  out.dims = decompose(out.g, out.h);
  return out;
}

} // namespace ckf
