#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ckf/catalog.hpp"
#include "ckf/errors.hpp"
#include "support.hpp"

using namespace ckf;
using nlohmann::json;
using ckf::testing::shipped;

namespace {

json minimal_doc() {
  return json::parse(R"json({
    "schema_version": 1,
    "real_forms": [
      {"name": "so(4,4)", "complexification": "D4", "dim": 28, "maximal_compact": "A1+A1+A1+A1", "compact_dim": 12, "noncompact_dim": 16},
      {"name": "su(1,2)", "complexification": "A2", "dim": 8, "maximal_compact": "A1+T1", "compact_dim": 4, "noncompact_dim": 4}
    ],
    "pairs": [
      {"g": "so(4,4)", "h": "su(1,2)", "family": "3-symmetric",
       "dims": {"k_h": 4, "p_h": 4, "k_h_perp": 8, "p_h_perp": 12},
       "citations": ["test"]}
    ]
  })json");
}

std::vector<std::string> failures_of(const json& doc) {
  try {
    load_catalog(doc.dump());
  } catch (const ValidationError& e) {
    return e.failures;
  }
  return {};
}

bool mentions(const std::vector<std::string>& failures, const std::string& needle) {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const std::string& f) { return f.find(needle) != std::string::npos; });
}

} // namespace

TEST(Catalog, ShippedCatalogValidates) {
  EXPECT_TRUE(validate_catalog(shipped()).empty());
  EXPECT_EQ(shipped().pairs().size(), 12u);
}

TEST(Catalog, RealFormCards) {
  const auto& e6 = shipped().real_form("e6(-14)");
  EXPECT_EQ(e6.dim, 78);
  EXPECT_EQ(e6.compact_dim, 46);
  EXPECT_EQ(e6.noncompact_dim, 32);
  EXPECT_EQ(e6.maximal_compact, ReductiveType::parse("D5+T1"));
  const auto& so44 = shipped().real_form("so(4,4)");
  EXPECT_EQ(so44.dim, 28);
  EXPECT_EQ(so44.compact_dim, 12);
  EXPECT_EQ(so44.noncompact_dim, 16);
  const auto& g2 = shipped().real_form("g2(2)");
  EXPECT_EQ(g2.dim, 14);
  EXPECT_EQ(g2.compact_dim, 6);
  EXPECT_EQ(g2.noncompact_dim, 8);
}

TEST(Catalog, InvariantsHoldForEveryRecord) {
  const Catalog& c = shipped();
  for (const auto& rf : c.real_forms()) {
    EXPECT_EQ(rf.dim, rf.compact_dim + rf.noncompact_dim) << rf.name;
    EXPECT_EQ(rf.dim, rf.complexification.dimension()) << rf.name;
    EXPECT_EQ(rf.compact_dim, rf.maximal_compact.dimension()) << rf.name;
  }
  for (const auto& p : c.pairs()) {
    const auto& g = c.g_of(p);
    const auto& h = c.h_of(p);
    EXPECT_EQ(p.dims.k_h + p.dims.p_h, h.dim) << p.id;
    EXPECT_EQ(p.dims.k_h + p.dims.k_h_perp, g.compact_dim) << p.id;
    EXPECT_EQ(p.dims.p_h + p.dims.p_h_perp, g.noncompact_dim) << p.id;
    EXPECT_EQ(p.dims.k_h + p.dims.k_h_perp + p.dims.p_h + p.dims.p_h_perp, g.dim) << p.id;
    if (p.associated_d) {
      const auto& d = associated_pair(c, p);
      EXPECT_EQ(d.dim, p.dims.k_h + p.dims.p_h_perp) << p.id;
    }
    for (const auto* flag : {&p.admits_proper_sl2, &p.excluded_by_morita})
      if (flag->value) EXPECT_FALSE(flag->citation.empty()) << p.id;
    EXPECT_FALSE(p.citations.empty()) << p.id;
  }
  for (const auto& f : c.facts()) EXPECT_FALSE(f.citation.empty()) << f.space;
}

TEST(Catalog, AssociatedPair) {
  const Catalog& c = shipped();
  const auto& d = associated_pair(c, c.pair("e6(2)/sp(3,1)"));
  EXPECT_EQ(d.name, "f4(4)");
  EXPECT_EQ(c.pair("e6(2)/sp(3,1)").duals.gu_du->label, "E6/F4");
  EXPECT_THROW(associated_pair(c, c.pair("so(3,5)/g2(2)")), MissingAssociated);
}

TEST(Catalog, RiemannianPairHasDEqualG) {
  json doc = json::parse(R"json({
    "schema_version": 1,
    "real_forms": [
      {"name": "so(2,3)", "complexification": "B2", "dim": 10, "maximal_compact": "A1+T1", "compact_dim": 4, "noncompact_dim": 6},
      {"name": "so(2)+so(3)", "complexification": "A1+T1", "dim": 4, "maximal_compact": "A1+T1", "compact_dim": 4, "noncompact_dim": 0}
    ],
    "pairs": [
      {"g": "so(2,3)", "h": "so(2)+so(3)", "family": "symmetric", "associated_d": "so(2,3)",
       "dims": {"k_h": 4, "p_h": 0, "k_h_perp": 0, "p_h_perp": 6},
       "citations": ["test"]}
    ]
  })json");
  const Catalog c = load_catalog(doc.dump());
  const auto& p = c.pair("so(2,3)/so(2)+so(3)");
  EXPECT_EQ(associated_pair(c, p).name, "so(2,3)");
  doc["pairs"][0]["associated_d"] = "so(2)+so(3)";
  EXPECT_TRUE(mentions(failures_of(doc), "dim d"));
}

TEST(Catalog, LookupNormalizesAndResolvesAliases) {
  const Catalog& c = shipped();
  EXPECT_EQ(c.real_form("SO(4, 4)").name, "so(4,4)");
  EXPECT_EQ(c.real_form("sp(4,\xE2\x84\x9D)").name, "sp(4,r)");
  EXPECT_EQ(c.real_form("EIII").name, "e6(-14)");
  EXPECT_EQ(c.pair("SO(4,4) / SU(1,2)").id, "so(4,4)/su(1,2)");
  EXPECT_EQ(c.pair("so(4,6)/so(1,6)\xC3\x97so(3)").id, "so(4,6)/so(1,6)+so(3)");
  try {
    c.real_form("so(4,5)");
    FAIL() << "expected NotFound";
  } catch (const NotFound& e) {
    ASSERT_FALSE(e.suggestions.empty());
    EXPECT_TRUE(std::find(e.suggestions.begin(), e.suggestions.end(), "so(4,4)") !=
                e.suggestions.end());
  }
  EXPECT_THROW(c.pair("e6(2)/sp(2,2)"), NotFound);
}

TEST(Catalog, RoundTrip) {
  const std::string text = serialize_catalog(shipped());
  const Catalog again = load_catalog(text);
  EXPECT_EQ(again, shipped());
  EXPECT_EQ(serialize_catalog(again), text);
}

TEST(Catalog, EmptyCatalog) {
  const Catalog c = load_catalog(R"({"schema_version": 1})");
  EXPECT_TRUE(c.pairs().empty());
  EXPECT_TRUE(c.real_forms().empty());
  EXPECT_TRUE(validate_catalog(c).empty());
  EXPECT_EQ(load_catalog(serialize_catalog(c)), c);
  EXPECT_TRUE(load_catalog(std::vector<std::string>{}).pairs().empty());
}

TEST(Catalog, ParseErrors) {
  EXPECT_THROW(load_catalog("{not json"), ParseError);
  EXPECT_THROW(load_catalog(R"({"pairs": []})"), ParseError);
  EXPECT_THROW(load_catalog(R"({"schema_version": 2})"), ParseError);
  EXPECT_THROW(load_catalog(R"({"schema_version": 1, "pairs": {}})"), ParseError);
  json doc = minimal_doc();
  doc["pairs"][0]["family"] = "5-symmetric";
  EXPECT_THROW(load_catalog(doc.dump()), ParseError);
  doc = minimal_doc();
  doc["real_forms"][0]["complexification"] = "Q4";
  EXPECT_THROW(load_catalog(doc.dump()), ParseError);
  doc = minimal_doc();
  doc["real_forms"][0]["dim"] = "28";
  EXPECT_THROW(load_catalog(doc.dump()), ParseError);
  doc = minimal_doc();
  doc["pairs"][0].erase("dims");
  EXPECT_THROW(load_catalog(doc.dump()), ParseError);
}

TEST(Catalog, MinimalDocumentLoads) {
  const Catalog c = load_catalog(minimal_doc().dump());
  EXPECT_EQ(c.pairs().size(), 1u);
}

TEST(CatalogValidation, DimensionIdentityNamesRecord) {
  json doc = minimal_doc();
  doc["pairs"][0]["dims"]["p_h"] = 5;
  const auto failures = failures_of(doc);
  ASSERT_FALSE(failures.empty());
  EXPECT_TRUE(mentions(failures, "so(4,4)/su(1,2)"));
  EXPECT_TRUE(mentions(failures, "dim h"));
  EXPECT_TRUE(mentions(failures, "dim p"));
}

TEST(CatalogValidation, ListsEveryFailure) {
  json doc = minimal_doc();
  doc["real_forms"][0]["dim"] = 29;
  doc["real_forms"][1]["compact_dim"] = 5;
  const auto failures = failures_of(doc);
  EXPECT_TRUE(mentions(failures, "so(4,4)"));
  EXPECT_TRUE(mentions(failures, "su(1,2)"));
  EXPECT_GE(failures.size(), 3u);
}

TEST(CatalogValidation, RecordChecks) {
  json doc = minimal_doc();
  doc["pairs"][0]["h"] = "su(2,2)";
  EXPECT_TRUE(mentions(failures_of(doc), "su(2,2)"));

  doc = minimal_doc();
  doc["pairs"][0]["associated_d"] = "nowhere";
  EXPECT_TRUE(mentions(failures_of(doc), "associated_d"));

  doc = minimal_doc();
  doc["pairs"][0]["flags"] = {{"excluded_by_morita", {{"value", true}, {"citation", ""}}}};
  EXPECT_TRUE(mentions(failures_of(doc), "citation"));

  doc = minimal_doc();
  doc["pairs"][0]["reported_codimension"] = {{"value", 17}};
  EXPECT_TRUE(mentions(failures_of(doc), "reported_codimension"));

  doc = minimal_doc();
  doc["pairs"][0]["template"] = {{"name", "SU(2p,2q)/Sp(p,q)"}, {"params", {{"p", 0}, {"q", 1}}}};
  EXPECT_TRUE(mentions(failures_of(doc), "template"));

  doc = minimal_doc();
  doc["pairs"].push_back(doc["pairs"][0]);
  EXPECT_FALSE(failures_of(doc).empty());

  doc = minimal_doc();
  doc["aliases"] = {{"x", "so(9,9)"}};
  EXPECT_TRUE(mentions(failures_of(doc), "so(9,9)"));

  doc = minimal_doc();
  doc["pairs"][0]["compact_duals"] = {
      {"gu_hu", {{"label", "SO(8)/U(3)"}, {"kind", "closed_form"}}}};
  EXPECT_TRUE(mentions(failures_of(doc), "SO(8)/U(3)"));

  doc = minimal_doc();
  doc["pairs"][0]["compact_duals"] = {
      {"gu_hu", {{"label", "X"}, {"kind", "imported"}, {"ambient", "D4"}, {"citation", ""}}}};
  EXPECT_TRUE(mentions(failures_of(doc), "citation"));
  doc["pairs"][0]["compact_duals"]["gu_hu"].erase("citation");
  EXPECT_THROW(load_catalog(doc.dump()), ParseError);

  doc = minimal_doc();
  doc["pairs"][0]["compact_duals"] = {
      {"gu_hu", {{"label", "X"}, {"kind", "equal_rank"}, {"ambient", "D4"}, {"subgroup", "A2"}}}};
  EXPECT_TRUE(mentions(failures_of(doc), "equal_rank"));

  doc = minimal_doc();
  doc["facts"] = {{{"space", "X"}, {"claim", "pontryagin_zero"}, {"index", 2}, {"citation", ""}}};
  EXPECT_TRUE(mentions(failures_of(doc), "citation"));
}

TEST(CatalogValidation, RankOfHMayNotExceedRankOfG) {
  json doc = minimal_doc();
  doc["real_forms"][1] = {{"name", "su(1,2)"}, {"complexification", "A5"}, {"dim", 35},
                          {"maximal_compact", "A4+T1"}, {"compact_dim", 25},
                          {"noncompact_dim", 10}};
  EXPECT_TRUE(mentions(failures_of(doc), "rank"));
}

TEST(Catalog, DirectoryAndFileLoading) {
  const auto dir = std::filesystem::path(ckf::testing::data_dir());
  EXPECT_EQ(load_catalog_path(dir), shipped());
  const Catalog extra = load_catalog_path(dir / "extra" / "small_classical.json");
  EXPECT_EQ(extra.pairs().size(), 4u);
  EXPECT_THROW(load_catalog_path(dir / "does-not-exist.json"), Error);
}

TEST(CatalogTemplates, GeneratedInstancesMatchShippedRecords) {
  const auto dir = std::filesystem::path(ckf::testing::data_dir());
  const Catalog extra = load_catalog_path(dir / "extra" / "small_classical.json");
  int checked = 0;
  for (const Catalog* c : {&shipped(), &extra}) {
    for (const auto& p : c->pairs()) {
      if (!p.instance_of) continue;
      ++checked;
      const GeneratedInstance gen = instantiate_template(*p.instance_of);
      EXPECT_EQ(gen.g, c->g_of(p)) << p.id;
      EXPECT_EQ(gen.h, c->h_of(p)) << p.id;
      ASSERT_TRUE(p.associated_d) << p.id;
      EXPECT_EQ(gen.d, c->real_form(*p.associated_d)) << p.id;
      EXPECT_EQ(gen.dims, p.dims) << p.id;
    }
  }
  EXPECT_EQ(checked, 10);
}

TEST(CatalogTemplates, RealFormBuilders) {
  const RealForm so = real_form_so(3, 5);
  EXPECT_EQ(so.name, "so(3,5)");
  EXPECT_EQ(so, shipped().real_form("so(3,5)"));
  EXPECT_EQ(real_form_su(1, 2), shipped().real_form("su(1,2)"));
  EXPECT_EQ(real_form_sp(3, 1), shipped().real_form("sp(3,1)"));
  EXPECT_EQ(real_form_sp_real(4), shipped().real_form("sp(4,r)"));
  EXPECT_EQ(real_form_so_star(5), shipped().real_form("so*(10)"));
  EXPECT_THROW(instantiate_template({"SO(n,m)/SO(n-k,m)xSO(k)", {{"n", 4}, {"m", 6}}}),
               std::invalid_argument);
  EXPECT_THROW(instantiate_template({"nope", {}}), std::invalid_argument);
}
