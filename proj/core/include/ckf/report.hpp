#ifndef CKF_REPORT_HPP_
#define CKF_REPORT_HPP_

// Classification driver: runs every test over the catalog records of a
// family and emits the result as JSON, CSV or Markdown. All three emitters
// carry the same row data; the JSON form round-trips.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ckf/catalog.hpp"
#include "ckf/obstructions.hpp"

namespace ckf {

inline constexpr int kReportSchemaVersion = 1;

enum class FamilyFilter { Symmetric, ThreeSymmetric, All };

const char* to_string(FamilyFilter f);
std::optional<FamilyFilter> family_filter_from_string(const std::string& s);

struct ReportRow {
  std::string pair;
  std::string family;
  std::string rank;       // summary() of each verdict
  std::string cohomology;
  std::string pontryagin; // "n/a" when not applicable
  std::string aggregate;
  std::vector<std::string> missing;
  std::vector<std::string> citations;

  bool operator==(const ReportRow&) const = default;
};

struct Discrepancy {
  std::string pair;
  std::string quantity;
  long computed = 0;
  long reported = 0;
  std::string note;

  bool operator==(const Discrepancy&) const = default;
};

struct ClassificationReport {
  int schema_version = kReportSchemaVersion;
  std::string family;
  std::vector<ReportRow> rows;       // sorted by pair name
  std::vector<std::string> exceptions; // rows whose aggregate is not Obstructed
  std::vector<Discrepancy> discrepancies;

  bool operator==(const ClassificationReport&) const = default;
};

// Citations: the record's own, then the literature references ("[key] ...")
// among the aggregate evidence.
ReportRow make_row(const PairAssessment& a, const PairRecord& record);

ClassificationReport classify(const Catalog& c, FamilyFilter family,
                              std::span<const int> pontryagin_indices);

// Codimension differences against reported_codimension, with the
// Poincare coefficients at both degrees.
std::vector<Discrepancy> find_discrepancies(const Catalog& c, const PairRecord& p);

std::string to_json(const ClassificationReport& r);
ClassificationReport report_from_json(std::string_view text);
std::string to_csv(const ClassificationReport& r);
std::string to_markdown(const ClassificationReport& r);

// Parses the row table emitted by to_csv / to_markdown.
std::vector<ReportRow> rows_from_csv(std::string_view text);
std::vector<ReportRow> rows_from_markdown(std::string_view text);

} // namespace ckf

#endif
