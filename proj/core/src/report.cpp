#include "ckf/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ckf/errors.hpp"

namespace ckf {

using nlohmann::json;

const char* to_string(FamilyFilter f) {
  switch (f) {
    case FamilyFilter::Symmetric: return "symmetric";
    case FamilyFilter::ThreeSymmetric: return "3-symmetric";
    case FamilyFilter::All: return "all";
  }
  return "?";
}

std::optional<FamilyFilter> family_filter_from_string(const std::string& s) {
  if (s == "symmetric") return FamilyFilter::Symmetric;
  if (s == "3-symmetric") return FamilyFilter::ThreeSymmetric;
  if (s == "all") return FamilyFilter::All;
  return std::nullopt;
}

namespace {

constexpr const char* kListSep = "; ";

void add_unique(std::vector<std::string>& out, const std::string& s) {
  if (s.empty()) return;
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

bool selected(FamilyFilter f, PairFamily p) {
  switch (f) {
    case FamilyFilter::Symmetric: return p == PairFamily::Symmetric;
    case FamilyFilter::ThreeSymmetric: return p == PairFamily::ThreeSymmetric;
    case FamilyFilter::All: return true;
  }
  return false;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += kListSep;
    out += xs[k];
  }
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  const std::string sep = kListSep;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return out;
}

const char* const kColumns[] = {"pair",      "family",    "rank",    "cohomology",
                                "pontryagin", "aggregate", "missing", "citations"};
constexpr std::size_t kColumnCount = std::size(kColumns);

std::vector<std::string> cells(const ReportRow& r) {
  return {r.pair,       r.family,    r.rank,           r.cohomology,
          r.pontryagin, r.aggregate, join(r.missing), join(r.citations)};
}

ReportRow row_from_cells(const std::vector<std::string>& c) {
  if (c.size() != kColumnCount)
    throw ParseError("expected " + std::to_string(kColumnCount) + " columns, got " +
                     std::to_string(c.size()));
  ReportRow r;
  r.pair = c[0];
  r.family = c[1];
  r.rank = c[2];
  r.cohomology = c[3];
  r.pontryagin = c[4];
  r.aggregate = c[5];
  r.missing = split(c[6]);
  r.citations = split(c[7]);
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string trim(std::string s) {
  auto ws = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t k = 0;
  while (k < s.size() && ws(s[k])) ++k;
  return s.substr(k);
}

// Splits "| a | b\| c |" into {"a", "b| c"}.
std::vector<std::string> md_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool open = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    char ch = line[k];
    if (ch == '\\' && k + 1 < line.size()) {
      cur += line[++k];
      continue;
    }
    if (ch == '|') {
      if (open) out.push_back(trim(cur));
      cur.clear();
      open = true;
      continue;
    }
    cur += ch;
  }
  if (!trim(cur).empty()) throw ParseError("markdown row does not end with '|'");
  return out;
}

} // namespace

ReportRow make_row(const PairAssessment& a, const PairRecord& record) {
  ReportRow r;
  r.pair = a.pair;
  r.family = to_string(a.family);
  r.rank = summary(a.rank);
  r.cohomology = summary(a.cohomology);
  r.pontryagin = a.pontryagin ? summary(*a.pontryagin) : "n/a";
  r.aggregate = summary(a.aggregate);
  r.missing = a.aggregate.missing;
  for (const auto& c : record.citations) add_unique(r.citations, c);
  for (const auto& e : a.aggregate.evidence)
    if (e.citation.rfind('[', 0) == 0) add_unique(r.citations, e.citation);
  return r;
}

std::vector<Discrepancy> find_discrepancies(const Catalog& c, const PairRecord& p) {
  std::vector<Discrepancy> out;
  if (!p.reported_codimension) return out;
  const int n = codimension_n(c, p);
  const int reported = *p.reported_codimension;
  if (n == reported) return out;
  const IntPolynomial poly = poincare_compact_group(c.g_of(p).complexification);
  std::ostringstream note;
  if (!p.reported_codimension_note.empty()) note << p.reported_codimension_note << ". ";
  note << "dim H^" << n << "(g) = " << poly.coefficient(static_cast<std::size_t>(n))
       << ", dim H^" << reported << "(g) = "
       << (reported >= 0 ? poly.coefficient(static_cast<std::size_t>(reported)) : Integer(0));
  out.push_back({p.id, "codimension_n", n, reported, note.str()});
  return out;
}

ClassificationReport classify(const Catalog& c, FamilyFilter family,
                              std::span<const int> pontryagin_indices) {
  ClassificationReport report;
  report.family = to_string(family);
  std::vector<const PairRecord*> records;
  for (const auto& p : c.pairs())
    if (selected(family, p.family)) records.push_back(&p);
  std::sort(records.begin(), records.end(),
            [](const PairRecord* a, const PairRecord* b) { return a->id < b->id; });
  for (const PairRecord* p : records) {
    const PairAssessment a = assess(c, *p, pontryagin_indices);
    report.rows.push_back(make_row(a, *p));
    if (a.aggregate.status != Status::Obstructed) report.exceptions.push_back(p->id);
    for (auto& d : find_discrepancies(c, *p)) report.discrepancies.push_back(std::move(d));
  }
  return report;
}

std::string to_json(const ClassificationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"pair", row.pair},
                    {"family", row.family},
                    {"rank", row.rank},
                    {"cohomology", row.cohomology},
                    {"pontryagin", row.pontryagin},
                    {"aggregate", row.aggregate},
                    {"missing", row.missing},
                    {"citations", row.citations}});
  json disc = json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back({{"pair", d.pair},
                    {"quantity", d.quantity},
                    {"computed", d.computed},
                    {"reported", d.reported},
                    {"note", d.note}});
  json doc{{"schema_version", r.schema_version},
           {"family", r.family},
           {"rows", rows},
           {"exceptions", r.exceptions},
           {"discrepancies", disc}};
  return doc.dump(2) + "\n";
}

ClassificationReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    ClassificationReport r;
    r.schema_version = doc.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw ParseError("unsupported report schema_version " + std::to_string(r.schema_version));
    r.family = doc.at("family").get<std::string>();
    for (const auto& j : doc.at("rows")) {
      ReportRow row;
      row.pair = j.at("pair").get<std::string>();
      row.family = j.at("family").get<std::string>();
      row.rank = j.at("rank").get<std::string>();
      row.cohomology = j.at("cohomology").get<std::string>();
      row.pontryagin = j.at("pontryagin").get<std::string>();
      row.aggregate = j.at("aggregate").get<std::string>();
      row.missing = j.at("missing").get<std::vector<std::string>>();
      row.citations = j.at("citations").get<std::vector<std::string>>();
      r.rows.push_back(std::move(row));
    }
    r.exceptions = doc.at("exceptions").get<std::vector<std::string>>();
    for (const auto& j : doc.at("discrepancies"))
      r.discrepancies.push_back({j.at("pair").get<std::string>(),
                                 j.at("quantity").get<std::string>(),
                                 j.at("computed").get<long>(), j.at("reported").get<long>(),
                                 j.at("note").get<std::string>()});
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

std::string to_csv(const ClassificationReport& r) {
  std::string out;
  for (std::size_t k = 0; k < kColumnCount; ++k) {
    if (k) out += ',';
    out += kColumns[k];
  }
  out += '\n';
  for (const auto& row : r.rows) {
    const auto cs = cells(row);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k) out += ',';
      out += csv_field(cs[k]);
    }
    out += '\n';
  }
  return out;
}

std::vector<ReportRow> rows_from_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool any = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (quoted) {
      if (ch == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          cur += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      any = true;
    } else if (ch == '\n') {
      fields.push_back(std::move(cur));
      records.push_back(std::move(fields));
      fields.clear();
      cur.clear();
      any = false;
    } else if (ch != '\r') {
      cur += ch;
      any = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  if (any) {
    fields.push_back(std::move(cur));
    records.push_back(std::move(fields));
  }
  if (records.empty()) throw ParseError("empty CSV");
  const std::vector<std::string> header(std::begin(kColumns), std::end(kColumns));
  if (records.front() != header) throw ParseError("unexpected CSV header");
  std::vector<ReportRow> rows;
  for (std::size_t k = 1; k < records.size(); ++k) rows.push_back(row_from_cells(records[k]));
  return rows;
}

std::string to_markdown(const ClassificationReport& r) {
  std::ostringstream out;
  out << "# Classification report (family: " << r.family << ")\n\n";
  out << "schema_version: " << r.schema_version << "\n\n";
  out << '|';
  for (const char* c : kColumns) out << ' ' << c << " |";
  out << "\n|";
  for (std::size_t k = 0; k < kColumnCount; ++k) out << "---|";
  out << '\n';
  for (const auto& row : r.rows) {
    out << '|';
    for (const auto& c : cells(row)) out << ' ' << md_cell(c) << " |";
    out << '\n';
  }
  out << "\n## Exceptions\n\n";
  if (r.exceptions.empty()) out << "none\n";
  for (const auto& e : r.exceptions) out << "- " << e << '\n';
  out << "\n## Discrepancies\n\n";
  if (r.discrepancies.empty()) out << "none\n";
  for (const auto& d : r.discrepancies)
    out << "- " << d.pair << ": " << d.quantity << " computed " << d.computed << ", reported "
        << d.reported << ". " << d.note << '\n';
  return out.str();
}

std::vector<ReportRow> rows_from_markdown(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<ReportRow> rows;
  bool in_table = false;
  bool header_seen = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() != '|') {
      if (in_table) break;
      continue;
    }
    in_table = true;
    if (!header_seen) {
      const std::vector<std::string> header(std::begin(kColumns), std::end(kColumns));
      if (md_split(line) != header) throw ParseError("unexpected markdown table header");
      header_seen = true;
      continue;
    }
    if (line.rfind("|---", 0) == 0) continue;
    rows.push_back(row_from_cells(md_split(line)));
  }
  if (!header_seen) throw ParseError("no markdown table found");
  return rows;
}

} // namespace ckf
