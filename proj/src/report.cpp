#include "ftr/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ftr/errors.hpp"

namespace ftr {

ReportFormat format_from_string(const std::string& s) {
  if (s == "table") return ReportFormat::Table;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  throw ConfigError("unknown format: " + s + " (expected table|csv|json)");
}

bool Report::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return !r.passed || *r.passed; });
}

void Report::add(const DerivationResult& d, unsigned sig) {
  ReportRow r;
  r.name = d.name;
  r.value = d.computed.magnitude.to_string(sig);
  r.unit = d.computed.dims.to_string();
  if (d.paper_value) r.paper = d.paper_value->magnitude.to_string(sig);
  if (d.observed_value) r.observed = d.observed_value->magnitude.to_string(sig);
  if (d.rel_err_paper) r.rel_err_paper = d.rel_err_paper->to_string(3);
  if (d.rel_err_observed) r.rel_err_observed = d.rel_err_observed->to_string(3);
  if (d.tolerance) r.tolerance = d.tolerance->to_string(3);
  r.passed = d.passed;
  r.citation = d.citation;
  r.note = d.note;
  rows.push_back(std::move(r));
}

namespace {
std::string fmt_double(double v, unsigned sig) {
  std::ostringstream out;
  out << std::setprecision(static_cast<int>(sig)) << v;
  return out.str();
}
}  // namespace

void Report::add(const McReport& mc, const std::string& name) {
  ReportRow r;
  r.name = name;
  r.value = fmt_double(mc.empirical_std, sig_digits);
  r.observed = fmt_double(mc.predicted_std, sig_digits);
  r.note = "n=" + std::to_string(mc.n_particles) + " trials=" + std::to_string(mc.trials) +
           " seed=" + std::to_string(mc.seed) + " z=" + fmt_double(mc.z_score, 3);
  r.passed = std::abs(mc.z_score) < 3.0;
  r.tolerance = "3 s.e.";
  r.citation = "centroid scatter";
  rows.push_back(std::move(r));
}

void Report::add_text(const std::string& name, const std::string& value,
                      const std::string& note, std::optional<bool> passed_flag) {
  ReportRow r;
  r.name = name;
  r.value = value;
  r.note = note;
  r.passed = passed_flag;
  rows.push_back(std::move(r));
}

namespace {

const char* const kColumns[] = {"name",     "value",    "unit",          "paper",
                                "observed", "err_paper", "err_observed", "tolerance",
                                "passed",   "citation", "note"};

std::string passed_text(const std::optional<bool>& p) {
  if (!p) return "info";
  return *p ? "pass" : "FAIL";
}

std::vector<std::string> row_fields(const ReportRow& r) {
  return {r.name,          r.value,     r.unit,      r.paper,  r.observed, r.rel_err_paper,
          r.rel_err_observed, r.tolerance, passed_text(r.passed), r.citation, r.note};
}

void emit_table(const Report& rep, std::ostream& out) {
  constexpr size_t ncols = std::size(kColumns);
  std::vector<size_t> width(ncols);
  for (size_t c = 0; c < ncols; ++c) width[c] = std::string(kColumns[c]).size();
  std::vector<std::vector<std::string>> grid;
  for (const auto& row : rep.rows) {
    grid.push_back(row_fields(row));
    for (size_t c = 0; c < ncols; ++c) width[c] = std::max(width[c], grid.back()[c].size());
  }
  out << "# dataset=" << rep.dataset << " provenance=" << rep.provenance
      << " precision=" << rep.precision_digits << " version=" << rep.tool_version;
  if (rep.seed) out << " seed=" << *rep.seed;
  out << '\n';
  auto line = [&](const std::vector<std::string>& fields) {
    for (size_t c = 0; c < ncols; ++c) {
      out << std::left << std::setw(static_cast<int>(width[c]) + 2) << fields[c];
    }
    out << '\n';
  };
  line(std::vector<std::string>(std::begin(kColumns), std::end(kColumns)));
  for (const auto& row : grid) line(row);
  out << (rep.passed() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << '\n';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void emit_csv(const Report& rep, std::ostream& out) {
  constexpr size_t ncols = std::size(kColumns);
  for (size_t c = 0; c < ncols; ++c) out << kColumns[c] << (c + 1 < ncols ? "," : "\n");
  for (const auto& row : rep.rows) {
    auto fields = row_fields(row);
    for (size_t c = 0; c < ncols; ++c) {
      out << csv_escape(fields[c]) << (c + 1 < ncols ? "," : "\n");
    }
  }
}

nlohmann::json json_number_or_string(const std::string& rendered) {
  if (rendered.empty()) return nullptr;
  try {
    return nlohmann::json::parse(rendered);
  } catch (...) {
    return rendered;
  }
}

void emit_json(const Report& rep, std::ostream& out) {
  nlohmann::json j;
  j["meta"] = {{"version", rep.tool_version},
               {"dataset", rep.dataset},
               {"provenance", rep.provenance},
               {"precision", rep.precision_digits},
               {"sig_digits", rep.sig_digits}};
  if (rep.seed) j["meta"]["seed"] = *rep.seed;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rep.rows) {
    nlohmann::json row;
    row["name"] = r.name;
    row["value"] = json_number_or_string(r.value);
    row["unit"] = r.unit;
    row["paper"] = json_number_or_string(r.paper);
    row["observed"] = json_number_or_string(r.observed);
    row["err_paper"] = json_number_or_string(r.rel_err_paper);
    row["err_observed"] = json_number_or_string(r.rel_err_observed);
    row["tolerance"] = json_number_or_string(r.tolerance);
    row["passed"] = r.passed ? nlohmann::json(*r.passed) : nlohmann::json(nullptr);
    row["citation"] = r.citation;
    row["note"] = r.note;
    j["rows"].push_back(std::move(row));
  }
  j["passed"] = rep.passed();
  out << j.dump(2) << '\n';
}

}  // namespace

void emit(const Report& report, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::Table: emit_table(report, out); break;
    case ReportFormat::Csv: emit_csv(report, out); break;
    case ReportFormat::Json: emit_json(report, out); break;
  }
}

}  // namespace ftr
