#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ftr/chain.hpp"
#include "ftr/statgeo.hpp"

namespace ftr {

enum class ReportFormat { Table, Csv, Json };

ReportFormat format_from_string(const std::string& s);

/// One rendered report row. Numeric fields are rendered once with the
/// configured significant digits, so output bytes do not depend on the
/// internal precision.
struct ReportRow {
  std::string name;
  std::string value;
  std::string unit;
  std::string paper;
  std::string observed;
  std::string rel_err_paper;
  std::string rel_err_observed;
  std::string tolerance;
  std::optional<bool> passed;
  std::string citation;
  std::string note;
};

struct Report {
  std::string tool_version;
  std::string dataset;
  std::string provenance;
  unsigned precision_digits = 0;
  unsigned sig_digits = 6;
  std::optional<std::uint64_t> seed;
  std::vector<ReportRow> rows;

  bool passed() const;
  void add(const DerivationResult& row, unsigned sig);
  void add(const McReport& mc, const std::string& name);
  void add_text(const std::string& name, const std::string& value, const std::string& note,
                std::optional<bool> passed_flag);
};

/// Table: aligned human-readable columns. Csv: header plus one line per
/// row, stable column names. Json: {meta, rows, passed}.
void emit(const Report& report, ReportFormat format, std::ostream& out);

}  // namespace ftr
