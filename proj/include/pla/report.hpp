#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pla/arrangement.hpp"
#include "pla/charpoly.hpp"
#include "pla/feasibility.hpp"
#include "pla/inequalities.hpp"

namespace pla {

// Left-aligned text table; a table without rows still prints its header.
class Table {
 public:
  explicit Table(std::vector<std::string> header);
  void add(std::vector<std::string> row);
  std::size_t size() const { return rows_.size(); }
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// One machine-readable record. Every value is a string so that integers and
// rationals travel exactly.
struct Record {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value);
};

// Single-line JSON object: {"kind": ..., field: value, ...} in field order.
std::string to_json_line(const Record& r);

// Collects records and writes them as JSON lines.
class RecordSink {
 public:
  void emit(Record r) { records_.push_back(std::move(r)); }
  const std::vector<Record>& records() const { return records_; }
  void write(std::ostream& out) const;

 private:
  std::vector<Record> records_;
};

std::string fvector_text(const FVector& f);
std::string bool_text(bool b);

Table certificate_table(const std::vector<Certificate>& certs);
Record certificate_record(const std::string& source, const Certificate& c);

Record invariants_record(const std::string& source, const TVector& t, const CharPoly& p, const RootAnalysis& r);

Table feasible_table(const FeasibleSet& set);
Record feasible_record(const TVector& t);
Record enumeration_summary_record(const FeasibilityQuery& q, const EnumerationStats& s);

Table scan_table(const ScanResult& scan);
Record scan_record(const ScanRow& row);
std::string scan_summary(const ScanResult& scan);

Table ratio_table(const RatioReport& report);
Record ratio_record(const RatioEntry& e);

}  // namespace pla
