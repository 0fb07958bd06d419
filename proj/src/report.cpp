#include "pla/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace pla {

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add(std::vector<std::string> row) {
  row.resize(header_.size());
  rows_.push_back(std::move(row));
}

std::string Table::render() const {
  std::vector<std::size_t> width(header_.size(), 0);
  auto measure = [&width](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  measure(header_);
  for (const auto& r : rows_) measure(r);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      s += row[i];
      if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << s << '\n';
  };
  line(header_);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows_) line(r);
  return os.str();
}

Record& Record::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string to_json_line(const Record& r) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  for (const auto& [k, v] : r.fields) j[k] = v;
  return j.dump();
}

void RecordSink::write(std::ostream& out) const {
  for (const auto& r : records_) out << to_json_line(r) << '\n';
}

std::string fvector_text(const FVector& f) {
  return "(" + std::to_string(f.f0) + "," + std::to_string(f.f1) + "," + std::to_string(f.f2) + ")";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Table certificate_table(const std::vector<Certificate>& certs) {
  Table t({"constraint", "verdict", "slack", "requires", "note"});
  for (const auto& c : certs) {
    bool na = c.verdict == Verdict::NotApplicable;
    t.add({c.name, to_string(c.verdict), na ? "-" : to_string(c.slack), na ? "-" : to_string(c.direction), c.reason});
  }
  return t;
}

Record certificate_record(const std::string& source, const Certificate& c) {
  Record r{"certificate", {}};
  r.add("source", source).add("constraint", c.name).add("verdict", to_string(c.verdict));
  if (c.verdict != Verdict::NotApplicable) {
    r.add("slack", to_string(c.slack)).add("direction", to_string(c.direction));
  } else {
    r.add("reason", c.reason);
  }
  return r;
}

Record invariants_record(const std::string& source, const TVector& t, const CharPoly& p, const RootAnalysis& a) {
  FVector f = f_vector(t);
  Record r{"invariants", {}};
  r.add("source", source)
      .add("n", std::to_string(t.n()))
      .add("t", t.to_string())
      .add("f0", std::to_string(f.f0))
      .add("f1", std::to_string(f.f1))
      .add("f2", std::to_string(f.f2))
      .add("chi", p.to_string())
      .add("m", std::to_string(a.m))
      .add("roots", a.text)
      .add("simplicial", bool_text(is_simplicial(t)))
      .add("splits", bool_text(a.splits));
  return r;
}

Table feasible_table(const FeasibleSet& set) {
  Table t({"n", "t", "m", "f2"});
  for (const auto& v : set.vectors) {
    t.add({std::to_string(v.n()), v.to_string(), std::to_string(v.multiplicity()), std::to_string(f_vector(v).f2)});
  }
  return t;
}

Record feasible_record(const TVector& t) {
  Record r{"feasible", {}};
  r.add("n", std::to_string(t.n())).add("t", t.to_string()).add("m", std::to_string(t.multiplicity()));
  return r;
}

Record enumeration_summary_record(const FeasibilityQuery& q, const EnumerationStats& s) {
  Record r{"enumeration", {}};
  r.add("n", std::to_string(q.n))
      .add("max_mult", std::to_string(q.effective_max_mult()))
      .add("feasible", std::to_string(s.feasible))
      .add("nodes", std::to_string(s.nodes))
      .add("pruned", std::to_string(s.pruned))
      .add("leaves", std::to_string(s.leaves));
  return r;
}

Table scan_table(const ScanResult& scan) {
  Table t({"n", "feasible", "nodes", "pruned"});
  for (const auto& row : scan.rows) {
    t.add({std::to_string(row.n), std::to_string(row.stats.feasible), std::to_string(row.stats.nodes),
           std::to_string(row.stats.pruned)});
  }
  return t;
}

Record scan_record(const ScanRow& row) {
  Record r{"scan", {}};
  r.add("n", std::to_string(row.n))
      .add("feasible", std::to_string(row.stats.feasible))
      .add("nodes", std::to_string(row.stats.nodes))
      .add("pruned", std::to_string(row.stats.pruned));
  return r;
}

std::string scan_summary(const ScanResult& scan) {
  const auto& rows = scan.rows;
  std::string range = rows.empty() ? "" : std::to_string(rows.front().n) + ".." + std::to_string(rows.back().n);
  if (!scan.last_feasible) return "largest feasible n: none in " + range;
  return "largest feasible n: " + std::to_string(*scan.last_feasible) + " (scanned " + range + ")";
}

Table ratio_table(const RatioReport& report) {
  Table t({"n", "t", "t6/n^2", "lower", "upper", "within"});
  for (const auto& e : report.entries) {
    t.add({std::to_string(e.n), e.t.to_string(), to_string(e.ratio), to_string(e.lower), to_string(e.upper),
           bool_text(e.within)});
  }
  return t;
}

Record ratio_record(const RatioEntry& e) {
  Record r{"ratio", {}};
  r.add("n", std::to_string(e.n))
      .add("t", e.t.to_string())
      .add("ratio", to_string(e.ratio))
      .add("lower", to_string(e.lower))
      .add("upper", to_string(e.upper))
      .add("within", bool_text(e.within));
  return r;
}

}  // namespace pla
