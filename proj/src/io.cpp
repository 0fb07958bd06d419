#include "pla/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pla {

namespace {

struct Row {
  int number;
  std::vector<std::string> tokens;
};

// Splits content into rows of whitespace/comma separated tokens, dropping
// comments and blank lines.
std::vector<Row> tokenize(std::istream& in) {
  std::vector<Row> rows;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    for (char& c : text) {
      if (c == ',' || c == '{' || c == '}' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream ss(text);
    Row row{number, {}};
    std::string tok;
    while (ss >> tok) row.tokens.push_back(tok);
    if (!row.tokens.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::int64_t to_int(const std::string& tok, const std::string& source, int line) {
  std::string_view s = tok;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(source, line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

// Accepts "n=13", "n= 13", "n = 13".
int read_header(std::vector<Row>& rows, std::size_t& next, const std::string& source) {
  if (rows.empty()) throw ParseError(source, 0, "empty input, expected header 'n=<int>'");
  const Row& row = rows.front();
  std::string joined;
  for (const auto& t : row.tokens) joined += t;
  if (joined.rfind("n=", 0) != 0) throw ParseError(source, row.number, "expected header 'n=<int>'");
  std::int64_t n = to_int(joined.substr(2), source, row.number);
  if (n < 0 || n > kMaxLines) throw ParseError(source, row.number, "line count out of range");
  next = 1;
  return static_cast<int>(n);
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), source_(source), line_(line) {}

FileFormat format_from_path(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "arr") return FileFormat::Arrangement;
  if (ext == "lines") return FileFormat::Lines;
  if (ext == "wd") return FileFormat::Wiring;
  if (ext == "tvec") return FileFormat::TVector;
  throw ParseError(path, 0, "cannot infer format from extension (use --format arr|lines|wd|tvec)");
}

FileFormat parse_format_name(const std::string& name) {
  if (name == "arr") return FileFormat::Arrangement;
  if (name == "lines") return FileFormat::Lines;
  if (name == "wd") return FileFormat::Wiring;
  if (name == "tvec") return FileFormat::TVector;
  throw std::invalid_argument("unknown format '" + name + "'");
}

Arrangement read_arrangement(std::istream& in, const std::string& source) {
  auto rows = tokenize(in);
  std::size_t next = 0;
  Arrangement arr;
  arr.n = read_header(rows, next, source);
  for (; next < rows.size(); ++next) {
    std::vector<int> ids;
    for (const auto& tok : rows[next].tokens) {
      std::int64_t id = to_int(tok, source, rows[next].number);
      if (id < 0 || id >= arr.n) {
        throw ParseError(source, rows[next].number, "line id " + tok + " outside [0, " + std::to_string(arr.n) + ")");
      }
      ids.push_back(static_cast<int>(id));
    }
    arr.vertices.push_back(std::move(ids));
  }
  return arr;
}

std::vector<RationalLine> read_lines(std::istream& in, const std::string& source) {
  std::vector<RationalLine> lines;
  for (const auto& row : tokenize(in)) {
    if (row.tokens.size() != 3) {
      throw ParseError(source, row.number, "expected 3 coefficients 'a b c', got " + std::to_string(row.tokens.size()));
    }
    BigRational c[3];
    for (int i = 0; i < 3; ++i) {
      try {
        c[i] = parse_big_rational(row.tokens[i]);
      } catch (const std::exception& e) {
        throw ParseError(source, row.number, e.what());
      }
    }
    try {
      lines.emplace_back(c[0], c[1], c[2]);
    } catch (const RejectedInput& e) {
      throw ParseError(source, row.number, e.what());
    }
  }
  return lines;
}

WiringDiagram read_wiring(std::istream& in, const std::string& source) {
  auto rows = tokenize(in);
  std::size_t next = 0;
  WiringDiagram w;
  w.n = read_header(rows, next, source);
  for (; next < rows.size(); ++next) {
    for (const auto& tok : rows[next].tokens) {
      auto sep = tok.find("..");
      if (sep == std::string::npos) throw ParseError(source, rows[next].number, "expected move 'a..b', got '" + tok + "'");
      std::int64_t a = to_int(tok.substr(0, sep), source, rows[next].number);
      std::int64_t b = to_int(tok.substr(sep + 2), source, rows[next].number);
      if (a < 0 || b >= w.n || a >= b) {
        throw ParseError(source, rows[next].number, "move '" + tok + "' is not a block of >= 2 positions in [0, " +
                                                       std::to_string(w.n) + ")");
      }
      w.moves.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  }
  return w;
}

TVector read_tvector(std::istream& in, const std::string& source) {
  auto rows = tokenize(in);
  if (rows.empty()) throw ParseError(source, 0, "empty input, expected 'n: t2 t3 ...'");
  if (rows.size() > 1) throw ParseError(source, rows[1].number, "expected a single t-vector record");
  const Row& row = rows.front();
  std::string first = row.tokens.front();
  std::vector<std::string> rest(row.tokens.begin() + 1, row.tokens.end());
  if (first.back() == ':') {
    first.pop_back();
  } else if (!rest.empty() && rest.front() == ":") {
    rest.erase(rest.begin());
  } else if (auto colon = first.find(':'); colon != std::string::npos) {
    rest.insert(rest.begin(), first.substr(colon + 1));
    first.erase(colon);
  } else {
    throw ParseError(source, row.number, "expected 'n: t2 t3 ...'");
  }
  std::int64_t n = to_int(first, source, row.number);
  if (n < 3 || n > kMaxLines) throw ParseError(source, row.number, "line count out of range");
  std::vector<std::int64_t> counts;
  for (const auto& tok : rest) counts.push_back(to_int(tok, source, row.number));
  if (counts.empty()) throw ParseError(source, row.number, "no counts after 'n:'");
  try {
    return TVector(static_cast<int>(n), counts);
  } catch (const RejectedInput& e) {
    throw ParseError(source, row.number, e.what());
  }
}

void write_arrangement(std::ostream& out, const Arrangement& arr) {
  out << "n=" << arr.n << '\n';
  for (const auto& v : arr.canonical().vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
}

void write_lines(std::ostream& out, const std::vector<RationalLine>& lines) {
  for (const auto& l : lines) out << to_string(l.a()) << ' ' << to_string(l.b()) << ' ' << to_string(l.c()) << '\n';
}

void write_wiring(std::ostream& out, const WiringDiagram& w) {
  out << "n=" << w.n << '\n';
  for (const auto& m : w.moves) out << m.first << ".." << m.last << '\n';
}

void write_tvector(std::ostream& out, const TVector& t) {
  out << t.n() << ':';
  for (auto c : t.counts()) out << ' ' << c;
  out << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pla
