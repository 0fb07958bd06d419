#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pla/arrangement.hpp"
#include "pla/lines.hpp"
#include "pla/wiring.hpp"

namespace pla {

// Malformed file content; what() carries "source:line: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

enum class FileFormat { Arrangement, Lines, Wiring, TVector };

// From the extension: .arr, .lines, .wd, .tvec.
FileFormat format_from_path(const std::string& path);
FileFormat parse_format_name(const std::string& name);

// Text formats. Blank lines and text after '#' are ignored.
//   .arr   "n=<int>" then one vertex per line as line ids
//   .lines one line per row, "a b c" as exact rationals
//   .wd    "n=<int>" then one move per line as "a..b"
//   .tvec  "n: t2 t3 ..."
Arrangement read_arrangement(std::istream& in, const std::string& source = "<input>");
std::vector<RationalLine> read_lines(std::istream& in, const std::string& source = "<input>");
WiringDiagram read_wiring(std::istream& in, const std::string& source = "<input>");
TVector read_tvector(std::istream& in, const std::string& source = "<input>");

// Canonical output; reading it back and writing again gives the same bytes.
void write_arrangement(std::ostream& out, const Arrangement& arr);
void write_lines(std::ostream& out, const std::vector<RationalLine>& lines);
void write_wiring(std::ostream& out, const WiringDiagram& w);
void write_tvector(std::ostream& out, const TVector& t);

// Opens the file; a missing file is a ParseError at line 0.
std::string read_file(const std::string& path);

}  // namespace pla
