#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "punctri/triangulation.hpp"

namespace punctri {

/// Malformed line in a .tri stream (syntax only; surface rules are checked
/// when the record is built).
class TriParseError : public std::runtime_error {
 public:
  TriParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// One unvalidated record: `<label> <vertex_count> a,b,c;a,b,c;...`.
/// A label of "-" stands for the empty label.
struct TriRecord {
  std::string label;
  int vertex_count = 0;
  std::vector<Face> faces;
  int line = 0;
};

std::vector<TriRecord> parse_tri(std::istream& in);

/// Parses and validates every record. InvalidTriangulation messages are
/// prefixed with the record label and line.
std::vector<Triangulation> read_tri(std::istream& in);
std::vector<Triangulation> load_tri(const std::filesystem::path& path);

/// Canonical line for t (faces sorted, no trailing newline).
std::string serialize(const Triangulation& t);
void write_tri(std::ostream& out, std::span<const Triangulation> items);
void save_tri(const std::filesystem::path& path, std::span<const Triangulation> items);

}  // namespace punctri
