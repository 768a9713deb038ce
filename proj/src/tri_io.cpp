#include "punctri/tri_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace punctri {

namespace {

int parse_int(std::string_view text, int line) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw TriParseError(line, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

Face parse_face(std::string_view text, int line) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw TriParseError(line, "face '" + std::string(text) + "' needs 3 vertices");
  return {parse_int(parts[0], line), parse_int(parts[1], line), parse_int(parts[2], line)};
}

}  // namespace

std::vector<TriRecord> parse_tri(std::istream& in) {
  std::vector<TriRecord> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;

    std::istringstream fields(text);
    std::string label, count, faces, extra;
    fields >> label >> count >> faces;
    if (faces.empty()) throw TriParseError(line, "expected '<label> <vertex_count> <faces>'");
    if (fields >> extra) throw TriParseError(line, "unexpected trailing field '" + extra + "'");

    TriRecord record;
    record.label = label == "-" ? std::string() : label;
    record.vertex_count = parse_int(count, line);
    record.line = line;
    std::string_view body = faces;
    if (!body.empty() && body.back() == ';') body.remove_suffix(1);
    for (auto part : split(body, ';')) record.faces.push_back(parse_face(part, line));
    out.push_back(std::move(record));
  }
  return out;
}

std::vector<Triangulation> read_tri(std::istream& in) {
  std::vector<Triangulation> out;
  for (auto& r : parse_tri(in)) {
    try {
      out.push_back(Triangulation::build(r.vertex_count, std::move(r.faces), r.label));
    } catch (const InvalidTriangulation& e) {
      const std::string name = r.label.empty() ? "-" : r.label;
      throw InvalidTriangulation(e.kind(), name + " (line " + std::to_string(r.line) + "): " + e.what());
    }
  }
  return out;
}

std::vector<Triangulation> load_tri(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_tri(in);
}

std::string serialize(const Triangulation& t) {
  std::string out = t.label().empty() ? std::string("-") : t.label();
  out += ' ';
  out += std::to_string(t.vertex_count());
  out += ' ';
  bool first = true;
  for (const Face& f : t.faces()) {
    if (!first) out += ';';
    first = false;
    out += std::to_string(f[0]) + ',' + std::to_string(f[1]) + ',' + std::to_string(f[2]);
  }
  return out;
}

void write_tri(std::ostream& out, std::span<const Triangulation> items) {
  for (const Triangulation& t : items) out << serialize(t) << '\n';
}

void save_tri(const std::filesystem::path& path, std::span<const Triangulation> items) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_tri(out, items);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace punctri
