#include "ricciforge/io.hpp"

#include "ricciforge/error.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace ricciforge::io {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Non-empty lines with '#' comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.tokens.empty()) lines.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

double to_double(std::string_view s, std::size_t line) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
    throw ParseError(line, "expected a number, got '" + std::string(s) + "'");
  }
  return x;
}

long long to_integer(std::string_view s, std::size_t line) {
  long long x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return x;
}

struct Polygon {
  std::size_t line;
  std::vector<std::size_t> vertices;
};

WeightedCellComplex assemble(const std::vector<Vec3>& pts, const std::vector<Polygon>& polys,
                             std::vector<std::string>* warnings) {
  ComplexBuilder b;
  for (const auto& p : pts) b.add_vertex(p);
  for (const auto& poly : polys) {
    const auto& v = poly.vertices;
    if (v.size() < 3) throw ParseError(poly.line, "face needs at least 3 vertices");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] >= pts.size()) throw ParseError(poly.line, "vertex index " + std::to_string(v[i]) + " out of range");
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (v[i] == v[j]) throw ParseError(poly.line, "face repeats vertex " + std::to_string(v[i]));
      }
    }
    if (v.size() > 3 && warnings != nullptr) {
      warnings->push_back("line " + std::to_string(poly.line) + ": " + std::to_string(v.size()) +
                          "-gon fanned into " + std::to_string(v.size() - 2) + " triangles");
    }
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
      const std::array<std::size_t, 3> t{v[0], v[k], v[k + 1]};
      b.add_face_by_vertices(t);
    }
  }
  WeightedCellComplex c = b.build();
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto [a, bb] = c.edge_vertices(e);
    if (geom::distance(c.position(a), c.position(bb)) <= 0.0) {
      throw Error(ErrorCode::Degenerate, "zero-length edge between vertices " + std::to_string(a) + " and " +
                                             std::to_string(bb));
    }
  }
  try {
    return with_geometric_weights(c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidWeight) throw;
    throw Error(ErrorCode::Degenerate, std::string("zero-area face: ") + e.detail());
  }
}

WeightedCellComplex parse_off(std::string_view text, std::vector<std::string>* warnings) {
  const auto lines = tokenize(text);
  const std::size_t eof_line = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  std::size_t li = 0;
  if (lines.empty()) throw ParseError(1, "empty file");
  std::vector<std::string_view> header = lines[0].tokens;
  if (header[0] != "OFF") throw ParseError(lines[0].number, "missing OFF header");
  header.erase(header.begin());
  std::size_t counts_line = lines[0].number;
  if (header.empty()) {
    if (lines.size() < 2) throw ParseError(eof_line, "missing element counts");
    header = lines[1].tokens;
    counts_line = lines[1].number;
    li = 2;
  } else {
    li = 1;
  }
  if (header.size() < 2) throw ParseError(counts_line, "expected vertex and face counts");
  const long long nv = to_integer(header[0], counts_line);
  const long long nf = to_integer(header[1], counts_line);
  if (nv < 0 || nf < 0) throw ParseError(counts_line, "negative element count");

  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(nv));
  for (long long i = 0; i < nv; ++i, ++li) {
    if (li >= lines.size()) throw ParseError(eof_line, "file ends before vertex " + std::to_string(i));
    const auto& l = lines[li];
    if (l.tokens.size() < 3) throw ParseError(l.number, "vertex needs 3 coordinates");
    pts.push_back({to_double(l.tokens[0], l.number), to_double(l.tokens[1], l.number),
                   to_double(l.tokens[2], l.number)});
  }
  std::vector<Polygon> polys;
  for (long long i = 0; i < nf; ++i, ++li) {
    if (li >= lines.size()) throw ParseError(eof_line, "file ends before face " + std::to_string(i));
    const auto& l = lines[li];
    const long long k = to_integer(l.tokens[0], l.number);
    if (k < 0 || static_cast<std::size_t>(k) + 1 > l.tokens.size()) {
      throw ParseError(l.number, "face lists fewer indices than announced");
    }
    Polygon p{l.number, {}};
    for (long long j = 1; j <= k; ++j) {
      const long long idx = to_integer(l.tokens[static_cast<std::size_t>(j)], l.number);
      if (idx < 0) throw ParseError(l.number, "negative vertex index");
      p.vertices.push_back(static_cast<std::size_t>(idx));
    }
    polys.push_back(std::move(p));
  }
  return assemble(pts, polys, warnings);
}

WeightedCellComplex parse_obj(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<Vec3> pts;
  std::vector<Polygon> polys;
  for (const auto& l : tokenize(text)) {
    if (l.tokens[0] == "v") {
      if (l.tokens.size() < 4) throw ParseError(l.number, "vertex needs 3 coordinates");
      pts.push_back({to_double(l.tokens[1], l.number), to_double(l.tokens[2], l.number),
                     to_double(l.tokens[3], l.number)});
    } else if (l.tokens[0] == "f") {
      Polygon p{l.number, {}};
      for (std::size_t j = 1; j < l.tokens.size(); ++j) {
        std::string_view t = l.tokens[j];
        t = t.substr(0, t.find('/'));
        const long long idx = to_integer(t, l.number);
        const long long n = static_cast<long long>(pts.size());
        const long long zero_based = idx > 0 ? idx - 1 : n + idx;
        if (idx == 0 || zero_based < 0) throw ParseError(l.number, "invalid vertex index " + std::string(t));
        p.vertices.push_back(static_cast<std::size_t>(zero_based));
      }
      polys.push_back(std::move(p));
    }
  }
  return assemble(pts, polys, warnings);
}

}  // namespace

WeightedCellComplex parse_mesh(std::string_view text, MeshFormat format, std::vector<std::string>* warnings) {
  return format == MeshFormat::Off ? parse_off(text, warnings) : parse_obj(text, warnings);
}

MeshFormat mesh_format_for(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (ext == ".off") return MeshFormat::Off;
  if (ext == ".obj") return MeshFormat::Obj;
  throw Error(ErrorCode::InvalidArgument, "unknown mesh extension '" + ext + "'");
}

WeightedCellComplex load_mesh(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  return parse_mesh(read_text(path), mesh_format_for(path), warnings);
}

std::string format_off(const WeightedCellComplex& c) {
  std::ostringstream out;
  out << "OFF\n" << c.num_vertices() << ' ' << c.num_faces() << " 0\n";
  for (const Vec3& p : c.positions()) {
    out << format_double(p[0]) << ' ' << format_double(p[1]) << ' ' << format_double(p[2]) << '\n';
  }
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    const auto cyc = c.face_vertices(f);
    out << cyc.size();
    for (std::size_t v : cyc) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

void write_off(const WeightedCellComplex& c, const std::filesystem::path& path) { write_text(path, format_off(c)); }

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "write to '" + path.string() + "' failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ricciforge::io
