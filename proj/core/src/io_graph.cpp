#include "ricciforge/io.hpp"

#include "ricciforge/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace ricciforge::io {

namespace {

double positive_weight(std::string_view s, std::size_t line, const char* what) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  if (!(x > 0.0)) throw ParseError(line, std::string(what) + " must be positive, got " + std::string(s));
  return x;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<std::string> names;
  std::vector<double> node_weight;
  std::vector<bool> node_weight_set;
  struct EdgeRow {
    std::size_t u, v;
    double w;
  };
  std::vector<EdgeRow> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  auto node = [&](std::string_view name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    names.emplace_back(name);
    node_weight.push_back(1.0);
    node_weight_set.push_back(false);
    index.emplace(std::string(name), names.size() - 1);
    return names.size() - 1;
  };
  auto set_weight = [&](std::size_t v, double w, std::size_t line) {
    if (node_weight_set[v] && node_weight[v] != w) {
      throw ParseError(line, "conflicting weights for node '" + names[v] + "'");
    }
    node_weight[v] = w;
    node_weight_set[v] = true;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tok;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tok.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.empty()) continue;
    if (tok.size() != 3 && tok.size() != 5) {
      throw ParseError(line_no, "expected 'u v w_e [w_u w_v]', got " + std::to_string(tok.size()) + " fields");
    }
    if (tok[0] == tok[1]) throw ParseError(line_no, "self loop at '" + std::string(tok[0]) + "'");
    const double w = positive_weight(tok[2], line_no, "edge weight");
    const std::size_t u = node(tok[0]);
    const std::size_t v = node(tok[1]);
    if (!seen.insert(std::minmax(u, v)).second) {
      throw ParseError(line_no, "duplicate edge " + std::string(tok[0]) + " - " + std::string(tok[1]));
    }
    if (tok.size() == 5) {
      set_weight(u, positive_weight(tok[3], line_no, "node weight"), line_no);
      set_weight(v, positive_weight(tok[4], line_no, "node weight"), line_no);
    }
    edges.push_back({u, v, w});
  }

  ComplexBuilder b;
  for (double w : node_weight) b.add_vertex(w);
  for (const auto& e : edges) b.add_edge(e.u, e.v, e.w);
  return {b.build(), std::move(names)};
}

Graph load_graph(const std::filesystem::path& path) { return parse_graph(read_text(path)); }

std::string format_graph(const WeightedCellComplex& c, const std::vector<std::string>& names) {
  auto name = [&](std::size_t v) { return v < names.size() ? names[v] : std::to_string(v); };
  std::ostringstream out;
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto [u, v] = c.edge_vertices(e);
    out << name(u) << '\t' << name(v) << '\t' << format_double(c.weight(edge_id(e))) << '\t'
        << format_double(c.weight(vertex_id(u))) << '\t' << format_double(c.weight(vertex_id(v))) << '\n';
  }
  return out.str();
}

void write_graph(const WeightedCellComplex& c, const std::filesystem::path& path,
                 const std::vector<std::string>& names) {
  write_text(path, format_graph(c, names));
}

}  // namespace ricciforge::io
