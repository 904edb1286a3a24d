#include "leavitt/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

namespace {

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what);
}

[[noreturn]] void literal_error(std::string_view literal, std::size_t column,
                                const std::string& what) {
  fail(ErrorKind::Parse, "column " + std::to_string(column + 1) + " of '" +
                             std::string(literal) + "': " + what);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

// Edge list for a lasso part: dotted ids, or a run of single-letter ids.
std::vector<EdgeId> parse_edge_run(const Graph& graph, std::string_view raw) {
  std::string text = trim(raw);
  std::vector<EdgeId> edges;
  if (text.empty()) return edges;
  bool dotted_ok = true;
  for (const std::string& part : split(text, '.')) {
    auto e = graph.find_edge(trim(part));
    if (!e) {
      dotted_ok = false;
      break;
    }
    edges.push_back(*e);
  }
  if (dotted_ok) return edges;
  edges.clear();
  if (text.find('.') == std::string::npos) {
    bool letters_ok = true;
    for (char c : text) {
      auto e = graph.find_edge(std::string(1, c));
      if (!e) {
        letters_ok = false;
        break;
      }
      edges.push_back(*e);
    }
    if (letters_ok) return edges;
  }
  fail(ErrorKind::Parse, "unknown edge sequence '" + text + "'");
}

}  // namespace

GraphPtr parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::vector<std::pair<std::string, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.emplace_back(line.substr(start, i - start), start + 1);
    }
    if (tokens.empty()) continue;
    const auto& [head, head_col] = tokens.front();
    if (head == "vertex") {
      if (tokens.size() != 2) parse_error(line_no, head_col, "expected 'vertex <id>'");
      vertices.push_back(tokens[1].first);
    } else if (head == "edge") {
      if (tokens.size() != 4) {
        parse_error(line_no, head_col, "expected 'edge <id> range=<v> source=<v>'");
      }
      EdgeSpec spec{tokens[1].first, "", ""};
      for (std::size_t i = 2; i < 4; ++i) {
        const auto& [tok, col] = tokens[i];
        if (tok.rfind("range=", 0) == 0) {
          spec.range = tok.substr(6);
        } else if (tok.rfind("source=", 0) == 0) {
          spec.source = tok.substr(7);
        } else {
          parse_error(line_no, col, "expected range=<v> or source=<v>, got '" + tok + "'");
        }
      }
      if (spec.range.empty() || spec.source.empty()) {
        parse_error(line_no, head_col, "edge needs both range= and source=");
      }
      edges.push_back(spec);
    } else {
      parse_error(line_no, head_col, "unknown record '" + head + "'");
    }
  }
  auto graph = std::make_shared<const Graph>(std::move(vertices), std::move(edges));
  validate_graph(*graph);
  return graph;
}

GraphPtr load_graph(const std::string& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorKind::Parse, "cannot open graph file '" + file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& graph) {
  std::string out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out += "vertex " + graph.vertex_name(v) + "\n";
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    out += "edge " + graph.edge_name(e) + " range=" + graph.vertex_name(graph.range(e)) +
           " source=" + graph.vertex_name(graph.source(e)) + "\n";
  }
  return out;
}

std::string format_path(const Graph& graph, const Path& path) {
  if (path.is_vertex()) return graph.vertex_name(path.range());
  std::string out;
  for (EdgeId e : path.edges()) {
    if (!out.empty()) out += '.';
    out += graph.edge_name(e);
  }
  return out;
}

Path parse_path(const Graph& graph, std::string_view raw) {
  std::string text = trim(raw);
  if (auto v = graph.find_vertex(text)) return Path::vertex(*v);
  std::vector<EdgeId> edges;
  for (const std::string& part : split(text, '.')) {
    auto e = graph.find_edge(trim(part));
    if (!e) fail(ErrorKind::Parse, "unknown vertex or edge '" + trim(part) + "' in path '" + text + "'");
    edges.push_back(*e);
  }
  return Path::from_edges(graph, std::move(edges));
}

std::string format_lasso(const Graph& graph, const Lasso& x) {
  std::string out;
  for (std::size_t i = 0; i < x.prefix().size(); ++i) {
    if (i) out += '.';
    out += graph.edge_name(x.prefix()[i]);
  }
  out += '(';
  for (std::size_t i = 0; i < x.cycle().size(); ++i) {
    if (i) out += '.';
    out += graph.edge_name(x.cycle()[i]);
  }
  out += ")^inf";
  return out;
}

Lasso parse_lasso(const Graph& graph, std::string_view raw) {
  std::string text = trim(raw);
  auto open = text.find('(');
  auto close = text.rfind(")^inf");
  if (open == std::string::npos) literal_error(text, 0, "expected 'prefix(cycle)^inf'");
  if (close == std::string::npos || close + 5 != text.size() || close < open) {
    literal_error(text, text.size() - 1, "expected ')^inf' at the end");
  }
  std::string prefix_text = trim(text.substr(0, open));
  std::vector<EdgeId> prefix;
  std::optional<VertexId> anchor;
  if (auto v = graph.find_vertex(prefix_text); v && !prefix_text.empty()) {
    anchor = v;
  } else {
    prefix = parse_edge_run(graph, prefix_text);
  }
  std::vector<EdgeId> cycle = parse_edge_run(graph, text.substr(open + 1, close - open - 1));
  if (cycle.empty()) literal_error(text, open, "empty cycle");
  Lasso x = Lasso::make(graph, std::move(prefix), std::move(cycle));
  if (anchor && x.range() != *anchor) {
    fail(ErrorKind::Mismatch, "lasso does not start at vertex " + prefix_text);
  }
  return x;
}

std::string format_arrow(const Graph& graph, const Arrow& arrow) {
  return "(" + format_lasso(graph, arrow.range) + ", " + std::to_string(arrow.lag) + ", " +
         format_lasso(graph, arrow.source) + ")";
}

Arrow parse_arrow(const Graph& graph, std::string_view raw) {
  std::string text = trim(raw);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    literal_error(text, 0, "expected '(x, k, y)'");
  }
  auto parts = split(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 3) literal_error(text, 0, "expected three comma-separated fields");
  Lag lag = 0;
  try {
    lag = std::stoll(trim(parts[1]));
  } catch (const std::exception&) {
    literal_error(text, parts[0].size() + 2, "lag is not an integer");
  }
  return make_arrow(graph, parse_lasso(graph, parts[0]), lag, parse_lasso(graph, parts[2]));
}

std::string format_cylinder(const Graph& graph, const Cylinder& cylinder) {
  return "[" + format_path(graph, cylinder.range_path) + "|" +
         format_path(graph, cylinder.source_path) + "]";
}

Cylinder parse_cylinder(const Graph& graph, std::string_view raw) {
  std::string text = trim(raw);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    literal_error(text, 0, "expected '[mu|nu]'");
  }
  auto parts = split(text.substr(1, text.size() - 2), '|');
  if (parts.size() == 1) return unit_cylinder(parse_path(graph, parts[0]));
  if (parts.size() != 2) literal_error(text, 0, "expected at most one '|'");
  return make_cylinder(parse_path(graph, parts[0]), parse_path(graph, parts[1]));
}

std::string format_element(const Element& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [cyl, coeff] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff.to_string() + "*" + format_cylinder(f.graph(), cyl);
  }
  return out;
}

Element parse_element(GraphPtr graph, Ring ring, std::string_view literal) {
  const Graph& g = *graph;
  std::string_view text = literal;
  std::vector<std::pair<Cylinder, Scalar>> terms;
  if (trim(text) == "0") return Element(graph, ring);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) literal_error(literal, pos, "expected a term");
    Scalar coeff = Scalar::one(ring);
    if (text[pos] != '[') {
      auto star = text.find('*', pos);
      if (star == std::string_view::npos) literal_error(literal, pos, "expected 'r*[mu|nu]'");
      try {
        coeff = Scalar::parse(ring, text.substr(pos, star - pos));
      } catch (const Error& e) {
        literal_error(literal, pos, e.what());
      }
      pos = star + 1;
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != '[') literal_error(literal, pos, "expected '['");
    auto close = text.find(']', pos);
    if (close == std::string_view::npos) literal_error(literal, pos, "unterminated '['");
    try {
      terms.emplace_back(parse_cylinder(g, text.substr(pos, close - pos + 1)), coeff);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Parse) throw;
      literal_error(literal, pos, e.what());
    }
    pos = close + 1;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+') literal_error(literal, pos, "expected '+' between terms");
    ++pos;
  }
  return Element::from_terms(std::move(graph), ring, terms);
}

}  // namespace leavitt
