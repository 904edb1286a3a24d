#include "leavitt/files.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "leavitt/error.hpp"
#include "leavitt/text.hpp"

namespace leavitt {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

using Sections = std::map<std::string, std::vector<Line>>;

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

Sections split_sections(std::string_view text, const std::vector<std::string>& known) {
  Sections sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  std::string current;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']' && line.find('|') == std::string::npos &&
        line.find("->") == std::string::npos) {
      current = line.substr(1, line.size() - 2);
      if (std::find(known.begin(), known.end(), current) == known.end()) {
        line_error(number, "unknown section [" + current + "]");
      }
      if (sections.contains(current)) line_error(number, "repeated section [" + current + "]");
      sections[current];
      continue;
    }
    if (current.empty()) line_error(number, "record outside any section");
    sections[current].push_back(Line{number, line});
  }
  return sections;
}

GraphPtr section_graph(const Sections& sections, const std::string& name, const GraphLoader& load) {
  auto it = sections.find(name);
  if (it == sections.end() || it->second.size() != 1) {
    fail(ErrorKind::Parse, "section [" + name + "] must name exactly one graph file");
  }
  try {
    return load(it->second.front().text);
  } catch (const Error& e) {
    line_error(it->second.front().number, e.what());
  }
}

std::pair<std::string, std::string> key_value(const Line& line, const std::string& sep) {
  auto pos = line.text.find(sep);
  if (pos == std::string::npos) line_error(line.number, "expected '" + sep + "'");
  return {trim(std::string_view(line.text).substr(0, pos)),
          trim(std::string_view(line.text).substr(pos + sep.size()))};
}

GeneratorImages parse_images(const std::vector<Line>& lines, const Graph& domain,
                             const GraphPtr& codomain, Ring ring) {
  GeneratorImages images;
  for (const Line& line : lines) {
    auto [lhs, rhs] = key_value(line, "=");
    std::istringstream words(lhs);
    std::string kind;
    std::string id;
    std::string extra;
    words >> kind >> id;
    if (kind.empty() || id.empty() || (words >> extra)) {
      line_error(line.number, "expected 'p <vertex>', 's <edge>' or 't <edge>' before '='");
    }
    Element value(codomain, ring);
    try {
      value = parse_element(codomain, ring, rhs);
    } catch (const Error& e) {
      line_error(line.number, e.what());
    }
    bool fresh = false;
    if (kind == "p") {
      auto v = domain.find_vertex(id);
      if (!v) line_error(line.number, "unknown vertex '" + id + "'");
      fresh = images.vertex.emplace(*v, value).second;
    } else if (kind == "s" || kind == "t") {
      auto e = domain.find_edge(id);
      if (!e) line_error(line.number, "unknown edge '" + id + "'");
      fresh = (kind == "s" ? images.edge : images.ghost).emplace(*e, value).second;
    } else {
      line_error(line.number, "unknown generator kind '" + kind + "'");
    }
    if (!fresh) line_error(line.number, "generator given twice");
  }
  return images;
}

std::string read_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Resolves graph names relative to `file` and loads each distinct file once.
GraphLoader relative_loader(const std::string& file) {
  auto base = std::filesystem::path(file).parent_path();
  auto cache = std::make_shared<std::map<std::string, GraphPtr>>();
  return [base, cache](const std::string& name) {
    std::filesystem::path p(name);
    if (p.is_relative()) p = base / p;
    std::string key = std::filesystem::weakly_canonical(p).string();
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    GraphPtr g = load_graph(p.string());
    cache->emplace(key, g);
    return g;
  };
}

std::string format_images(const GeneratorImages& images, const Graph& domain) {
  std::string out;
  for (const auto& [v, value] : images.vertex) {
    out += "p " + domain.vertex_name(v) + " = " + format_element(value) + "\n";
  }
  for (const auto& [e, value] : images.edge) {
    out += "s " + domain.edge_name(e) + " = " + format_element(value) + "\n";
  }
  for (const auto& [e, value] : images.ghost) {
    out += "t " + domain.edge_name(e) + " = " + format_element(value) + "\n";
  }
  return out;
}

}  // namespace

IsoSpec parse_iso_spec(std::string_view text, const GraphLoader& load) {
  Sections sections = split_sections(text, {"source", "target", "twist", "images", "inverse"});
  IsoSpec spec;
  spec.source = section_graph(sections, "source", load);
  spec.target = section_graph(sections, "target", load);
  for (const Line& line : sections["twist"]) {
    auto [key, value] = key_value(line, "=");
    if (key == "ring") {
      if (value == "identity") {
        spec.twist = Twist::Identity;
      } else if (value == "conjugation") {
        spec.twist = Twist::Conjugation;
      } else {
        line_error(line.number, "ring twist must be identity or conjugation");
      }
    } else if (key == "coefficients") {
      if (value == "int") {
        spec.ring = Ring::Integer;
      } else if (value == "gauss") {
        spec.ring = Ring::Gaussian;
      } else {
        line_error(line.number, "coefficients must be int or gauss");
      }
    } else {
      line_error(line.number, "unknown twist key '" + key + "'");
    }
  }
  spec.forward = parse_images(sections["images"], *spec.source, spec.target, spec.ring);
  spec.backward = parse_images(sections["inverse"], *spec.target, spec.source, spec.ring);
  return spec;
}

IsoSpec load_iso_spec(const std::string& file) {
  return parse_iso_spec(read_file(file), relative_loader(file));
}

std::string format_iso_spec(const IsoSpec& spec, const std::string& source_file,
                            const std::string& target_file) {
  std::string out = "[source]\n" + source_file + "\n[target]\n" + target_file + "\n";
  out += "[twist]\nring = " + std::string(to_string(spec.twist)) + "\n";
  out += "coefficients = " + std::string(to_string(spec.ring)) + "\n";
  out += "[images]\n" + format_images(spec.forward, *spec.source);
  out += "[inverse]\n" + format_images(spec.backward, *spec.target);
  return out;
}

namespace {

GraphRelabel parse_relabel(const std::vector<Line>& lines, const Graph& source, const Graph& target) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  GraphRelabel relabel{std::vector<VertexId>(source.vertex_count(), unset),
                       std::vector<EdgeId>(source.edge_count(), unset)};
  for (const Line& line : lines) {
    auto [from, to] = key_value(line, "->");
    if (auto v = source.find_vertex(from)) {
      auto w = target.find_vertex(to);
      if (!w) line_error(line.number, "unknown target vertex '" + to + "'");
      relabel.vertex[*v] = *w;
    } else if (auto e = source.find_edge(from)) {
      auto f = target.find_edge(to);
      if (!f) line_error(line.number, "unknown target edge '" + to + "'");
      relabel.edge[*e] = *f;
    } else {
      line_error(line.number, "unknown source id '" + from + "'");
    }
  }
  for (VertexId v = 0; v < source.vertex_count(); ++v) {
    if (relabel.vertex[v] == unset) fail(ErrorKind::Parse, "relabel misses vertex " + source.vertex_name(v));
  }
  for (EdgeId e = 0; e < source.edge_count(); ++e) {
    if (relabel.edge[e] == unset) fail(ErrorKind::Parse, "relabel misses edge " + source.edge_name(e));
  }
  return relabel;
}

CylinderTable parse_table(const std::vector<Line>& lines, const Graph& from, const Graph& to,
                          std::size_t& depth) {
  CylinderTable table;
  for (const Line& line : lines) {
    auto [key, value] = key_value(line, "->");
    try {
      Cylinder c = parse_cylinder(from, key);
      depth = std::max({depth, c.range_path.length(), c.source_path.length()});
      std::vector<Cylinder> image;
      std::size_t start = 0;
      while (start < value.size()) {
        auto close = value.find(']', start);
        if (close == std::string::npos) fail(ErrorKind::Parse, "unterminated '['");
        image.push_back(parse_cylinder(to, std::string_view(value).substr(start, close - start + 1)));
        start = value.find('[', close);
        if (start == std::string::npos) break;
      }
      if (!table.emplace(c, std::move(image)).second) fail(ErrorKind::Parse, "cylinder given twice");
    } catch (const Error& e) {
      line_error(line.number, e.what());
    }
  }
  return table;
}

std::string format_table(const CylinderTable& table, const Graph& from, const Graph& to) {
  std::string out;
  for (const auto& [c, image] : table) {
    out += format_cylinder(from, c) + " ->";
    for (std::size_t i = 0; i < image.size(); ++i) {
      out += (i == 0 ? " " : ", ") + format_cylinder(to, image[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

GroupoidIsoSpec parse_groupoid_iso(std::string_view text, const GraphLoader& load, std::size_t depth) {
  Sections sections =
      split_sections(text, {"source", "target", "relabel", "table", "inverse-table"});
  GraphPtr source = section_graph(sections, "source", load);
  GraphPtr target = section_graph(sections, "target", load);
  if (sections.contains("relabel")) {
    if (sections.contains("table")) fail(ErrorKind::Parse, "give either [relabel] or [table], not both");
    return groupoid_iso_from_relabel(source, target,
                                     parse_relabel(sections["relabel"], *source, *target), depth);
  }
  if (!sections.contains("table") || !sections.contains("inverse-table")) {
    fail(ErrorKind::Parse, "groupoid iso needs [relabel] or both [table] and [inverse-table]");
  }
  GroupoidIsoSpec out;
  out.source = source;
  out.target = target;
  std::size_t forward_depth = 0;
  std::size_t backward_depth = 0;
  out.forward = parse_table(sections["table"], *source, *target, forward_depth);
  out.backward = parse_table(sections["inverse-table"], *target, *source, backward_depth);
  out.depth = std::min(forward_depth, backward_depth);
  return out;
}

GroupoidIsoSpec load_groupoid_iso(const std::string& file, std::size_t depth) {
  return parse_groupoid_iso(read_file(file), relative_loader(file), depth);
}

std::string format_groupoid_iso(const GroupoidIsoSpec& spec, const std::string& source_file,
                                const std::string& target_file) {
  std::string out = "[source]\n" + source_file + "\n[target]\n" + target_file + "\n";
  out += "[table]\n" + format_table(spec.forward, *spec.source, *spec.target);
  out += "[inverse-table]\n" + format_table(spec.backward, *spec.target, *spec.source);
  return out;
}

std::pair<std::string, std::string> graph_file_names(const std::string& file) {
  Sections sections = split_sections(read_file(file), {"source", "target", "twist", "images", "inverse",
                                                       "relabel", "table", "inverse-table"});
  auto name = [&](const std::string& section) {
    auto it = sections.find(section);
    if (it == sections.end() || it->second.size() != 1) {
      fail(ErrorKind::Parse, "section [" + section + "] must name exactly one graph file");
    }
    return it->second.front().text;
  };
  return {name("source"), name("target")};
}

}  // namespace leavitt
