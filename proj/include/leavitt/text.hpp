#pragma once

#include <string>
#include <string_view>

#include "leavitt/element.hpp"
#include "leavitt/graph.hpp"

// Text forms shared by the CLI and the file formats. Every format_* output
// is accepted by the matching parse_* function.

namespace leavitt {

//! Line-oriented graph format:
//!   vertex <id>
//!   edge <id> range=<v> source=<v>
//! with `#` comments. The result is validated (no sources).
GraphPtr parse_graph(std::string_view text);
GraphPtr load_graph(const std::string& file);
std::string format_graph(const Graph& graph);

//! `v` for a vertex path, `e1.e2.e3` otherwise.
std::string format_path(const Graph& graph, const Path& path);
Path parse_path(const Graph& graph, std::string_view text);

//! `a.b(b)^inf`; an empty prefix prints as `(b)^inf`. The parser also takes
//! undotted single-letter runs such as `ab(b)^inf` when every letter is an
//! edge id.
std::string format_lasso(const Graph& graph, const Lasso& x);
Lasso parse_lasso(const Graph& graph, std::string_view text);

//! `(x, k, y)`.
std::string format_arrow(const Graph& graph, const Arrow& arrow);
Arrow parse_arrow(const Graph& graph, std::string_view text);

//! `[mu|nu]`, or `[mu]` for a unit cylinder.
std::string format_cylinder(const Graph& graph, const Cylinder& cylinder);
Cylinder parse_cylinder(const Graph& graph, std::string_view text);

//! `r*[mu|nu]` terms joined by ` + `, sorted by (nu, mu); `0` for zero.
//! The parser also takes `[mu]` for `[mu|mu]` and a bare `[..]` for
//! coefficient 1.
std::string format_element(const Element& f);
Element parse_element(GraphPtr graph, Ring ring, std::string_view text);

std::string trim(std::string_view text);

}  // namespace leavitt
