#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "leavitt/harness.hpp"
#include "leavitt/iso.hpp"

// Section-based files for iso specs and groupoid isos. Lines are
// `key = value` or plain records; `#` starts a comment. Graph files named in
// [source] and [target] are resolved relative to the file that names them.

namespace leavitt {

using GraphLoader = std::function<GraphPtr(const std::string&)>;

//! Iso spec:
//!   [source] / [target]   one graph file name each
//!   [twist]               ring = identity|conjugation, coefficients = int|gauss
//!   [images] / [inverse]  p <v> = <element>, s <e> = <element>, t <e> = <element>
//! Throws Parse with the offending line.
IsoSpec parse_iso_spec(std::string_view text, const GraphLoader& load);
//! When source and target name the same file they share one graph.
IsoSpec load_iso_spec(const std::string& file);
std::string format_iso_spec(const IsoSpec& spec, const std::string& source_file,
                            const std::string& target_file);

//! Groupoid iso:
//!   [source] / [target]   as above
//!   [relabel]             <old> -> <new> for every vertex and edge
//! or
//!   [table] / [inverse-table]   [mu|nu] -> [c1], [c2], ...
//! A relabel is tabulated to `depth`; a table keeps its own depth.
GroupoidIsoSpec parse_groupoid_iso(std::string_view text, const GraphLoader& load, std::size_t depth);
GroupoidIsoSpec load_groupoid_iso(const std::string& file, std::size_t depth);
//! The [source] and [target] entries of either kind of file, as written.
std::pair<std::string, std::string> graph_file_names(const std::string& file);

//! The [table] form, which parse_groupoid_iso reads back.
std::string format_groupoid_iso(const GroupoidIsoSpec& spec, const std::string& source_file,
                                const std::string& target_file);

}  // namespace leavitt
