#pragma once

#include <doctest.h>

#include <string>

#include "leavitt/corpus.hpp"
#include "leavitt/error.hpp"
#include "leavitt/text.hpp"

// Shorthands for literals on the reference graphs.

namespace testing {

using namespace leavitt;

inline const GraphPtr& graph(const std::string& name) {
  static const GraphPtr loop = reference_graph("loop");
  static const GraphPtr two = reference_graph("2loop");
  static const GraphPtr cycle = reference_graph("cycle2");
  static const GraphPtr entry = reference_graph("cycle2e");
  if (name == "loop") return loop;
  if (name == "2loop") return two;
  if (name == "cycle2") return cycle;
  return entry;
}

inline Element el(const std::string& g, const std::string& text, Ring ring = Ring::Integer) {
  return parse_element(graph(g), ring, text);
}
inline Lasso ls(const std::string& g, const std::string& text) { return parse_lasso(*graph(g), text); }
inline Path pa(const std::string& g, const std::string& text) { return parse_path(*graph(g), text); }
inline Arrow ar(const std::string& g, const std::string& text) { return parse_arrow(*graph(g), text); }
inline std::string fmt(const Element& f) { return format_element(f); }
inline std::string fmt(const std::string& g, const Lasso& x) { return format_lasso(*graph(g), x); }
inline std::string fmt(const std::string& g, const Arrow& a) { return format_arrow(*graph(g), a); }

template <class F>
ErrorKind error_kind(F&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Invalid;
}

}  // namespace testing
