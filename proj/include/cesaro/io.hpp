#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cesaro/local_rule.hpp"
#include "cesaro/measure.hpp"
#include "cesaro/shift_space.hpp"

namespace cesaro {

// Text-format parsers.  `#` starts a comment, blank lines are skipped, and
// every diagnostic carries a 1-based line number.  Repeating a header or an
// identical entry is an error; wildcard rule lines may overlap, later lines
// winning, but an exact duplicate pattern is dead weight and rejected.
ShiftSpace parse_space(const std::string& text);
MarkovMeasure parse_measure(const std::string& text);
LocalRule parse_rule(const std::string& text);
LocalRule parse_rule(const std::string& text, const ShiftSpace& domain);

// Inverse emitters; parsing an emitted string reproduces the value.
std::string emit_space(const ShiftSpace& space);
std::string emit_measure(const MarkovMeasure& mu);
std::string emit_rule(const LocalRule& rule);

// File variants; read failures and parse errors name the path.
ShiftSpace load_space(const std::string& path);
MarkovMeasure load_measure(const std::string& path);
LocalRule load_rule(const std::string& path);
LocalRule load_rule(const std::string& path, const ShiftSpace& domain);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Canonical exact form: "p" or "p/q", reduced, q > 0.
std::string rational_str(const Rational& q);

// FNV-1a 64, for the input digests stamped into reports.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

}  // namespace cesaro
