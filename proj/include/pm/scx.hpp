#pragma once

#include <iosfwd>
#include <string>

#include "pm/complex.hpp"

namespace pm {

/// SCX text format: UTF-8 lines, '#' starts a comment line, every other
/// non-empty line is one facet as whitespace-separated vertex tokens.
Complex read_scx(std::istream& in);
Complex read_scx_string(const std::string& text);
Complex read_scx_file(const std::string& path);

/// Canonical writer: tokens within a line sorted numerically when every token
/// of the complex is a decimal integer, lexicographically otherwise; facet
/// lines sorted as strings. Reading and rewriting a canonical file is the
/// identity.
std::string write_scx(const Complex& c);
void write_scx_file(const Complex& c, const std::string& path);

/// Canonical token order used by the writer (numeric when all tokens of the
/// complex are decimal, else lexicographic).
bool token_order_less(const std::string& a, const std::string& b, bool numeric);

}  // namespace pm
