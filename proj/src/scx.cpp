#include "pm/scx.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pm {

namespace {

bool is_decimal(const std::string& tok) {
  if (tok.empty()) return false;
  return std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

bool token_order_less(const std::string& a, const std::string& b, bool numeric) {
  if (numeric) {
    // Decimal comparison without overflow: shorter digit strings are smaller,
    // equal lengths compare as strings.
    if (a.size() != b.size()) return a.size() < b.size();
  }
  return a < b;
}

Complex read_scx(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream split(line);
    std::vector<std::string> toks;
    std::string tok;
    while (split >> tok) toks.push_back(tok);
    facets.push_back(std::move(toks));
  }
  if (facets.empty()) fail(ErrorCode::ParseError, "no facet lines in input");
  return Complex::from_facet_tokens(facets);
}

Complex read_scx_string(const std::string& text) {
  std::istringstream in(text);
  return read_scx(in);
}

Complex read_scx_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_scx(in);
}

std::string write_scx(const Complex& c) {
  bool numeric = !c.tokens().empty() &&
                 std::all_of(c.tokens().begin(), c.tokens().end(), is_decimal);
  std::vector<std::string> lines;
  lines.reserve(c.facets().size());
  for (const Bits& facet : c.facets()) {
    if (facet.empty()) continue;  // the {empty face} complex renders as no lines
    std::vector<std::string> toks = c.face_tokens(facet);
    std::sort(toks.begin(), toks.end(),
              [&](const std::string& a, const std::string& b) { return token_order_less(a, b, numeric); });
    std::string line;
    for (size_t i = 0; i < toks.size(); ++i) {
      if (i) line += ' ';
      line += toks[i];
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

void write_scx_file(const Complex& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << write_scx(c);
}

}  // namespace pm
