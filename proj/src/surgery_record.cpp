#include <cctype>
#include <sstream>
#include <variant>

#include "pm/moves.hpp"

namespace pm {

namespace {

struct Node;
using NodeList = std::vector<Node>;
struct Node : std::variant<std::string, NodeList> {
  using std::variant<std::string, NodeList>::variant;
  bool is_atom() const { return index() == 0; }
  const std::string& atom() const { return std::get<0>(*this); }
  const NodeList& list() const { return std::get<1>(*this); }
};

Node parse_node(const std::string& text, size_t& pos) {
  while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  if (pos >= text.size()) fail(ErrorCode::ParseError, "unexpected end of record");
  if (text[pos] == '(') {
    ++pos;
    NodeList items;
    while (true) {
      while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
      if (pos >= text.size()) fail(ErrorCode::ParseError, "unbalanced '(' in record");
      if (text[pos] == ')') {
        ++pos;
        return items;
      }
      items.push_back(parse_node(text, pos));
    }
  }
  size_t start = pos;
  while (pos < text.size() && !std::isspace((unsigned char)text[pos]) && text[pos] != '(' &&
         text[pos] != ')')
    ++pos;
  return text.substr(start, pos - start);
}

std::vector<std::string> atoms(const NodeList& list, size_t from) {
  std::vector<std::string> out;
  for (size_t i = from; i < list.size(); ++i) {
    if (!list[i].is_atom()) fail(ErrorCode::ParseError, "expected token");
    out.push_back(list[i].atom());
  }
  return out;
}

const NodeList* find_section(const NodeList& rec, const std::string& name) {
  for (size_t i = 1; i < rec.size(); ++i) {
    if (rec[i].is_atom()) continue;
    const NodeList& sec = rec[i].list();
    if (!sec.empty() && sec[0].is_atom() && sec[0].atom() == name) return &sec;
  }
  return nullptr;
}

const NodeList& need_section(const NodeList& rec, const std::string& name) {
  const NodeList* sec = find_section(rec, name);
  if (!sec) fail(ErrorCode::ParseError, "record is missing (" + name + " ...)");
  return *sec;
}

std::vector<std::pair<std::string, std::string>> parse_map(const NodeList& sec) {
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 1; i < sec.size(); ++i) {
    if (sec[i].is_atom() || sec[i].list().size() != 2)
      fail(ErrorCode::ParseError, "map entries are pairs");
    out.emplace_back(sec[i].list()[0].atom(), sec[i].list()[1].atom());
  }
  return out;
}

std::vector<std::vector<std::string>> parse_facet_lists(const NodeList& sec) {
  std::vector<std::vector<std::string>> out;
  for (size_t i = 1; i < sec.size(); ++i) {
    if (sec[i].is_atom()) fail(ErrorCode::ParseError, "expected a facet list");
    out.push_back(atoms(sec[i].list(), 0));
  }
  return out;
}

void emit_tokens(std::ostringstream& out, const std::string& name,
                 const std::vector<std::string>& toks) {
  out << " (" << name;
  for (const auto& t : toks) out << ' ' << t;
  out << ')';
}

void emit_facet_lists(std::ostringstream& out, const std::string& name,
                      const std::vector<std::vector<std::string>>& lists) {
  out << " (" << name;
  for (const auto& f : lists) {
    out << " (";
    for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << ')';
  }
  out << ')';
}

}  // namespace

std::string SurgeryRecord::to_text() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Star:
      out << "(star";
      emit_tokens(out, "facet", facet);
      out << " (new " << vertex << ')';
      break;
    case Kind::Collapse:
      out << "(collapse (vertex " << vertex << ')';
      emit_tokens(out, "facet", facet);
      break;
    case Kind::HandleAdd:
      out << "(handle-add (map";
      for (const auto& [a, b] : map) out << " (" << a << ' ' << b << ')';
      out << ')';
      break;
    case Kind::HandleDelete:
      out << "(handle-delete";
      emit_tokens(out, "set", set);
      out << " (map";
      for (const auto& [a, b] : map) out << " (" << a << ' ' << b << ')';
      out << ')';
      break;
    case Kind::ConnectedSum:
      out << "(consum";
      emit_tokens(out, "facet", facet);
      emit_tokens(out, "facet2", facet2);
      out << " (map";
      for (const auto& [a, b] : map) out << " (" << a << ' ' << b << ')';
      out << ')';
      emit_facet_lists(out, "facets2", facets2);
      break;
    case Kind::Gbm:
      out << "(gbm";
      emit_facet_lists(out, "b1", ball1);
      emit_facet_lists(out, "b2", ball2);
      if (ball_status_asserted) out << " (balls asserted)";
      break;
  }
  out << ')';
  return out.str();
}

SurgeryRecord SurgeryRecord::from_text(const std::string& line) {
  size_t pos = 0;
  Node root = parse_node(line, pos);
  if (root.is_atom() || root.list().empty() || !root.list()[0].is_atom())
    fail(ErrorCode::ParseError, "record must be a tagged list");
  const NodeList& rec = root.list();
  const std::string& tag = rec[0].atom();

  SurgeryRecord r;
  if (tag == "star") {
    r.kind = Kind::Star;
    r.facet = atoms(need_section(rec, "facet"), 1);
    r.vertex = atoms(need_section(rec, "new"), 1).at(0);
  } else if (tag == "collapse") {
    r.kind = Kind::Collapse;
    r.vertex = atoms(need_section(rec, "vertex"), 1).at(0);
    if (const NodeList* f = find_section(rec, "facet")) r.facet = atoms(*f, 1);
  } else if (tag == "handle-add") {
    r.kind = Kind::HandleAdd;
    r.map = parse_map(need_section(rec, "map"));
  } else if (tag == "handle-delete") {
    r.kind = Kind::HandleDelete;
    r.set = atoms(need_section(rec, "set"), 1);
    if (const NodeList* m = find_section(rec, "map")) r.map = parse_map(*m);
  } else if (tag == "consum") {
    r.kind = Kind::ConnectedSum;
    r.facet = atoms(need_section(rec, "facet"), 1);
    r.facet2 = atoms(need_section(rec, "facet2"), 1);
    r.map = parse_map(need_section(rec, "map"));
    r.facets2 = parse_facet_lists(need_section(rec, "facets2"));
  } else if (tag == "gbm") {
    r.kind = Kind::Gbm;
    r.ball1 = parse_facet_lists(need_section(rec, "b1"));
    r.ball2 = parse_facet_lists(need_section(rec, "b2"));
    r.ball_status_asserted = find_section(rec, "balls") != nullptr;
  } else {
    fail(ErrorCode::ParseError, "unknown record tag '" + tag + "'");
  }
  return r;
}

Complex SurgeryRecord::apply(const Complex& input) const {
  switch (kind) {
    case Kind::Star:
      return star_vertex(input, input.face_from_tokens(facet), vertex);
    case Kind::Collapse:
      return collapse_vertex(input, input.require_vertex(vertex));
    case Kind::HandleAdd: {
      Bijection psi{map};
      return handle_add(input, psi);
    }
    case Kind::HandleDelete:
      return handle_delete(input, input.face_from_tokens(set));
    case Kind::ConnectedSum: {
      Complex x2 = Complex::from_facet_tokens(facets2);
      return connected_sum(input, input.face_from_tokens(facet), x2,
                           x2.face_from_tokens(facet2), map);
    }
    case Kind::Gbm:
      return gbm(input, Complex::from_facet_tokens(ball1), Complex::from_facet_tokens(ball2));
  }
  fail(ErrorCode::ParseError, "unreachable record kind");
}

SurgeryRecord SurgeryRecord::inverse() const {
  SurgeryRecord r;
  switch (kind) {
    case Kind::Star:
      r.kind = Kind::Collapse;
      r.vertex = vertex;
      r.facet = facet;
      return r;
    case Kind::Collapse:
      r.kind = Kind::Star;
      r.facet = facet;
      r.vertex = vertex;
      return r;
    case Kind::HandleAdd:
      r.kind = Kind::HandleDelete;
      for (const auto& [a, b] : map) r.set.push_back(a);
      return r;
    case Kind::HandleDelete:
      r.kind = Kind::HandleAdd;
      r.map = map;
      return r;
    case Kind::ConnectedSum:
      r.kind = Kind::HandleDelete;
      r.set = facet;
      return r;
    case Kind::Gbm:
      r.kind = Kind::Gbm;
      r.ball1 = ball2;
      r.ball2 = ball1;
      r.ball_status_asserted = ball_status_asserted;
      return r;
  }
  fail(ErrorCode::ParseError, "unreachable record kind");
}

}  // namespace pm
