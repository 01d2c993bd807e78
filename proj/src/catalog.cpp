#include "pm/catalog.hpp"

#include <algorithm>
#include <map>

namespace pm {

Complex standard_sphere(int d) {
  if (d < 0) fail(ErrorCode::ArgumentOutOfRange, "dimension must be >= 0");
  std::vector<std::vector<std::string>> facets;
  for (int skip = d + 2; skip >= 1; --skip) {  // tokens appear in order 1,2,...
    std::vector<std::string> facet;
    for (int v = 1; v <= d + 2; ++v)
      if (v != skip) facet.push_back(std::to_string(v));
    facets.push_back(std::move(facet));
  }
  return Complex::from_facet_tokens(facets);
}

Complex standard_ball(int d) {
  if (d < 0) fail(ErrorCode::ArgumentOutOfRange, "dimension must be >= 0");
  std::vector<std::string> facet;
  for (int v = 1; v <= d + 1; ++v) facet.push_back(std::to_string(v));
  return Complex::from_facet_tokens({facet});
}

Complex cycle(int n) {
  if (n < 3) fail(ErrorCode::ArgumentOutOfRange, "a cycle needs at least 3 vertices");
  std::vector<std::vector<std::string>> facets;
  for (int v = 1; v <= n; ++v)
    facets.push_back({std::to_string(v), std::to_string(v % n + 1)});
  return Complex::from_facet_tokens(facets);
}

Complex icosahedron() {
  // Apex 1, upper ring 2..6, apex 7 antipodal to 1, lower ring placed so that
  // the antipodal map is v <-> v+6 (mod 12 on tokens 1..12).
  static const int faces[20][3] = {
      {1, 2, 3},  {1, 3, 4},  {1, 4, 5},   {1, 5, 6},  {1, 6, 2},
      {2, 3, 11}, {3, 4, 12}, {4, 5, 8},   {5, 6, 9},  {6, 2, 10},
      {11, 12, 3}, {12, 8, 4}, {8, 9, 5},  {9, 10, 6}, {10, 11, 2},
      {7, 11, 12}, {7, 12, 8}, {7, 8, 9},  {7, 9, 10}, {7, 10, 11},
  };
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : faces)
    facets.push_back({std::to_string(f[0]), std::to_string(f[1]), std::to_string(f[2])});
  return Complex::from_facet_tokens(facets);
}

Complex rp2_6() {
  // Quotient of the icosahedron by the antipodal involution v <-> v+6; each
  // triangle appears twice, once per preimage.
  Complex ico = icosahedron();
  std::map<std::vector<std::string>, int> seen;
  std::vector<std::vector<std::string>> facets;
  for (const Bits& f : ico.facets()) {
    std::vector<std::string> image;
    f.for_each([&](int v) {
      int t = std::stoi(ico.token(v));
      image.push_back(std::to_string((t - 1) % 6 + 1));
    });
    std::sort(image.begin(), image.end());
    if (image[0] == image[1] || image[1] == image[2])
      fail(ErrorCode::VertexCollision, "degenerate image facet");
    if (seen[image]++ == 0) facets.push_back(image);
  }
  return Complex::from_facet_tokens(facets);
}

Complex octahedron() {
  Complex s0a = Complex::from_facet_tokens({{"1"}, {"2"}});
  Complex s0b = Complex::from_facet_tokens({{"3"}, {"4"}});
  Complex s0c = Complex::from_facet_tokens({{"5"}, {"6"}});
  return Complex::join(Complex::join(s0a, s0b), s0c);
}

Complex torus_7() {
  std::vector<std::vector<std::string>> facets;
  for (int i = 1; i <= 7; ++i) {
    auto tok = [](int v) { return std::to_string((v - 1) % 7 + 1); };
    facets.push_back({tok(i), tok(i + 1), tok(i + 3)});
    facets.push_back({tok(i), tok(i + 2), tok(i + 3)});
  }
  return Complex::from_facet_tokens(facets);
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> list;
    auto add = [&](std::string name, std::string desc, std::function<Complex()> build,
                   std::vector<long long> f, bool normal, std::optional<bool> orientable,
                   long long euler) {
      list.push_back({std::move(name), std::move(desc), std::move(build), FaceVector(std::move(f)),
                      normal, orientable, euler});
    };
    add("s1_3", "3-cycle, smallest circle", [] { return standard_sphere(1); }, {3, 3}, true,
        std::nullopt, 0);
    add("s2_4", "boundary of the tetrahedron", [] { return standard_sphere(2); }, {4, 6, 4},
        true, true, 2);
    add("s3_5", "boundary of the 4-simplex", [] { return standard_sphere(3); }, {5, 10, 10, 5},
        true, std::nullopt, 0);
    add("b2_3", "solid triangle", [] { return standard_ball(2); }, {3, 3, 1}, false,
        std::nullopt, 1);
    add("b3_4", "solid tetrahedron", [] { return standard_ball(3); }, {4, 6, 4, 1}, false,
        std::nullopt, 1);
    add("cycle_9", "9-gon", [] { return cycle(9); }, {9, 9}, true, std::nullopt, 0);
    add("octahedron", "threefold join of point pairs", octahedron, {6, 12, 8}, true, true, 2);
    add("icosahedron", "12-vertex triangulated sphere", icosahedron, {12, 30, 20}, true, true,
        2);
    add("rp2_6", "6-vertex projective plane (antipodal quotient)", rp2_6, {6, 15, 10}, true,
        false, 1);
    add("torus_7", "7-vertex 2-neighbourly torus", torus_7, {7, 21, 14}, true, true, 0);
    return list;
  }();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace pm
