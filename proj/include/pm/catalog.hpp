#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pm/complex.hpp"
#include "pm/face_vector.hpp"

namespace pm {

/// Boundary complex of a (d+1)-simplex: all proper subsets of {1,...,d+2}.
Complex standard_sphere(int d);
/// A single d-simplex with all its faces: subsets of {1,...,d+1}.
Complex standard_ball(int d);
/// The n-gon 1-2-...-n-1.
Complex cycle(int n);

/// 12-vertex boundary complex of the icosahedron, labelled so that v and v+6
/// are antipodal.
Complex icosahedron();
/// 6-vertex projective plane, built as the antipodal quotient of the
/// icosahedron.
Complex rp2_6();
/// Octahedron: threefold join of 2-point spheres.
Complex octahedron();
/// 7-vertex 2-neighbourly torus.
Complex torus_7();

struct CatalogEntry {
  std::string name;
  std::string description;
  std::function<Complex()> build;
  FaceVector expected_f;
  bool expected_normal_pm = false;
  std::optional<bool> expected_orientable;  // dimension 2 entries
  long long expected_euler = 0;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace pm
