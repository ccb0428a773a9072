#pragma once

// Fundamental-polygon gluing: a 2n-gon whose sides carry an identification
// word becomes a closed surface presented as a regular cell complex. Each side
// is split into three sub-edges (two interior points) and the polygon is coned
// from a center vertex, which keeps every identified cell regular (no loop
// edges, no degenerate 2-cells). Shared by the complex builder and the
// genus-2 test fixture, which also needs the raw-position lookup tables to
// transport polygon symmetries onto the glued complex.

#include <array>
#include <string>
#include <vector>

#include "orbifold/euler.hpp"

namespace orbifold::detail {

struct PolygonSide {
  char letter;
  bool inverse;
};

struct PolygonSurface {
  StratifiedComplex complex;
  int sides = 0;
  // Raw boundary positions 0..3*sides-1: position 3i is corner i, positions
  // 3i+1 and 3i+2 are the interior points of side i, in traversal order.
  std::vector<std::string> point_class;    // raw position -> vertex id
  std::vector<std::string> subedge_class;  // raw position j -> id of edge (j, j+1)

  std::string center() const { return "pz"; }
  std::string spoke(int raw) const { return "ps" + std::to_string(raw); }
  std::string triangle(int raw) const { return "pt" + std::to_string(raw); }
};

// Word for the orientable genus-g surface: a_1 b_1 a_1' b_1' ... (g >= 1).
std::vector<PolygonSide> orientable_word(int genus);
// Word for the non-orientable surface with k crosscaps: a_1 a_1 ... a_k a_k.
std::vector<PolygonSide> crosscap_word(int crosscaps);

PolygonSurface build_polygon_surface(const std::vector<PolygonSide>& word);

// The 2-vertex, 2-edge, 2-face cell structure on the sphere.
StratifiedComplex lune_sphere();

}  // namespace orbifold::detail
