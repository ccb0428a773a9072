#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbifold/euler.hpp"

namespace orbifold::detail {

// Id-indexed view over a StratifiedComplex. Pointers stay valid while the
// underlying cell vector is not resized.
struct ComplexView {
  std::map<std::string, Cell*> by_id;
  std::map<std::string, std::vector<std::string>> edges_of_face;
  std::map<std::string, std::vector<std::string>> edges_at_vertex;

  explicit ComplexView(StratifiedComplex& c);

  std::set<std::string> closure_vertices(const std::string& face_id) const;
};

// Mirror (order-2) edge cycles as vertex id sequences. Each cycle starts at
// its minimal vertex and walks towards the smaller neighbour id; cycles are
// sorted by starting vertex, so the output is deterministic.
std::vector<std::vector<std::string>> mirror_circles(StratifiedComplex& c);

}  // namespace orbifold::detail
