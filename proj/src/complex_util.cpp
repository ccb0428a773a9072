#include "complex_util.hpp"

#include <algorithm>

namespace orbifold::detail {

ComplexView::ComplexView(StratifiedComplex& c) {
  for (Cell& cell : c.cells) by_id[cell.id] = &cell;
  for (Cell& cell : c.cells) {
    if (cell.dim == 2) edges_of_face[cell.id] = cell.faces;
    if (cell.dim == 1) {
      for (const auto& v : cell.faces) edges_at_vertex[v].push_back(cell.id);
    }
  }
}

std::set<std::string> ComplexView::closure_vertices(const std::string& face_id) const {
  std::set<std::string> verts;
  for (const auto& e : edges_of_face.at(face_id)) {
    for (const auto& v : by_id.at(e)->faces) verts.insert(v);
  }
  return verts;
}

std::vector<std::vector<std::string>> mirror_circles(StratifiedComplex& c) {
  ComplexView view(c);
  std::map<std::string, std::vector<std::string>> mirror_adj;
  for (const auto& [v, edges] : view.edges_at_vertex) {
    for (const auto& e : edges) {
      if (view.by_id.at(e)->local_order != 2) continue;
      for (const auto& w : view.by_id.at(e)->faces) {
        if (w != v) mirror_adj[v].push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> circles;
  std::set<std::string> visited;
  for (const auto& [v, nb] : mirror_adj) {
    if (visited.count(v)) continue;
    std::vector<std::string> cycle{v};
    visited.insert(v);
    std::string prev = v;
    std::string cur = std::min(nb[0], nb[1]);
    while (cur != v) {
      cycle.push_back(cur);
      visited.insert(cur);
      const auto& next_nb = mirror_adj.at(cur);
      std::string next = (next_nb[0] == prev) ? next_nb[1] : next_nb[0];
      prev = cur;
      cur = next;
    }
    circles.push_back(std::move(cycle));
  }
  std::sort(circles.begin(), circles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return circles;
}

}  // namespace orbifold::detail
