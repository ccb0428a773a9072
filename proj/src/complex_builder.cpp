#include <algorithm>
#include <map>
#include <set>

#include "complex_util.hpp"
#include "orbifold/error.hpp"
#include "orbifold/euler.hpp"
#include "polygon_surface.hpp"

namespace orbifold {

namespace {

using detail::ComplexView;
using detail::mirror_circles;

// Greedy selection of `count` 2-cells with pairwise disjoint closures; the
// deleted cells become the silvered circles, so they must not touch.
std::vector<std::string> pick_disjoint_faces(StratifiedComplex& c, int count) {
  ComplexView view(c);
  if (static_cast<int>(view.edges_of_face.size()) - count < 1) return {};
  std::vector<std::string> picked;
  std::set<std::string> used_vertices;
  for (const auto& [fid, edges] : view.edges_of_face) {
    std::set<std::string> verts = view.closure_vertices(fid);
    bool clash = std::any_of(verts.begin(), verts.end(),
                             [&](const std::string& v) { return used_vertices.count(v) > 0; });
    if (clash) continue;
    picked.push_back(fid);
    used_vertices.insert(verts.begin(), verts.end());
    if (static_cast<int>(picked.size()) == count) break;
  }
  if (static_cast<int>(picked.size()) < count) return {};
  return picked;
}

void delete_faces_as_mirrors(StratifiedComplex& c, const std::vector<std::string>& faces) {
  ComplexView view(c);
  std::set<std::string> doomed(faces.begin(), faces.end());
  for (const auto& fid : faces) {
    for (const auto& e : view.edges_of_face.at(fid)) {
      view.by_id.at(e)->local_order = 2;
      for (const auto& v : view.by_id.at(e)->faces) view.by_id.at(v)->local_order = 2;
    }
  }
  std::erase_if(c.cells, [&](const Cell& cell) { return doomed.count(cell.id) > 0; });
}

// Order-1 vertices that touch no mirror edge, sorted; candidates for cones.
std::vector<std::string> markable_interior_vertices(StratifiedComplex& c) {
  ComplexView view(c);
  std::vector<std::string> out;
  for (const Cell& cell : c.cells) {
    if (cell.dim != 0 || cell.local_order != 1) continue;
    bool on_mirror = false;
    auto it = view.edges_at_vertex.find(cell.id);
    if (it != view.edges_at_vertex.end()) {
      for (const auto& e : it->second) {
        if (view.by_id.at(e)->local_order == 2) on_mirror = true;
      }
    }
    if (!on_mirror) out.push_back(cell.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StratifiedComplex build_stratified_complex(const Signature& sig) {
  Signature canon = make_signature(sig.orientable, sig.genus, sig.cone_points, sig.boundary);

  StratifiedComplex c;
  if (canon.orientable && canon.genus == 0) {
    c = detail::lune_sphere();
  } else {
    auto word = canon.orientable ? detail::orientable_word(canon.genus)
                                 : detail::crosscap_word(canon.genus);
    c = detail::build_polygon_surface(word).complex;
  }

  const int b = static_cast<int>(canon.boundary.size());
  const int cones = static_cast<int>(canon.cone_points.size());

  if (b > 0) {
    std::vector<std::string> picked;
    for (int round = 0; round < 10 && picked.empty(); ++round) {
      picked = pick_disjoint_faces(c, b);
      if (picked.empty()) c = barycentric_subdivide(c);
    }
    if (picked.empty()) {
      throw Error(ErrorCode::IncompatibleComplex, "could not place disjoint mirror circles");
    }
    delete_faces_as_mirrors(c, picked);
  }

  std::size_t max_corners = 0;
  for (const auto& comp : canon.boundary) max_corners = std::max(max_corners, comp.corners.size());
  for (int round = 0; round < 10; ++round) {
    auto circles = mirror_circles(c);
    bool circles_ok = true;
    for (const auto& cyc : circles) circles_ok &= cyc.size() >= max_corners;
    if (circles_ok && markable_interior_vertices(c).size() >= static_cast<std::size_t>(cones)) {
      break;
    }
    c = barycentric_subdivide(c);
  }

  ComplexView view(c);
  auto circles = mirror_circles(c);
  if (static_cast<int>(circles.size()) != b) {
    throw Error(ErrorCode::IncompatibleComplex, "mirror circle count mismatch");
  }
  for (int i = 0; i < b; ++i) {
    const auto& corners = canon.boundary[i].corners;
    for (std::size_t j = 0; j < corners.size(); ++j) {
      view.by_id.at(circles[i][j])->local_order = 2 * corners[j];
    }
  }
  auto interior = markable_interior_vertices(c);
  for (int i = 0; i < cones; ++i) {
    view.by_id.at(interior[i])->local_order = canon.cone_points[i];
  }

  validate_complex(c);
  return c;
}

}  // namespace orbifold
