#include "orbifold/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "complex_util.hpp"
#include "orbifold/error.hpp"

namespace orbifold {

namespace {

[[noreturn]] void not_a_surface(const std::string& why) {
  throw Error(ErrorCode::NotASurface, why);
}

struct SurfaceIndex {
  std::map<std::string, int> vertex_index;
  std::vector<std::array<int, 2>> edges;        // sorted pairs
  std::map<std::array<int, 2>, int> edge_index;
  std::vector<std::array<int, 3>> triangles;    // sorted triples
  std::map<std::array<int, 3>, int> triangle_index;

  explicit SurfaceIndex(const SimplicialSurface& s) {
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      if (!vertex_index.emplace(s.vertices[i], static_cast<int>(i)).second) {
        not_a_surface("duplicate vertex id '" + s.vertices[i] + "'");
      }
    }
    std::set<std::array<int, 3>> tris;
    for (const auto& t : s.triangles) {
      std::array<int, 3> idx;
      for (int k = 0; k < 3; ++k) {
        auto it = vertex_index.find(t[k]);
        if (it == vertex_index.end()) not_a_surface("triangle names missing vertex '" + t[k] + "'");
        idx[k] = it->second;
      }
      std::sort(idx.begin(), idx.end());
      if (idx[0] == idx[1] || idx[1] == idx[2]) not_a_surface("degenerate triangle");
      if (!tris.insert(idx).second) not_a_surface("duplicate triangle");
    }
    for (const auto& t : tris) {
      triangle_index.emplace(t, static_cast<int>(triangles.size()));
      triangles.push_back(t);
    }
    std::map<std::array<int, 2>, int> edge_count;
    for (const auto& t : triangles) {
      for (auto [a, b] : {std::pair{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}) {
        edge_count[{a, b}]++;
      }
    }
    for (const auto& [e, count] : edge_count) {
      if (count != 2) {
        not_a_surface("edge in " + std::to_string(count) + " triangles (surface needs 2)");
      }
      edge_index.emplace(e, static_cast<int>(edges.size()));
      edges.push_back(e);
    }
  }
};

void check_links_and_connectivity(const SimplicialSurface& s, const SurfaceIndex& idx) {
  const int nv = static_cast<int>(s.vertices.size());
  std::vector<std::map<int, std::vector<int>>> link(nv);
  for (const auto& t : idx.triangles) {
    link[t[0]][t[1]].push_back(t[2]);
    link[t[0]][t[2]].push_back(t[1]);
    link[t[1]][t[0]].push_back(t[2]);
    link[t[1]][t[2]].push_back(t[0]);
    link[t[2]][t[0]].push_back(t[1]);
    link[t[2]][t[1]].push_back(t[0]);
  }
  for (int v = 0; v < nv; ++v) {
    if (link[v].empty()) not_a_surface("isolated vertex '" + s.vertices[v] + "'");
    for (const auto& [w, nb] : link[v]) {
      if (nb.size() != 2) not_a_surface("vertex link not a cycle at '" + s.vertices[v] + "'");
    }
    // A single cycle visits all link vertices.
    std::set<int> seen;
    int start = link[v].begin()->first;
    int prev = start, cur = link[v].begin()->second[0];
    seen.insert(start);
    while (cur != start) {
      if (!seen.insert(cur).second) not_a_surface("vertex link self-intersects");
      const auto& nb = link[v].at(cur);
      int next = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (seen.size() != link[v].size()) {
      not_a_surface("vertex link disconnected at '" + s.vertices[v] + "'");
    }
  }
  // Connectivity over edges.
  std::vector<int> comp(nv, -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [w, nb] : link[v]) {
      if (comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
    }
  }
  if (std::any_of(comp.begin(), comp.end(), [](int c) { return c < 0; })) {
    not_a_surface("surface is disconnected");
  }
}

std::vector<std::vector<int>> close_group(const std::vector<std::vector<int>>& generators, int nv) {
  std::vector<int> identity(nv);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<std::vector<int>> elements{identity};
  std::vector<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        std::vector<int> prod(nv);
        for (int v = 0; v < nv; ++v) prod[v] = g[e[v]];
        if (elements.insert(prod).second) {
          if (static_cast<long long>(elements.size()) > kClosureBound) {
            throw Error(ErrorCode::ClosureBoundExceeded,
                        "group closure exceeds " + std::to_string(kClosureBound) + " elements");
          }
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<std::vector<int>>(elements.begin(), elements.end());
}

void check_simplicial(const SimplicialSurface& s, const SurfaceIndex& idx,
                      const std::vector<int>& perm) {
  for (const auto& t : idx.triangles) {
    std::array<int, 3> img{perm[t[0]], perm[t[1]], perm[t[2]]};
    std::sort(img.begin(), img.end());
    if (!idx.triangle_index.count(img)) {
      throw Error(ErrorCode::NotSimplicial,
                  "image of triangle {" + s.vertices[t[0]] + "," + s.vertices[t[1]] + "," +
                      s.vertices[t[2]] + "} is not a triangle");
    }
  }
}

SimplicialSurface subdivide_surface(const SimplicialSurface& s, const SurfaceIndex& idx) {
  SimplicialSurface out;
  out.vertices = s.vertices;
  auto edge_id = [&](int e) {
    return "e(" + s.vertices[idx.edges[e][0]] + "|" + s.vertices[idx.edges[e][1]] + ")";
  };
  auto face_id = [&](int t) {
    return "f(" + s.vertices[idx.triangles[t][0]] + "|" + s.vertices[idx.triangles[t][1]] + "|" +
           s.vertices[idx.triangles[t][2]] + ")";
  };
  for (std::size_t e = 0; e < idx.edges.size(); ++e) out.vertices.push_back(edge_id(e));
  for (std::size_t t = 0; t < idx.triangles.size(); ++t) out.vertices.push_back(face_id(t));
  for (std::size_t t = 0; t < idx.triangles.size(); ++t) {
    const auto& tri = idx.triangles[t];
    for (auto [a, b] : {std::pair{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}}) {
      int e = idx.edge_index.at({a, b});
      out.triangles.push_back({s.vertices[a], edge_id(e), face_id(t)});
      out.triangles.push_back({s.vertices[b], edge_id(e), face_id(t)});
    }
  }
  return out;
}

std::vector<int> induce_permutation(const SimplicialSurface& fine,
                                    const std::map<std::string, int>& fine_index,
                                    const SimplicialSurface& coarse, const SurfaceIndex& idx,
                                    const std::vector<int>& perm) {
  const int nv_coarse = static_cast<int>(coarse.vertices.size());
  std::vector<int> out(fine.vertices.size());
  for (int v = 0; v < nv_coarse; ++v) {
    out[v] = perm[v];
  }
  auto map_pair = [&](std::array<int, 2> e) {
    std::array<int, 2> img{perm[e[0]], perm[e[1]]};
    std::sort(img.begin(), img.end());
    return "e(" + coarse.vertices[img[0]] + "|" + coarse.vertices[img[1]] + ")";
  };
  auto map_triple = [&](std::array<int, 3> t) {
    std::array<int, 3> img{perm[t[0]], perm[t[1]], perm[t[2]]};
    std::sort(img.begin(), img.end());
    return "f(" + coarse.vertices[img[0]] + "|" + coarse.vertices[img[1]] + "|" +
           coarse.vertices[img[2]] + ")";
  };
  int cursor = nv_coarse;
  for (const auto& e : idx.edges) out[cursor++] = fine_index.at(map_pair(e));
  for (const auto& t : idx.triangles) out[cursor++] = fine_index.at(map_triple(t));
  return out;
}

SimplicialAction subdivide_action(const SimplicialAction& action) {
  SurfaceIndex idx(action.surface);
  SimplicialAction out;
  out.surface = subdivide_surface(action.surface, idx);
  std::map<std::string, int> fine_index;
  for (std::size_t i = 0; i < out.surface.vertices.size(); ++i) {
    fine_index.emplace(out.surface.vertices[i], static_cast<int>(i));
  }
  for (const auto& g : action.generators) {
    out.generators.push_back(induce_permutation(out.surface, fine_index, action.surface, idx, g));
  }
  for (const auto& g : action.elements) {
    out.elements.push_back(induce_permutation(out.surface, fine_index, action.surface, idx, g));
  }
  return out;
}

}  // namespace

SimplicialAction validate_action(
    const SimplicialSurface& surface,
    const std::vector<std::map<std::string, std::string>>& generators) {
  SurfaceIndex idx(surface);
  check_links_and_connectivity(surface, idx);

  const int nv = static_cast<int>(surface.vertices.size());
  std::vector<std::vector<int>> gens;
  for (const auto& g : generators) {
    std::vector<int> perm(nv, -1);
    for (const auto& [from, to] : g) {
      auto f = idx.vertex_index.find(from);
      auto t = idx.vertex_index.find(to);
      if (f == idx.vertex_index.end() || t == idx.vertex_index.end()) {
        throw Error(ErrorCode::InvalidArgument, "generator names unknown vertex");
      }
      perm[f->second] = t->second;
    }
    std::vector<bool> hit(nv, false);
    for (int v = 0; v < nv; ++v) {
      if (perm[v] < 0) throw Error(ErrorCode::InvalidArgument, "generator is not total");
      if (hit[perm[v]]) throw Error(ErrorCode::InvalidArgument, "generator is not a bijection");
      hit[perm[v]] = true;
    }
    check_simplicial(surface, idx, perm);
    gens.push_back(std::move(perm));
  }

  SimplicialAction action;
  action.surface = surface;
  action.generators = gens;
  action.elements = close_group(gens, nv);

  // Vertex permutations act faithfully on vertices, so a violation can only
  // come from duplicate elements slipping past closure.
  std::set<std::vector<int>> distinct(action.elements.begin(), action.elements.end());
  if (distinct.size() != action.elements.size()) {
    throw Error(ErrorCode::NotEffective, "group elements are not distinct as permutations");
  }
  return action;
}

SimplicialAction regularize(const SimplicialAction& action) {
  SimplicialAction fine = subdivide_action(subdivide_action(action));

  // Setwise stabilizers must now fix pointwise.
  SurfaceIndex idx(fine.surface);
  for (const auto& g : fine.elements) {
    for (const auto& e : idx.edges) {
      std::array<int, 2> img{g[e[0]], g[e[1]]};
      std::sort(img.begin(), img.end());
      if (img == e && g[e[0]] != e[0]) {
        throw Error(ErrorCode::ChiMismatch, "regularization failed on an edge");
      }
    }
    for (const auto& t : idx.triangles) {
      std::array<int, 3> img{g[t[0]], g[t[1]], g[t[2]]};
      std::sort(img.begin(), img.end());
      if (img == t && (g[t[0]] != t[0] || g[t[1]] != t[1])) {
        throw Error(ErrorCode::ChiMismatch, "regularization failed on a triangle");
      }
    }
  }
  return fine;
}

namespace {

// Orbit partition of 0..n-1 under the images cell_perm[g][i].
std::vector<int> orbit_representatives(const std::vector<std::vector<int>>& cell_perms, int n,
                                       std::vector<int>& orbit_of) {
  orbit_of.assign(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    int rep = static_cast<int>(reps.size());
    std::vector<int> stack{i};
    orbit_of[i] = rep;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& p : cell_perms) {
        if (orbit_of[p[x]] < 0) {
          orbit_of[p[x]] = rep;
          stack.push_back(p[x]);
        }
      }
    }
    reps.push_back(i);
  }
  return reps;
}

}  // namespace

QuotientResult quotient(const SimplicialAction& action) {
  SimplicialAction reg = regularize(action);
  const SimplicialSurface& s = reg.surface;
  SurfaceIndex idx(s);
  const int nv = static_cast<int>(s.vertices.size());
  const int ne = static_cast<int>(idx.edges.size());
  const int nt = static_cast<int>(idx.triangles.size());
  const long long order = reg.order();

  // Cell permutations induced on edges and triangles.
  std::vector<std::vector<int>> edge_perms, tri_perms;
  for (const auto& g : reg.elements) {
    std::vector<int> ep(ne), tp(nt);
    for (int e = 0; e < ne; ++e) {
      std::array<int, 2> img{g[idx.edges[e][0]], g[idx.edges[e][1]]};
      std::sort(img.begin(), img.end());
      ep[e] = idx.edge_index.at(img);
    }
    for (int t = 0; t < nt; ++t) {
      std::array<int, 3> img{g[idx.triangles[t][0]], g[idx.triangles[t][1]],
                             g[idx.triangles[t][2]]};
      std::sort(img.begin(), img.end());
      tp[t] = idx.triangle_index.at(img);
    }
    edge_perms.push_back(std::move(ep));
    tri_perms.push_back(std::move(tp));
  }

  // Pointwise stabilizer orders.
  std::vector<int> vstab(nv, 0), estab(ne, 0), tstab(nt, 0);
  for (const auto& g : reg.elements) {
    for (int v = 0; v < nv; ++v) vstab[v] += (g[v] == v);
    for (int e = 0; e < ne; ++e) estab[e] += (g[idx.edges[e][0]] == idx.edges[e][0] &&
                                              g[idx.edges[e][1]] == idx.edges[e][1]);
    for (int t = 0; t < nt; ++t) {
      tstab[t] += (g[idx.triangles[t][0]] == idx.triangles[t][0] &&
                   g[idx.triangles[t][1]] == idx.triangles[t][1] &&
                   g[idx.triangles[t][2]] == idx.triangles[t][2]);
    }
  }
  for (int t = 0; t < nt; ++t) {
    if (tstab[t] != 1) {
      throw Error(ErrorCode::ChiMismatch, "2-cell with nontrivial pointwise stabilizer");
    }
  }
  for (int e = 0; e < ne; ++e) {
    if (estab[e] != 1 && estab[e] != 2) {
      throw Error(ErrorCode::ChiMismatch, "edge stabilizer outside {1,2}");
    }
  }

  std::vector<int> vorbit, eorbit, torbit;
  std::vector<int> vreps = orbit_representatives(reg.elements, nv, vorbit);
  std::vector<int> ereps = orbit_representatives(edge_perms, ne, eorbit);
  std::vector<int> treps = orbit_representatives(tri_perms, nt, torbit);

  // Deterministic orbit ids from the lexicographically minimal member.
  auto min_vertex_of_orbit = [&](int rep_orbit) {
    std::string best;
    for (int v = 0; v < nv; ++v) {
      if (vorbit[v] != rep_orbit) continue;
      if (best.empty() || s.vertices[v] < best) best = s.vertices[v];
    }
    return best;
  };
  std::vector<std::string> vids(vreps.size()), eids(ereps.size()), tids(treps.size());
  for (std::size_t o = 0; o < vreps.size(); ++o) vids[o] = "v:" + min_vertex_of_orbit(o);
  auto edge_name = [&](int e) {
    return s.vertices[idx.edges[e][0]] + "|" + s.vertices[idx.edges[e][1]];
  };
  for (int e = 0; e < ne; ++e) {
    int o = eorbit[e];
    std::string name = "e:" + edge_name(e);
    if (eids[o].empty() || name < eids[o]) eids[o] = name;
  }
  auto tri_name = [&](int t) {
    return s.vertices[idx.triangles[t][0]] + "|" + s.vertices[idx.triangles[t][1]] + "|" +
           s.vertices[idx.triangles[t][2]];
  };
  for (int t = 0; t < nt; ++t) {
    int o = torbit[t];
    std::string name = "f:" + tri_name(t);
    if (tids[o].empty() || name < tids[o]) tids[o] = name;
  }

  QuotientResult result;
  result.group_order = order;
  StratifiedComplex& qc = result.complex;
  for (std::size_t o = 0; o < vreps.size(); ++o) {
    qc.cells.push_back(Cell{vids[o], 0, {}, vstab[vreps[o]]});
  }
  for (std::size_t o = 0; o < ereps.size(); ++o) {
    int e = ereps[o];
    qc.cells.push_back(Cell{eids[o], 1,
                            {vids[vorbit[idx.edges[e][0]]], vids[vorbit[idx.edges[e][1]]]},
                            estab[e]});
  }
  for (std::size_t o = 0; o < treps.size(); ++o) {
    int t = treps[o];
    const auto& tri = idx.triangles[t];
    auto eo = [&](int a, int b) {
      std::array<int, 2> key{std::min(a, b), std::max(a, b)};
      return eids[eorbit[idx.edge_index.at(key)]];
    };
    qc.cells.push_back(Cell{tids[o], 2,
                            {eo(tri[0], tri[1]), eo(tri[1], tri[2]), eo(tri[0], tri[2])}, 1});
  }

  result.chi_cover = Rational(nv - ne + nt);
  result.chi_quotient = euler_from_complex(qc);
  if (result.chi_cover != Rational(order) * result.chi_quotient) {
    throw Error(ErrorCode::ChiMismatch,
                "chi(M) = " + result.chi_cover.str() + " but |G| * chi(M//G) = " +
                    (Rational(order) * result.chi_quotient).str());
  }

  // --- Signature extraction ---------------------------------------------
  detail::ComplexView view(qc);
  auto circles = detail::mirror_circles(qc);
  const int b = static_cast<int>(circles.size());

  std::set<std::string> on_mirror;
  for (const auto& cyc : circles) on_mirror.insert(cyc.begin(), cyc.end());

  std::vector<int> cones;
  for (const Cell& cell : qc.cells) {
    if (cell.dim != 0) continue;
    if (on_mirror.count(cell.id)) {
      if (cell.local_order % 2 != 0) {
        throw Error(ErrorCode::ChiMismatch, "odd stabilizer on the mirror locus");
      }
      continue;
    }
    if (cell.local_order > 1) cones.push_back(cell.local_order);
  }
  std::vector<MirrorComponent> boundary;
  for (const auto& cyc : circles) {
    MirrorComponent comp;
    for (const auto& v : cyc) {
      int n = view.by_id.at(v)->local_order;
      if (n >= 4) comp.corners.push_back(n / 2);
    }
    boundary.push_back(std::move(comp));
  }

  long long v_count = 0, e_count = 0, f_count = 0;
  for (const Cell& cell : qc.cells) {
    if (cell.dim == 0) ++v_count;
    else if (cell.dim == 1) ++e_count;
    else ++f_count;
  }
  long long chi_underlying = v_count - e_count + f_count;

  // Orientability: coherent orientation propagated across interior edges.
  bool orientable = true;
  {
    std::vector<const Cell*> faces;
    std::map<std::string, int> face_no;
    for (const Cell& cell : qc.cells) {
      if (cell.dim == 2) {
        face_no[cell.id] = static_cast<int>(faces.size());
        faces.push_back(&cell);
      }
    }
    // Directed boundary cycle of a face under a chosen orientation.
    auto directed_edges = [&](const Cell& f, int flip) {
      // Order the three vertices into a cycle v0 -> v1 -> v2 via its edges.
      const Cell* e0 = view.by_id.at(f.faces[0]);
      const Cell* e1 = view.by_id.at(f.faces[1]);
      std::string v0 = e0->faces[0], v1 = e0->faces[1];
      std::string v2 = (e1->faces[0] == v0 || e1->faces[0] == v1) ? e1->faces[1] : e1->faces[0];
      std::vector<std::pair<std::string, std::string>> dir{{v0, v1}, {v1, v2}, {v2, v0}};
      if (flip) {
        for (auto& [a, bb] : dir) std::swap(a, bb);
      }
      return dir;
    };
    std::map<std::string, std::vector<int>> faces_at_edge;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      for (const auto& e : faces[i]->faces) faces_at_edge[e].push_back(static_cast<int>(i));
    }
    std::vector<int> flip(faces.size(), -1);
    for (std::size_t root = 0; root < faces.size() && orientable; ++root) {
      if (flip[root] >= 0) continue;
      flip[root] = 0;
      std::vector<int> stack{static_cast<int>(root)};
      while (!stack.empty() && orientable) {
        int f = stack.back();
        stack.pop_back();
        auto mine = directed_edges(*faces[f], flip[f]);
        for (const auto& eid : faces[f]->faces) {
          if (view.by_id.at(eid)->local_order == 2) continue;
          for (int g : faces_at_edge.at(eid)) {
            if (g == f) continue;
            const Cell* edge = view.by_id.at(eid);
            // Direction this face induces on eid.
            std::pair<std::string, std::string> d;
            for (const auto& dd : mine) {
              if ((dd.first == edge->faces[0] && dd.second == edge->faces[1]) ||
                  (dd.first == edge->faces[1] && dd.second == edge->faces[0])) {
                d = dd;
              }
            }
            for (int want = 0; want < 2; ++want) {
              auto theirs = directed_edges(*faces[g], want);
              bool opposite = std::any_of(theirs.begin(), theirs.end(), [&](const auto& dd) {
                return dd.first == d.second && dd.second == d.first;
              });
              if (!opposite) continue;
              if (flip[g] < 0) {
                flip[g] = want;
                stack.push_back(g);
              } else if (flip[g] != want) {
                orientable = false;
              }
              break;
            }
          }
        }
      }
    }
  }

  if (!orientable && b > 0) {
    result.signature_note =
        "NonOrientableUnsupported: mirrored non-orientable quotients carry no signature here";
    return result;
  }

  int genus;
  if (orientable) {
    long long twice_g = 2 - b - chi_underlying;
    if (twice_g % 2 != 0 || twice_g < 0) {
      throw Error(ErrorCode::ChiMismatch, "orientable genus is not a non-negative integer");
    }
    genus = static_cast<int>(twice_g / 2);
  } else {
    long long k = 2 - b - chi_underlying;
    if (k < 1) throw Error(ErrorCode::ChiMismatch, "crosscap count below 1");
    genus = static_cast<int>(k);
  }
  Signature sig = make_signature(orientable, genus, cones, boundary);
  if (euler_closed_form(sig) != result.chi_quotient) {
    throw Error(ErrorCode::ChiMismatch, "extracted signature disagrees with the cell sum");
  }
  result.signature = std::move(sig);
  return result;
}

}  // namespace orbifold
