#include "orbifold/euler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "orbifold/error.hpp"

namespace orbifold {

namespace {

using CellIndex = std::unordered_map<std::string, const Cell*>;

CellIndex index_cells(const StratifiedComplex& c) {
  CellIndex idx;
  for (const Cell& cell : c.cells) {
    if (!idx.emplace(cell.id, &cell).second) {
      throw Error(ErrorCode::IncompatibleComplex, "duplicate cell id '" + cell.id + "'");
    }
  }
  return idx;
}

[[noreturn]] void bad(const std::string& why) {
  throw Error(ErrorCode::IncompatibleComplex, why);
}

}  // namespace

void validate_complex(const StratifiedComplex& c) {
  CellIndex idx = index_cells(c);

  std::unordered_map<std::string, int> edge_order;
  std::unordered_map<std::string, int> vertex_order;
  std::unordered_map<std::string, int> mirror_edges_at;   // vertex -> incident N=2 edges
  std::unordered_map<std::string, int> faces_at_edge;

  for (const Cell& cell : c.cells) {
    if (cell.dim < 0 || cell.dim > 2) bad("cell '" + cell.id + "' has dim outside {0,1,2}");
    if (cell.local_order < 1) bad("cell '" + cell.id + "' has local order < 1");
    for (const auto& f : cell.faces) {
      auto it = idx.find(f);
      if (it == idx.end()) bad("cell '" + cell.id + "' references missing face '" + f + "'");
      if (it->second->dim != cell.dim - 1) {
        bad("cell '" + cell.id + "' has face '" + f + "' of wrong dimension");
      }
    }
    if (cell.dim == 0) {
      if (!cell.faces.empty()) bad("vertex '" + cell.id + "' has faces");
      vertex_order[cell.id] = cell.local_order;
    } else if (cell.dim == 1) {
      if (cell.faces.size() != 2 || cell.faces[0] == cell.faces[1]) {
        bad("edge '" + cell.id + "' must have two distinct endpoints");
      }
      if (cell.local_order != 1 && cell.local_order != 2) {
        bad("edge '" + cell.id + "' has local order outside {1,2}");
      }
      edge_order[cell.id] = cell.local_order;
    }
  }

  for (const Cell& cell : c.cells) {
    if (cell.dim == 1 && cell.local_order == 2) {
      for (const auto& v : cell.faces) mirror_edges_at[v]++;
    }
    if (cell.dim != 2) continue;
    if (cell.local_order != 1) bad("2-cell '" + cell.id + "' must have local order 1");
    if (cell.faces.size() < 2) bad("2-cell '" + cell.id + "' boundary too short");
    // The boundary edges must close into a single simple cycle of vertices.
    std::set<std::string> seen_edges;
    std::map<std::string, std::vector<std::string>> adj;  // vertex -> neighbours on the cycle
    for (const auto& e : cell.faces) {
      if (!seen_edges.insert(e).second) bad("2-cell '" + cell.id + "' repeats edge '" + e + "'");
      const Cell* edge = idx.at(e);
      adj[edge->faces[0]].push_back(edge->faces[1]);
      adj[edge->faces[1]].push_back(edge->faces[0]);
      faces_at_edge[e]++;
    }
    if (adj.size() != cell.faces.size()) bad("2-cell '" + cell.id + "' boundary is not a cycle");
    for (const auto& [v, nb] : adj) {
      if (nb.size() != 2) bad("2-cell '" + cell.id + "' boundary not a cycle at '" + v + "'");
    }
    // Walk the cycle to rule out two disjoint circles.
    std::set<std::string> visited;
    std::string start = adj.begin()->first, prev = start, cur = adj.begin()->second[0];
    visited.insert(start);
    while (cur != start) {
      if (!visited.insert(cur).second) bad("2-cell '" + cell.id + "' boundary self-intersects");
      const auto& nb = adj.at(cur);
      std::string next = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (visited.size() != adj.size()) bad("2-cell '" + cell.id + "' boundary is disconnected");
  }

  for (const auto& [eid, n] : edge_order) {
    int incident = faces_at_edge.count(eid) ? faces_at_edge.at(eid) : 0;
    if (n == 1 && incident != 2) {
      bad("interior edge '" + eid + "' lies in " + std::to_string(incident) + " 2-cells");
    }
    if (n == 2 && incident != 1) {
      bad("mirror edge '" + eid + "' lies in " + std::to_string(incident) + " 2-cells");
    }
    const Cell* edge = idx.at(eid);
    for (const auto& v : edge->faces) {
      if (vertex_order.at(v) < n) {
        bad("vertex '" + v + "' has smaller local order than incident edge '" + eid + "'");
      }
    }
  }
  // Mirror edges must close into disjoint circles.
  for (const auto& [v, cnt] : mirror_edges_at) {
    if (cnt != 2) bad("vertex '" + v + "' touches " + std::to_string(cnt) + " mirror edges");
  }
}

Rational euler_closed_form(const Signature& sig) {
  int b = static_cast<int>(sig.boundary.size());
  int chi_base = sig.orientable ? 2 - 2 * sig.genus - b : 2 - sig.genus - b;
  Rational chi(chi_base);
  for (int p : sig.cone_points) {
    chi -= Rational(p - 1, p);
  }
  for (const auto& comp : sig.boundary) {
    for (int q : comp.corners) {
      chi -= Rational(q - 1, 2 * q);
    }
  }
  return chi;
}

Rational euler_from_complex(const StratifiedComplex& c) {
  validate_complex(c);
  Rational chi(0);
  for (const Cell& cell : c.cells) {
    Rational term(1, cell.local_order);
    chi += (cell.dim == 1) ? -term : term;
  }
  return chi;
}

Rational euler_from_strata(const StratifiedComplex& c) {
  validate_complex(c);
  // chi_c of the open cells with a fixed local order, weighted by 1/order.
  std::map<int, long long> chi_c;
  for (const Cell& cell : c.cells) {
    chi_c[cell.local_order] += (cell.dim == 1) ? -1 : 1;
  }
  Rational chi(0);
  for (const auto& [order, count] : chi_c) {
    chi += Rational(count, order);
  }
  return chi;
}

StratifiedComplex barycentric_subdivide(const StratifiedComplex& c) {
  CellIndex idx = index_cells(c);

  // Full face poset: vertices of each edge, edges and vertices of each 2-cell.
  std::map<std::string, std::vector<std::string>> proper_faces;
  for (const Cell& cell : c.cells) {
    auto& fs = proper_faces[cell.id];
    if (cell.dim == 1) {
      fs = cell.faces;
    } else if (cell.dim == 2) {
      std::set<std::string> verts;
      for (const auto& e : cell.faces) {
        fs.push_back(e);
        for (const auto& v : idx.at(e)->faces) verts.insert(v);
      }
      fs.insert(fs.end(), verts.begin(), verts.end());
    }
  }

  StratifiedComplex out;
  auto vertex_id = [](const std::string& id) { return "b:" + id; };
  auto edge_id = [](const std::string& lo, const std::string& hi) { return "c:" + lo + "|" + hi; };

  for (const Cell& cell : c.cells) {
    out.cells.push_back(Cell{vertex_id(cell.id), 0, {}, cell.local_order});
  }
  for (const Cell& cell : c.cells) {
    for (const auto& f : proper_faces[cell.id]) {
      out.cells.push_back(
          Cell{edge_id(f, cell.id), 1, {vertex_id(f), vertex_id(cell.id)}, cell.local_order});
    }
  }
  for (const Cell& cell : c.cells) {
    if (cell.dim != 2) continue;
    for (const auto& e : cell.faces) {
      for (const auto& v : idx.at(e)->faces) {
        out.cells.push_back(Cell{"t:" + v + "|" + e + "|" + cell.id,
                                 2,
                                 {edge_id(v, e), edge_id(e, cell.id), edge_id(v, cell.id)},
                                 cell.local_order});
      }
    }
  }

  // Compact deterministic renaming keeps ids short across repeated rounds.
  std::sort(out.cells.begin(), out.cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.dim, a.id) < std::tie(b.dim, b.id);
  });
  std::unordered_map<std::string, std::string> rename;
  int counters[3] = {0, 0, 0};
  const char* prefix[3] = {"v", "e", "f"};
  for (Cell& cell : out.cells) {
    std::string fresh = prefix[cell.dim] + std::to_string(counters[cell.dim]++);
    rename[cell.id] = fresh;
    cell.id = fresh;
  }
  for (Cell& cell : out.cells) {
    for (auto& f : cell.faces) f = rename.at(f);
  }
  return out;
}

}  // namespace orbifold
