#include "polygon_surface.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace orbifold::detail {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

std::vector<PolygonSide> orientable_word(int genus) {
  std::vector<PolygonSide> word;
  for (int i = 0; i < genus; ++i) {
    char a = static_cast<char>('a' + 2 * i);
    char b = static_cast<char>('a' + 2 * i + 1);
    word.push_back({a, false});
    word.push_back({b, false});
    word.push_back({a, true});
    word.push_back({b, true});
  }
  return word;
}

std::vector<PolygonSide> crosscap_word(int crosscaps) {
  std::vector<PolygonSide> word;
  for (int i = 0; i < crosscaps; ++i) {
    char a = static_cast<char>('a' + i);
    word.push_back({a, false});
    word.push_back({a, false});
  }
  return word;
}

PolygonSurface build_polygon_surface(const std::vector<PolygonSide>& word) {
  const int sides = static_cast<int>(word.size());
  if (sides < 2) throw std::logic_error("polygon word needs at least two sides");
  const int raw = 3 * sides;

  // Identify raw boundary points and side sub-edges, slot by slot along the
  // letter direction of each paired side.
  UnionFind points(raw);
  UnionFind subedges(raw);
  std::map<char, std::vector<int>> by_letter;
  for (int i = 0; i < sides; ++i) by_letter[word[i].letter].push_back(i);
  for (const auto& [letter, pair] : by_letter) {
    if (pair.size() != 2) {
      throw std::logic_error(std::string("letter '") + letter + "' must appear exactly twice");
    }
    auto slot_point = [&](int side, int t) {
      // Points of a side in letter direction; inverse sides run backwards.
      int tt = word[side].inverse ? 3 - t : t;
      return (3 * side + tt) % raw;
    };
    auto slot_edge = [&](int side, int t) {
      int tt = word[side].inverse ? 2 - t : t;
      return 3 * side + tt;
    };
    for (int t = 0; t <= 3; ++t) points.unite(slot_point(pair[0], t), slot_point(pair[1], t));
    for (int t = 0; t <= 2; ++t) subedges.unite(slot_edge(pair[0], t), slot_edge(pair[1], t));
  }

  PolygonSurface out;
  out.sides = sides;
  out.point_class.resize(raw);
  out.subedge_class.resize(raw);
  for (int j = 0; j < raw; ++j) {
    out.point_class[j] = "pv" + std::to_string(points.find(j));
    out.subedge_class[j] = "pe" + std::to_string(subedges.find(j));
  }

  StratifiedComplex& c = out.complex;
  std::map<std::string, Cell> cells;
  cells[out.center()] = Cell{out.center(), 0, {}, 1};
  for (int j = 0; j < raw; ++j) {
    cells[out.point_class[j]] = Cell{out.point_class[j], 0, {}, 1};
  }
  for (int j = 0; j < raw; ++j) {
    const std::string a = out.point_class[j];
    const std::string b = out.point_class[(j + 1) % raw];
    cells[out.subedge_class[j]] = Cell{out.subedge_class[j], 1, {a, b}, 1};
    cells[out.spoke(j)] = Cell{out.spoke(j), 1, {out.center(), a}, 1};
  }
  for (int j = 0; j < raw; ++j) {
    cells[out.triangle(j)] =
        Cell{out.triangle(j), 2,
             {out.spoke(j), out.subedge_class[j], out.spoke((j + 1) % raw)}, 1};
  }
  for (auto& [id, cell] : cells) c.cells.push_back(std::move(cell));
  return out;
}

StratifiedComplex lune_sphere() {
  StratifiedComplex c;
  c.cells.push_back(Cell{"v0", 0, {}, 1});
  c.cells.push_back(Cell{"v1", 0, {}, 1});
  c.cells.push_back(Cell{"e0", 1, {"v0", "v1"}, 1});
  c.cells.push_back(Cell{"e1", 1, {"v0", "v1"}, 1});
  c.cells.push_back(Cell{"f0", 2, {"e0", "e1"}, 1});
  c.cells.push_back(Cell{"f1", 2, {"e0", "e1"}, 1});
  return c;
}

}  // namespace orbifold::detail
