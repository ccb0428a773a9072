#include "orbifold/fundamental.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "orbifold/error.hpp"
#include "orbifold/euler.hpp"

namespace orbifold {

const char* to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::Bad: return "Bad";
    case GeometryClass::Spherical: return "Spherical";
    case GeometryClass::Euclidean: return "Euclidean";
    case GeometryClass::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

GroupPresentation presentation(const Signature& sig) {
  if (!sig.boundary.empty()) {
    throw Error(ErrorCode::Unsupported, "presentations for mirrored signatures are not provided");
  }
  if (!sig.orientable) {
    throw Error(ErrorCode::Unsupported, "presentations for non-orientable bases are not provided");
  }
  GroupPresentation pres;
  const int g = sig.genus;
  const int k = static_cast<int>(sig.cone_points.size());
  for (int i = 0; i < g; ++i) {
    pres.generators.push_back("a" + std::to_string(i + 1));
    pres.generators.push_back("b" + std::to_string(i + 1));
  }
  for (int j = 0; j < k; ++j) {
    pres.generators.push_back("x" + std::to_string(j + 1));
  }
  auto x = [&](int j) { return 2 * g + j + 1; };  // 1-based symbol of x_j
  for (int j = 0; j < k; ++j) {
    std::vector<int> word(sig.cone_points[j], x(j));
    pres.relators.push_back(std::move(word));
  }
  std::vector<int> surface_word;
  for (int j = 0; j < k; ++j) surface_word.push_back(x(j));
  for (int i = 0; i < g; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    surface_word.insert(surface_word.end(), {a, b, -a, -b});
  }
  if (!surface_word.empty()) pres.relators.push_back(std::move(surface_word));
  return pres;
}

namespace {

std::vector<int> reduce_word(std::vector<int> w) {
  // Free reduction.
  std::vector<int> out;
  for (int s : w) {
    if (!out.empty() && out.back() == -s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  // Cyclic reduction.
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  return std::vector<int>(out.begin() + lo, out.begin() + hi);
}

// HLT-style Todd-Coxeter over the trivial subgroup. Cosets are table rows;
// column 2k is generator k+1, column 2k+1 its inverse. Coincidences merge
// through a union-find whose representative is always the smaller coset.
class CosetEnumerator {
 public:
  CosetEnumerator(int ngens, std::vector<std::vector<int>> relators, long long max_live)
      : ngens_(ngens), relators_(std::move(relators)), max_live_(max_live) {}

  std::optional<long long> run() {
    define_root();
    if (live_count_ > max_live_) return std::nullopt;

    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t before = table_.size();
      for (std::size_t a = 0; a < table_.size(); ++a) {
        if (!alive(a)) continue;
        for (const auto& rel : relators_) {
          if (!scan_and_fill(static_cast<int>(a), rel)) return std::nullopt;
          if (!alive(a)) break;  // merged into an earlier coset
        }
      }
      // Coincidence merging can leave unscanned entries on survivors, so
      // iterate until a full pass neither defines nor merges anything.
      if (table_.size() != before || merged_this_pass_) changed = true;
      merged_this_pass_ = false;
    }

    // The table must be closed: every generator image defined on live rows.
    for (std::size_t a = 0; a < table_.size(); ++a) {
      if (!alive(a)) continue;
      for (int c = 0; c < 2 * ngens_; ++c) {
        if (lookup(static_cast<int>(a), c) < 0) {
          // Only possible for a generator appearing in no relator: its images
          // are free, so the group is infinite (or ngens_ == 0 never hits).
          return std::nullopt;
        }
      }
    }
    return live_count_;
  }

 private:
  static int column(int symbol) { return symbol > 0 ? 2 * (symbol - 1) : 2 * (-symbol - 1) + 1; }
  static int inverse_column(int symbol) { return column(-symbol); }

  bool alive(std::size_t a) { return find(static_cast<int>(a)) == static_cast<int>(a); }

  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  void define_root() {
    table_.emplace_back(2 * ngens_, -1);
    parent_.push_back(0);
    live_count_ = 1;
  }

  int new_coset() {
    table_.emplace_back(2 * ngens_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    ++live_count_;
    return static_cast<int>(table_.size()) - 1;
  }

  int lookup(int a, int col) {
    int v = table_[find(a)][col];
    return v < 0 ? -1 : find(v);
  }

  void set_entry(int a, int col, int b) {
    a = find(a);
    b = find(b);
    int existing = table_[a][col];
    if (existing >= 0) {
      queue_coincidence(find(existing), b);
    } else {
      table_[a][col] = b;
    }
  }

  void queue_coincidence(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) pending_.push_back({a, b});
  }

  void process_coincidences() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent_[b] = a;
      --live_count_;
      merged_this_pass_ = true;
      for (int col = 0; col < 2 * ngens_; ++col) {
        int v = table_[b][col];
        if (v < 0) continue;
        int w = table_[a][col];
        if (w < 0) {
          table_[a][col] = find(v);
        } else {
          queue_coincidence(find(w), find(v));
        }
      }
    }
  }

  // Scans relator `rel` from coset `a`, defining cosets across the gap and
  // deducing/queueing coincidences. Returns false when resources run out.
  bool scan_and_fill(int a, const std::vector<int>& rel) {
    if (rel.empty()) return true;
    a = find(a);
    const int k = static_cast<int>(rel.size());
    int f = a, fi = 0;
    while (true) {
      while (fi < k) {
        int next = lookup(f, column(rel[fi]));
        if (next < 0) break;
        f = next;
        ++fi;
      }
      if (fi == k) {
        queue_coincidence(f, a);
        process_coincidences();
        return true;
      }
      int bck = a, bj = k;
      while (bj > fi) {
        int next = lookup(bck, inverse_column(rel[bj - 1]));
        if (next < 0) break;
        bck = next;
        --bj;
      }
      if (bj == fi) {
        queue_coincidence(f, bck);
        process_coincidences();
        return true;
      }
      if (bj == fi + 1) {
        set_entry(f, column(rel[fi]), bck);
        set_entry(bck, inverse_column(rel[fi]), f);
        process_coincidences();
        return true;
      }
      // Gap of two or more: define one coset and resume the forward scan.
      int fresh = new_coset();
      if (live_count_ > max_live_ ||
          static_cast<long long>(table_.size()) > definition_cap()) {
        return false;
      }
      set_entry(f, column(rel[fi]), fresh);
      set_entry(fresh, inverse_column(rel[fi]), f);
      process_coincidences();
      f = find(f);
      // Re-walk from the scan start; merges may have rewritten the prefix.
      f = a = find(a);
      fi = 0;
    }
  }

  long long definition_cap() const { return std::max<long long>(1000000, 50 * max_live_); }

  int ngens_;
  std::vector<std::vector<int>> relators_;
  long long max_live_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<std::pair<int, int>> pending_;
  long long live_count_ = 0;
  bool merged_this_pass_ = false;
};

}  // namespace

std::optional<long long> group_order(const GroupPresentation& pres, long long max_cosets) {
  if (max_cosets < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_cosets must be at least 1");
  }
  for (const auto& rel : pres.relators) {
    for (int s : rel) {
      int idx = s > 0 ? s : -s;
      if (idx < 1 || idx > static_cast<int>(pres.generators.size())) {
        throw Error(ErrorCode::InvalidArgument, "relator symbol names no generator");
      }
    }
  }
  if (pres.generators.empty()) return 1;

  std::vector<std::vector<int>> relators;
  for (const auto& rel : pres.relators) {
    auto r = reduce_word(rel);
    if (!r.empty()) relators.push_back(std::move(r));
  }
  CosetEnumerator enumerator(static_cast<int>(pres.generators.size()), std::move(relators),
                             max_cosets);
  return enumerator.run();
}

bool is_good(const Signature& sig) {
  if (!sig.orientable) {
    throw Error(ErrorCode::Unsupported, "goodness test requires an orientable base");
  }
  Signature t = sig.closed() ? sig : double_mirrors(sig);
  if (t.genus != 0) return true;
  if (t.cone_points.size() == 1) return false;                       // teardrop
  if (t.cone_points.size() == 2 && t.cone_points[0] != t.cone_points[1]) {
    return false;                                                    // unequal football
  }
  return true;
}

GeometryClass classify(const Signature& sig) {
  if (!is_good(sig)) return GeometryClass::Bad;
  int s = euler_closed_form(sig).sign();
  if (s > 0) return GeometryClass::Spherical;
  if (s == 0) return GeometryClass::Euclidean;
  return GeometryClass::Hyperbolic;
}

long long spherical_group_order(const Signature& sig) {
  if (classify(sig) != GeometryClass::Spherical) {
    throw Error(ErrorCode::NotSpherical, "signature '" + format_signature(sig) +
                                             "' is not spherical");
  }
  Rational order = Rational(2) / euler_closed_form(sig);
  if (!order.is_integer()) {
    throw Error(ErrorCode::ChiMismatch, "2/chi is not an integer for '" +
                                            format_signature(sig) + "'");
  }
  return order.num();
}

}  // namespace orbifold
