#pragma once

#include <string>
#include <vector>

#include "orbifold/rational.hpp"
#include "orbifold/signature.hpp"

namespace orbifold {

// One cell of a stratified regular cell complex. `faces` lists the ids of the
// immediate boundary cells (vertices of an edge, edges of a 2-cell).
// `local_order` is the order of the local group along the open cell.
struct Cell {
  std::string id;
  int dim = 0;
  std::vector<std::string> faces;
  int local_order = 1;
};

// Finite regular cell complex realizing a closed 2-orbifold (or one whose
// order-2 edges form the silvered boundary of the underlying surface).
// Compatibility: 2-cells have order 1, edges order 1 or 2, and a vertex's
// order dominates the order of every incident edge.
struct StratifiedComplex {
  std::vector<Cell> cells;
};

// Structural + compatibility validation. Throws IncompatibleComplex.
void validate_complex(const StratifiedComplex& c);

// chi(X) - sum(1 - 1/p_i) - (1/2) sum(1 - 1/q_j), with chi(X) = 2 - 2g - b for
// orientable bases and 2 - k - b otherwise. Exact.
Rational euler_closed_form(const Signature& sig);

// Alternating cell sum of 1/N over all cells. Validates first.
Rational euler_from_complex(const StratifiedComplex& c);

// Stratum form: cells grouped by local order; each group contributes its
// compactly supported Euler characteristic divided by the order.
Rational euler_from_strata(const StratifiedComplex& c);

// Simplicial subdivision over the face poset; every new cell inherits the
// local order of the open cell whose interior contains it.
StratifiedComplex barycentric_subdivide(const StratifiedComplex& c);

// Builds a compatible complex realizing `sig`: polygon gluing for the base
// surface, deleted 2-cells for silvered circles, marked vertices for cones
// and corner reflectors (corner order q is stored as local order 2q).
StratifiedComplex build_stratified_complex(const Signature& sig);

}  // namespace orbifold
