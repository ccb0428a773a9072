#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbifold/euler.hpp"
#include "orbifold/rational.hpp"
#include "orbifold/signature.hpp"

namespace orbifold {

// Triangulated closed surface: every edge in exactly two triangles, every
// vertex link a single cycle, connected.
struct SimplicialSurface {
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> triangles;
};

// A finite group acting simplicially, with the full element set materialized
// as vertex permutations (index-based, following `surface.vertices` order).
struct SimplicialAction {
  SimplicialSurface surface;
  std::vector<std::vector<int>> generators;
  std::vector<std::vector<int>> elements;

  long long order() const { return static_cast<long long>(elements.size()); }
};

struct QuotientResult {
  StratifiedComplex complex;
  // Unset exactly when the quotient surface is non-orientable and mirrored;
  // `signature_note` then carries the reason. Complex and chi are always set.
  std::optional<Signature> signature;
  std::string signature_note;
  long long group_order = 1;
  Rational chi_cover;
  Rational chi_quotient;
};

inline constexpr long long kClosureBound = 20000;

// Closes the generators into a group, checks the surface axioms,
// simpliciality and effectivity. Generators map vertex ids to vertex ids.
SimplicialAction validate_action(const SimplicialSurface& surface,
                                 const std::vector<std::map<std::string, std::string>>& generators);

// Induced action on the twice-barycentrically-subdivided surface. In the
// output every element that stabilizes a simplex setwise fixes it pointwise.
SimplicialAction regularize(const SimplicialAction& action);

// Quotient orbifold of the action: cell orbits with stabilizer orders as the
// stratified complex, the extracted signature, and the exact chi identity
// chi(M) = |G| * chi^orb(M//G), which is verified and reported.
QuotientResult quotient(const SimplicialAction& action);

}  // namespace orbifold
