#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbifold/rational.hpp"
#include "orbifold/signature.hpp"

namespace orbifold {

// Finite presentation with named generators. A relator is a word over
// generator symbols; negative entries denote inverses (symbol -k is the
// inverse of generator index k-1, mirroring the "g" / "g^-1" text form).
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
};

enum class GeometryClass { Bad, Spherical, Euclidean, Hyperbolic };

const char* to_string(GeometryClass g);

// Standard presentation of the orbifold fundamental group of a closed
// orientable signature:
//   < a_1,b_1,...,a_g,b_g, x_1,...,x_k | x_j^{p_j}, x_1...x_k [a_1,b_1]...[a_g,b_g] >
// Throws Unsupported for mirrored or non-orientable input.
GroupPresentation presentation(const Signature& sig);

// Exact group order via Todd-Coxeter coset enumeration over the trivial
// subgroup (HLT strategy, deterministic numbering). Returns nullopt when the
// enumeration exceeds `max_cosets` live cosets; Todd-Coxeter cannot certify
// infiniteness, so the sentinel reads "infinite or resource-exhausted".
std::optional<long long> group_order(const GroupPresentation& pres, long long max_cosets);

inline constexpr const char* kOrderSentinel = "infinite-or-exceeded";

// A closed orientable signature is bad exactly when it is a teardrop (sphere,
// one cone) or a football with unequal cone orders; mirrored signatures
// reduce through their orientation double. The closed-case list follows the
// classification literature; the teardrop/football obstructions themselves
// are the classical covering arguments.
bool is_good(const Signature& sig);

// Bad, or the sign class of chi^orb: + spherical, 0 euclidean, - hyperbolic.
// Only the sign trichotomy forced by Gauss-Bonnet is claimed.
GeometryClass classify(const Signature& sig);

// 2 / chi^orb for a spherical signature: the order of the deck group of the
// universal covering by the sphere. Throws NotSpherical otherwise.
long long spherical_group_order(const Signature& sig);

}  // namespace orbifold
