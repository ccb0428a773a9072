#pragma once

#include <string>
#include <vector>

namespace orbifold {

// One silvered boundary circle. `corners` lists the corner-reflector orders
// in cyclic order; an empty list is a pure mirror circle. Canonical form is
// the lexicographically minimal representative over rotations and the
// reflection (a silvered circle has dihedral symmetry).
struct MirrorComponent {
  std::vector<int> corners;

  friend bool operator==(const MirrorComponent& a, const MirrorComponent& b) {
    return a.corners == b.corners;
  }
  friend bool operator<(const MirrorComponent& a, const MirrorComponent& b) {
    return a.corners < b.corners;
  }
};

// Symbolic description of a closed 2-orbifold: base surface (orientable genus
// g, or crosscap number for non-orientable bases), cone points, and silvered
// boundary circles with corner reflectors. Instances produced by this module
// are always in canonical form: cones sorted descending, each mirror circle
// in minimal dihedral rotation, circles sorted lexicographically.
struct Signature {
  bool orientable = true;
  int genus = 0;  // crosscap number when orientable == false
  std::vector<int> cone_points;
  std::vector<MirrorComponent> boundary;

  bool closed() const { return boundary.empty(); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.orientable == b.orientable && a.genus == b.genus &&
           a.cone_points == b.cone_points && a.boundary == b.boundary;
  }
};

// Validates orders/genus and brings the fields into canonical form.
// Throws InvalidOrder (any order < 2) or InvalidGenus (non-orientable genus 0).
Signature make_signature(bool orientable, int genus, std::vector<int> cones,
                         std::vector<MirrorComponent> boundary);

// Text grammar (whitespace-insensitive):
//   signature := ("O" | "N") genus "(" orders? ")" mirror*
//   mirror    := "*(" orders? ")"
//   orders    := integer ("," integer)*
Signature parse_signature(const std::string& text);
std::string format_signature(const Signature& sig);

// Orientation double across the mirror locus: two sign-labelled copies glued
// along the silvered circles. The result is closed, orientable, of genus
// 2g + b - 1; interior cones double, each corner reflector becomes one cone.
// Throws NoMirrors on closed input and Unsupported on non-orientable bases.
Signature double_mirrors(const Signature& sig);

}  // namespace orbifold
