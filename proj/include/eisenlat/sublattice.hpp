#pragma once

#include <string>

#include "eisenlat/lattice.hpp"

namespace eisenlat {

// A sublattice given by basis columns in the coordinates of its ambient
// lattice, together with the induced form.
struct Sublattice {
  IntMatrix basis;  // rank(ambient) x rank(sub)
  Lattice lattice;
};

// {x in L : (x, s) = 0 for all s in S}, a saturated sublattice computed as the
// integer kernel of the pairing matrix S^T G. Columns of `s_basis` are the
// vectors of S; throws DependentInput if they are linearly dependent.
Sublattice orthogonal_complement(const Lattice& lattice, const IntMatrix& s_basis);

// (S (x) Q) intersected with L. Throws DependentInput on dependent columns.
IntMatrix saturation(const Lattice& lattice, const IntMatrix& s_basis);
bool is_primitive(const Lattice& lattice, const IntMatrix& s_basis);

// True when the column spans of a and b coincide (as Z-modules).
bool same_span(const IntMatrix& a, const IntMatrix& b);

}  // namespace eisenlat
