#ifndef LOOPCALC_STEENROD_HPP
#define LOOPCALC_STEENROD_HPP

#include "loopcalc/algebra.hpp"

namespace loopcalc {

/// Dual Steenrod operation Sq^r_* on a homogeneous element: Nishida relations
/// on Q-prefixed classes, Cartan expansion on products, and the generator
/// base rules (sphere classes die, zeta and stunted classes shift by a
/// binomial coefficient).  Rejects r <= 0 and inhomogeneous input.
Element sq_down(int r, const Element& e);

/// True iff Sq^t_* e = 0 for every 1 <= t <= dim e.
bool annihilated_by_all_sq(const Element& e);

} // namespace loopcalc

#endif
