#ifndef LOOPCALC_HOPF_HPP
#define LOOPCALC_HOPF_HPP

#include <vector>

#include "loopcalc/algebra.hpp"

namespace loopcalc {

/// Coproduct into the tensor square.  Sphere and stunted generators are
/// primitive, psi zeta_i = sum_{a+b=i} zeta_a (x) zeta_b with zeta_0 the
/// unit, Q-operations split Cartan-style, products multiply.
TensorElement coproduct(const Element& e);
TensorElement coproduct(const Monomial& m, const SpaceContext& space);

/// True iff psi e = e (x) 1 + 1 (x) e.
bool is_primitive(const Element& e);

/// F2 basis of the primitive subspace in degree d (kernel of the reduced
/// coproduct).
std::vector<Element> primitive_basis(const SpaceContext& space, int d);

} // namespace loopcalc

#endif
