#ifndef LOOPCALC_MAPS_HPP
#define LOOPCALC_MAPS_HPP

#include "loopcalc/algebra.hpp"

namespace loopcalc {

struct SuspendResult {
    Element image;
    SpaceContext target;
};

/// Homology suspension: kills decomposables, relabels the sphere generator
/// one dimension up (with excess-boundary renormalization), and sends
/// Q^I zeta_i to Q^I Q^i x_1.  Accepts LoopSphere(a,b) with a >= 2, Q0S0,
/// and QSphere(n); the loop count drops by one (QSphere(n) -> QSphere(n+1)).
SuspendResult suspend(const Element& e);

/// Inclusion of the LoopSphere basis into the QSphere basis; injective.
Element stabilize(const Element& e);

enum class J2Mode { Exact, LeadingTerm };

struct J2Result {
    Element image;
    /// False when the leading-term rule was used, in which case the image is
    /// correct only modulo terms of strictly lower excess.
    bool exact = true;
};

/// Stable second James-Hopf projection onto height-2 data, from QSphere(m)
/// to QStunted(m): x_m dies, Q^a x_m and x_m^2 land on stunted generators,
/// longer op words keep only the leading term (refused in exact mode).
J2Result j2_project(const Element& e, J2Mode mode = J2Mode::Exact);

} // namespace loopcalc

#endif
