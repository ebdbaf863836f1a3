#include "loopcalc/steenrod.hpp"

#include "loopcalc/dlops.hpp"
#include "loopcalc/mod2.hpp"

namespace loopcalc {

namespace {

using detail::q_elem;
using detail::q_on_rest;

// Sq^r_* of the class carried by an op word over the family's bottom class.
Element sq_word(int r, const OpSequence& word, const Generator& family,
                const SpaceContext& space) {
    burn_fuel();
    Element out(space);
    if (word.empty()) {
        switch (family.kind) {
        case GenKind::Sphere:
        case GenKind::Zeta: // virtual bottom class, nothing below it
            return out;
        case GenKind::Stunted: {
            const int m = family.a, j = family.b;
            if (j - r >= m && binom_mod2(j - r, r))
                out.toggle(Monomial::single(GenMonomial{{}, Generator::stunted(m, j - r)}));
            return out;
        }
        }
        return out;
    }
    const int a = word.front();
    const OpSequence rest(word.begin() + 1, word.end());
    for (int t = 0; t <= r / 2; ++t) {
        if (!binom_mod2(a - r, r - 2 * t)) continue;
        const int b = a - r + t;
        if (b < 0) continue;
        if (t == 0) {
            out.add_in_place(q_on_rest(b, rest, family, space));
        } else {
            const Element inner = sq_word(t, rest, family, space);
            if (!inner.is_zero()) out.add_in_place(q_elem(b, inner));
        }
    }
    return out;
}

Element sq_single(int r, const GenMonomial& gm, const SpaceContext& space) {
    return sq_word(r, gm.word(), gm.gen, space);
}

Element sq_mono(int r, const Monomial& m, const SpaceContext& space) {
    Element out(space);
    if (r == 0) {
        out.toggle(m);
        return out;
    }
    if (m.is_unit()) return out;
    if (m.factors.size() == 1 && m.factors.front().second == 1)
        return sq_single(r, m.factors.front().first, space);
    // Cartan: split off one copy of the first factor.
    const GenMonomial& gm = m.factors.front().first;
    const Monomial u = Monomial::single(gm, 1);
    Monomial rest = m;
    if (--rest.factors.front().second == 0)
        rest.factors.erase(rest.factors.begin());
    for (int i = 0; i <= r; ++i) {
        const Element left = sq_mono(i, u, space);
        if (left.is_zero()) continue;
        const Element right = sq_mono(r - i, rest, space);
        if (right.is_zero()) continue;
        out.add_in_place(multiply(left, right));
    }
    return out;
}

} // namespace

Element sq_down(int r, const Element& e) {
    if (r <= 0) throw Error("sq_down: r must be positive");
    if (!e.homogeneous()) throw Error("sq_down: element is not homogeneous");
    FuelScope scope;
    Element out(e.space());
    for (const auto& m : e.terms()) out.add_in_place(sq_mono(r, m, e.space()));
    return out;
}

bool annihilated_by_all_sq(const Element& e) {
    if (!e.homogeneous()) throw Error("annihilated_by_all_sq: element is not homogeneous");
    const auto d = e.dimension();
    if (!d) return true; // zero element
    for (int t = 1; t <= *d; ++t)
        if (!sq_down(t, e).is_zero()) return false;
    return true;
}

} // namespace loopcalc
