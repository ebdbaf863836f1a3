#include "loopcalc/hopf.hpp"

#include "loopcalc/dlops.hpp"

namespace loopcalc {

namespace {

using detail::q_elem;

// Pushes the splitting sum_{p+q=a} Q^p (x) Q^q through a tensor.
TensorElement q_split(int a, const TensorElement& t, const SpaceContext& space) {
    TensorElement out(space);
    for (const auto& [u, v] : t.pairs()) {
        const Element eu(space, u), ev(space, v);
        for (int p = 0; p <= a; ++p) {
            const Element left = q_elem(p, eu);
            if (left.is_zero()) continue;
            const Element right = q_elem(a - p, ev);
            if (right.is_zero()) continue;
            for (const auto& ml : left.terms())
                for (const auto& mr : right.terms()) out.toggle(ml, mr);
        }
    }
    return out;
}

// One side of a zeta-word splitting: either an honest monomial or the 2^t-th
// power of the virtual bottom class (which the base-component translation
// turns into the unit once all operations are spent).
struct ZetaComp {
    int marker = -1; // >= 0: virtual bottom class to the power 2^marker
    Monomial mono;

    friend bool operator==(const ZetaComp&, const ZetaComp&) = default;
    friend bool operator<(const ZetaComp& x, const ZetaComp& y) {
        if (x.marker != y.marker) return x.marker < y.marker;
        return cmp(x.mono, y.mono) < 0;
    }
};

// Q^p on one splitting component.  On a virtual power the Frobenius-Cartan
// rule applies: Q^0 doubles the power, indices divisible by 2^t land on
// zeta powers, everything else dies.
std::vector<ZetaComp> q_comp(int p, const ZetaComp& c, const SpaceContext& space) {
    std::vector<ZetaComp> out;
    if (c.marker >= 0) {
        if (p == 0) {
            out.push_back({c.marker + 1, {}});
        } else if (p % (1 << c.marker) == 0) {
            out.push_back({-1, Monomial::single(GenMonomial{{}, Generator::zeta(p >> c.marker)},
                                                1 << c.marker)});
        }
        return out;
    }
    const Element img = q_elem(p, Element(space, c.mono));
    for (const auto& m : img.terms()) out.push_back({-1, m});
    return out;
}

// Coproduct of a zeta word: split every index of the full word over the
// group-like virtual bottom class.
TensorElement psi_zeta_word(const OpSequence& word, const SpaceContext& space) {
    std::set<std::pair<ZetaComp, ZetaComp>> states{{ZetaComp{0, {}}, ZetaComp{0, {}}}};
    for (std::size_t k = word.size(); k-- > 0;) {
        burn_fuel();
        std::set<std::pair<ZetaComp, ZetaComp>> next;
        for (const auto& [u, v] : states) {
            for (int p = 0; p <= word[k]; ++p) {
                for (const auto& cu : q_comp(p, u, space))
                    for (const auto& cv : q_comp(word[k] - p, v, space)) {
                        auto [it, inserted] = next.insert({cu, cv});
                        if (!inserted) next.erase(it);
                    }
            }
        }
        states = std::move(next);
    }
    TensorElement t(space);
    for (const auto& [u, v] : states)
        t.toggle(u.marker >= 0 ? Monomial::unit() : u.mono,
                 v.marker >= 0 ? Monomial::unit() : v.mono);
    return t;
}

TensorElement psi_gm(const GenMonomial& gm, const SpaceContext& space) {
    burn_fuel();
    if (gm.gen.kind == GenKind::Zeta) return psi_zeta_word(gm.word(), space);
    TensorElement t(space);
    const Monomial bare = Monomial::single(GenMonomial{{}, gm.gen});
    t.toggle(bare, Monomial::unit());
    t.toggle(Monomial::unit(), bare);
    for (std::size_t k = gm.ops.size(); k-- > 0;) t = q_split(gm.ops[k], t, space);
    return t;
}

} // namespace

TensorElement coproduct(const Monomial& m, const SpaceContext& space) {
    FuelScope scope;
    TensorElement t(space);
    t.toggle(Monomial::unit(), Monomial::unit());
    for (const auto& [gm, e] : m.factors) {
        const TensorElement pg = psi_gm(gm, space);
        for (int k = 0; k < e; ++k) t = multiply(t, pg);
    }
    return t;
}

TensorElement coproduct(const Element& e) {
    FuelScope scope;
    TensorElement out(e.space());
    for (const auto& m : e.terms()) out.add_in_place(coproduct(m, e.space()));
    return out;
}

bool is_primitive(const Element& e) {
    if (!e.homogeneous()) throw Error("is_primitive: element is not homogeneous");
    TensorElement want(e.space());
    for (const auto& m : e.terms()) {
        want.toggle(m, Monomial::unit());
        want.toggle(Monomial::unit(), m);
    }
    return coproduct(e) == want;
}

std::vector<Element> primitive_basis(const SpaceContext& space, int d) {
    if (d < 1) throw Error("primitive_basis: dimension must be positive");
    const auto basis = enumerate_basis(space, d);
    std::vector<Element> vectors;
    std::vector<TensorElement> reduced;
    vectors.reserve(basis.size());
    reduced.reserve(basis.size());
    for (const auto& m : basis) {
        vectors.emplace_back(space, m);
        TensorElement t = coproduct(m, space);
        t.toggle(m, Monomial::unit());
        t.toggle(Monomial::unit(), m);
        reduced.push_back(std::move(t));
    }
    return solve_f2_tensor(vectors, reduced);
}

} // namespace loopcalc
