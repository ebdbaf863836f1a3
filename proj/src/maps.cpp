#include "loopcalc/maps.hpp"

#include "loopcalc/dlops.hpp"

namespace loopcalc {

SuspendResult suspend(const Element& e) {
    const SpaceContext& src = e.space();
    SpaceContext target = src;
    switch (src.kind) {
    case SpaceContext::Kind::QSphere:
        target = SpaceContext::qsphere(src.a + 1);
        break;
    case SpaceContext::Kind::Q0S0:
        target = SpaceContext::qsphere(1);
        break;
    case SpaceContext::Kind::LoopSphere:
        if (src.a < 2)
            throw Error("suspend: LoopSphere source requires a >= 2");
        target = SpaceContext::loop_sphere(src.a - 1, src.b);
        break;
    default:
        throw Error("suspend: unsupported context " + src.name());
    }
    FuelScope scope;
    Element out(target);
    for (const auto& m : e.terms()) {
        if (m.decomposable() || m.is_unit()) continue;
        const GenMonomial& gm = m.factors.front().first;
        const Generator fam = gm.gen.kind == GenKind::Zeta
            ? Generator::sphere(1)
            : Generator::sphere(gm.gen.a + 1);
        out.add_in_place(detail::eval_word(gm.word(), fam, target));
    }
    return {std::move(out), target};
}

Element stabilize(const Element& e) {
    const SpaceContext& src = e.space();
    if (src.kind != SpaceContext::Kind::LoopSphere)
        throw Error("stabilize: expected a LoopSphere context, got " + src.name());
    Element out(SpaceContext::qsphere(src.b - src.a));
    for (const auto& m : e.terms()) out.toggle(m);
    return out;
}

J2Result j2_project(const Element& e, J2Mode mode) {
    const SpaceContext& src = e.space();
    if (src.kind != SpaceContext::Kind::QSphere)
        throw Error("j2_project: expected a QSphere context, got " + src.name());
    const int m = src.a;
    const SpaceContext target = SpaceContext::qstunted(m);
    FuelScope scope;
    J2Result res{Element(target), true};
    for (const auto& mono : e.terms()) {
        Element image(target, Monomial::unit());
        bool killed = false;
        for (const auto& [gm, exp] : mono.factors) {
            Element factor(target);
            if (gm.ops.empty()) {
                // x_m has weight 1: odd powers die, even powers project onto
                // powers of the bottom stunted cell.
                if (exp % 2) {
                    killed = true;
                    break;
                }
                factor.toggle(Monomial::single(
                    GenMonomial{{}, Generator::stunted(m, m)}, exp / 2));
            } else if (gm.ops.size() == 1) {
                factor.toggle(Monomial::single(
                    GenMonomial{{}, Generator::stunted(m, gm.ops.front())}, exp));
            } else {
                if (mode == J2Mode::Exact)
                    throw Error("j2_project: weight > 2 operation word needs leading-term mode");
                res.exact = false;
                const OpSequence outer(gm.ops.begin(), gm.ops.end() - 1);
                const Generator bottom = Generator::stunted(m, gm.ops.back());
                Element lead = detail::eval_word(outer, bottom, target);
                Element power(target, Monomial::unit());
                for (int k = 0; k < exp; ++k) power = multiply(power, lead);
                factor = std::move(power);
            }
            image = multiply(image, factor);
            if (image.is_zero()) break;
        }
        if (!killed) res.image.add_in_place(image);
    }
    return res;
}

} // namespace loopcalc
