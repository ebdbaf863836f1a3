#include "loopcalc/sieve.hpp"

#include "loopcalc/hopf.hpp"
#include "loopcalc/mod2.hpp"
#include "loopcalc/steenrod.hpp"

namespace loopcalc {

bool wellington_check(const OpSequence& I, int i) {
    if (I.empty())
        throw Error("wellington_check: empty op sequence (test the bare class directly)");
    if (i < 1) throw Error("wellington_check: zeta index must be positive");
    long long ex = I.front() - i;
    for (std::size_t k = 1; k < I.size(); ++k) ex -= I[k];
    if (ex >= (1ll << rho(I.front()))) return false;
    OpSequence seq = I;
    seq.push_back(i);
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        const long long lhs = 2ll * seq[j + 1] - seq[j];
        if (lhs >= (1ll << rho(seq[j + 1]))) return false;
    }
    return true;
}

std::vector<Element> spherical_candidates(const SpaceContext& space, int d) {
    if (d < 1) throw Error("spherical_candidates: dimension must be positive");
    std::vector<Element> cur = primitive_basis(space, d);
    for (int t = 1; t <= d && !cur.empty(); ++t) {
        std::vector<Element> images;
        images.reserve(cur.size());
        bool all_zero = true;
        for (const auto& e : cur) {
            images.push_back(sq_down(t, e));
            all_zero = all_zero && images.back().is_zero();
        }
        if (all_zero) continue;
        cur = solve_f2(cur, images);
    }
    return cur;
}

std::vector<Element> square_root_filter(const std::vector<Element>& cands) {
    std::vector<Element> out;
    for (const auto& e : cands) {
        if (e.is_zero()) continue;
        Element root(e.space());
        bool square = true;
        for (const auto& m : e.terms()) {
            auto r = square_root(m);
            if (!r) {
                square = false;
                break;
            }
            root.toggle(std::move(*r));
        }
        if (!square) continue;
        const auto d = root.dimension();
        if (d && *d % 2 == 1 && is_primitive(root)) out.push_back(e);
    }
    return out;
}

SieveReport sieve_report(const SpaceContext& space, int d_max, const SieveOptions& opts) {
    if (d_max < 1) throw Error("sieve_report: d_max must be positive");
    if (d_max > opts.max_dim_limit)
        throw Error("sieve_report: d_max " + std::to_string(d_max) +
                    " exceeds the resource limit " + std::to_string(opts.max_dim_limit));
    SieveReport report{.space = space, .d_max = d_max, .dims = {}, .checked = 0,
                       .agreements = 0, .mismatches = {}};
    for (int d = 1; d <= d_max; ++d) {
        SieveReport::PerDim row;
        row.dim = d;
        row.candidates = spherical_candidates(space, d);
        for (const auto& e : row.candidates) {
            if (!is_primitive(e) || !annihilated_by_all_sq(e))
                throw Error("sieve_report: candidate failed re-test in dimension " +
                            std::to_string(d));
        }
        row.square_filtered = square_root_filter(row.candidates);
        report.dims.push_back(std::move(row));

        if (space.kind == SpaceContext::Kind::Q0S0) {
            for (const auto& gm : algebra_generators(space, d)) {
                if (gm.dimension() != d || gm.ops.empty()) continue;
                const bool closed = wellington_check(gm.ops, gm.gen.a);
                const bool direct =
                    annihilated_by_all_sq(Element(space, Monomial::single(gm)));
                ++report.checked;
                if (closed == direct) {
                    ++report.agreements;
                } else {
                    std::string w = "dim " + std::to_string(d) + ": Q^I zeta with I = (";
                    for (std::size_t k = 0; k < gm.ops.size(); ++k)
                        w += (k ? "," : "") + std::to_string(gm.ops[k]);
                    w += "), i = " + std::to_string(gm.gen.a) +
                         ": criterion = " + (closed ? "true" : "false") +
                         ", direct sweep = " + (direct ? "true" : "false");
                    report.mismatches.push_back(std::move(w));
                }
            }
        }
    }
    return report;
}

} // namespace loopcalc
