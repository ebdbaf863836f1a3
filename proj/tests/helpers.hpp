#ifndef LOOPCALC_TEST_HELPERS_HPP
#define LOOPCALC_TEST_HELPERS_HPP

#include <set>
#include <string>
#include <vector>

#include "loopcalc/algebra.hpp"
#include "loopcalc/expr.hpp"

namespace lt {

using namespace loopcalc;

inline GenMonomial gm(OpSequence ops, Generator g) { return {std::move(ops), g}; }

inline Element el(const SpaceContext& sp, GenMonomial g, int exp = 1) {
    return Element(sp, Monomial::single(std::move(g), exp));
}

inline Element parse(const std::string& text, const SpaceContext& sp) {
    return parse_expr(text, sp);
}

inline std::set<std::string> strings(const std::vector<Monomial>& ms) {
    std::set<std::string> out;
    for (const auto& m : ms) out.insert(to_string(m));
    return out;
}

inline std::set<std::string> strings(const std::vector<Element>& es) {
    std::set<std::string> out;
    for (const auto& e : es) out.insert(to_string(e));
    return out;
}

// Independent generating-function count of degree-d monomials: the product
// of 1/(1 - t^{dim g}) over the context's generators, expanded by dynamic
// programming.
inline long long poincare_count(const SpaceContext& sp, int d) {
    std::vector<long long> dp(static_cast<std::size_t>(d) + 1, 0);
    dp[0] = 1;
    for (const auto& g : algebra_generators(sp, d)) {
        const int dg = g.dimension();
        for (int k = dg; k <= d; ++k) dp[k] += dp[k - dg];
    }
    return dp[d];
}

} // namespace lt

#endif
