#include "loopcalc/dlops.hpp"

#include <cstdlib>
#include <map>

#include "loopcalc/mod2.hpp"

namespace loopcalc {

namespace {

constexpr long long kDefaultFuel = 200'000'000;

thread_local long long g_fuel = -1; // -1: no scope active

long long fuel_budget() {
    static const long long budget = [] {
        if (const char* env = std::getenv("LOOPCALC_FUEL")) {
            const long long v = std::atoll(env);
            if (v > 0) return v;
        }
        return kDefaultFuel;
    }();
    return budget;
}

} // namespace

FuelScope::FuelScope() : owner_(g_fuel < 0) {
    if (owner_) g_fuel = fuel_budget();
}

FuelScope::~FuelScope() {
    if (owner_) g_fuel = -1;
}

void burn_fuel() {
    if (g_fuel < 0) return; // no scope installed; unbounded
    if (--g_fuel <= 0) throw Error("rewriting fuel exhausted (set LOOPCALC_FUEL to raise)");
}

namespace {

using detail::q_elem;

Element q_mono(int a, const Monomial& m, const SpaceContext& space);

// Q^a on a single basis generator power Q^I g.
Element q_single(int a, const GenMonomial& gm, const SpaceContext& space) {
    burn_fuel();
    Element out(space);
    const int d = gm.dimension();
    if (a < d) return out;
    if (a == d) {
        out.toggle(Monomial::single(gm, 2));
        return out;
    }
    const OpSequence w = gm.word();
    if (w.empty()) {
        out.toggle(Monomial::single(GenMonomial{{a}, gm.gen}));
        return out;
    }
    const int s = w.front();
    if (a <= 2 * s) {
        GenMonomial next{OpSequence{a}, gm.gen};
        next.ops.insert(next.ops.end(), gm.ops.begin(), gm.ops.end());
        out.toggle(Monomial::single(std::move(next)));
        return out;
    }
    // Adem on the top pair Q^a Q^s, then push the new outer index through.
    const OpSequence rest(w.begin() + 1, w.end());
    for (int c = (a + 1) / 2; c <= a - s - 1; ++c) {
        if (!binom_mod2(c - s - 1, 2 * c - a)) continue;
        const Element inner = detail::q_on_rest(c, rest, gm.gen, space);
        out.add_in_place(q_elem(a + s - c, inner));
    }
    return out;
}

Element q_mono(int a, const Monomial& m, const SpaceContext& space) {
    Element out(space);
    if (m.is_unit()) {
        if (a == 0) out.toggle(Monomial::unit());
        return out;
    }
    if (m.factors.size() == 1 && m.factors.front().second == 1) {
        if (a == 0) return out; // Q^0 z = 0 in positive dimensions
        return q_single(a, m.factors.front().first, space);
    }
    // Cartan: split off one copy of the first factor.
    burn_fuel();
    const GenMonomial& gm = m.factors.front().first;
    const Monomial u = Monomial::single(gm, 1);
    Monomial rest = m;
    if (--rest.factors.front().second == 0)
        rest.factors.erase(rest.factors.begin());
    for (int i = 0; i <= a; ++i) {
        const Element left = q_mono(i, u, space);
        if (left.is_zero()) continue;
        const Element right = q_mono(a - i, rest, space);
        if (right.is_zero()) continue;
        out.add_in_place(multiply(left, right));
    }
    return out;
}

} // namespace

namespace detail {

Element q_elem(int a, const Element& e) {
    Element out(e.space());
    if (a < 0) return out;
    for (const auto& m : e.terms()) out.add_in_place(q_mono(a, m, e.space()));
    return out;
}

Element q_on_rest(int b, const OpSequence& rest, const Generator& family,
                  const SpaceContext& space) {
    if (b < 0) return Element(space);
    if (family.kind == GenKind::Zeta && rest.empty()) {
        if (b == 0)
            throw Error("Q^0 reached the virtual zeta bottom class");
        return Element(space, Monomial::single(GenMonomial{{}, Generator::zeta(b)}));
    }
    GenMonomial gm;
    if (family.kind == GenKind::Zeta) {
        gm.ops.assign(rest.begin(), rest.end() - 1);
        gm.gen = Generator::zeta(rest.back());
    } else {
        gm.ops = rest;
        gm.gen = family;
    }
    return q_elem(b, Element(space, Monomial::single(std::move(gm))));
}

Element eval_word(const OpSequence& word, const Generator& family, const SpaceContext& space) {
    FuelScope scope;
    OpSequence w = word;
    Element e(space);
    if (family.kind == GenKind::Zeta) {
        if (w.empty()) throw Error("eval_word: empty word over a zeta family");
        const int i = w.back();
        w.pop_back();
        if (i < 1) throw Error("eval_word: zeta index must be positive");
        e.toggle(Monomial::single(GenMonomial{{}, Generator::zeta(i)}));
    } else {
        e.toggle(Monomial::single(GenMonomial{{}, family}));
    }
    for (std::size_t k = w.size(); k-- > 0;) e = q_elem(w[k], e);
    return e;
}

} // namespace detail

Element apply_Q(int a, const Element& e) {
    if (a < 0) throw Error("apply_Q: index must be nonnegative");
    if (!e.homogeneous()) throw Error("apply_Q: element is not homogeneous");
    FuelScope scope;
    return detail::q_elem(a, e);
}

Element adem_normalize(const OpSequence& word, const Generator& g, const SpaceContext& space) {
    for (int i : word)
        if (i < 1) throw Error("adem_normalize: op indices must be positive");
    OpSequence full = word;
    if (g.kind == GenKind::Zeta) full.push_back(g.a);
    return detail::eval_word(full, g, space);
}

namespace {

// Word-level Adem reduction in the free algebra, mod 2, chosen scan order.
std::map<OpSequence, int> reduce_words(const OpSequence& word, ScanOrder order) {
    std::map<OpSequence, int> work, done;
    work[word] = 1;
    while (!work.empty()) {
        burn_fuel();
        auto node = work.extract(work.begin());
        const OpSequence w = node.key();
        if (node.mapped() % 2 == 0) continue;
        long long pos = -1;
        if (order == ScanOrder::LeftToRight) {
            for (std::size_t k = 0; k + 1 < w.size(); ++k)
                if (w[k] > 2 * w[k + 1]) {
                    pos = static_cast<long long>(k);
                    break;
                }
        } else {
            for (std::size_t k = w.size(); k-- > 1;)
                if (w[k - 1] > 2 * w[k]) {
                    pos = static_cast<long long>(k - 1);
                    break;
                }
        }
        if (pos < 0) {
            done[w] ^= 1;
            continue;
        }
        const int r = w[pos], s = w[pos + 1];
        for (int c = (r + 1) / 2; c <= r - s - 1; ++c) {
            if (!binom_mod2(c - s - 1, 2 * c - r)) continue;
            OpSequence nw(w.begin(), w.begin() + pos);
            nw.push_back(r + s - c);
            nw.push_back(c);
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            work[nw] += 1;
        }
    }
    return done;
}

} // namespace

Element adem_normalize_word_order(const OpSequence& word, const Generator& g,
                                  const SpaceContext& space, ScanOrder order) {
    for (int i : word)
        if (i < 1) throw Error("adem_normalize: op indices must be positive");
    FuelScope scope;
    OpSequence full = word;
    if (g.kind == GenKind::Zeta) full.push_back(g.a);
    Element out(space);
    for (const auto& [w, parity] : reduce_words(full, order)) {
        if (parity % 2 == 0) continue;
        out.add_in_place(detail::eval_word(w, g, space));
    }
    return out;
}

Element convert_lower_to_upper(const std::vector<int>& lower, const Generator& g,
                               const SpaceContext& space) {
    for (int j : lower)
        if (j < 0) throw Error("convert_lower_to_upper: lower indices must be nonnegative");
    FuelScope scope;
    Element e(space, Monomial::single(GenMonomial{{}, g}));
    for (std::size_t k = lower.size(); k-- > 0;) {
        const auto d = e.dimension();
        if (!d) break; // zero element stays zero
        e = detail::q_elem(lower[k] + *d, e);
    }
    return e;
}

std::optional<std::vector<int>> convert_upper_to_lower(const OpSequence& I, const Generator& g) {
    std::vector<int> lower(I.size());
    int d = g.dimension();
    for (std::size_t k = I.size(); k-- > 0;) {
        const int j = I[k] - d;
        if (j <= 0) return std::nullopt;
        lower[k] = j;
        d += I[k];
    }
    return lower;
}

std::optional<std::vector<int>> lower_indices(const GenMonomial& gm) {
    return convert_upper_to_lower(gm.ops, gm.gen);
}

long long weight(const Monomial& m) {
    long long w = 0;
    for (const auto& [gm, e] : m.factors)
        w += (1ll << gm.ops.size()) * e;
    return w;
}

} // namespace loopcalc
