#include "loopcalc/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace loopcalc {

bool admissible(const OpSequence& ops) {
    for (std::size_t j = 0; j + 1 < ops.size(); ++j)
        if (ops[j] > 2 * ops[j + 1]) return false;
    return true;
}

long long excess(const OpSequence& ops) {
    if (ops.empty()) return kInfiniteExcess;
    long long e = ops.front();
    for (std::size_t j = 1; j < ops.size(); ++j) e -= ops[j];
    return e;
}

bool Generator::valid() const {
    switch (kind) {
    case GenKind::Sphere: return a >= 1;
    case GenKind::Zeta: return a >= 1;
    case GenKind::Stunted: return a >= 1 && b >= a;
    }
    return false;
}

int cmp(const Generator& x, const Generator& y) {
    if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
    if (x.a != y.a) return x.a < y.a ? -1 : 1;
    if (x.b != y.b) return x.b < y.b ? -1 : 1;
    return 0;
}

int GenMonomial::dimension() const {
    int d = gen.dimension();
    for (int i : ops) d += i;
    return d;
}

OpSequence GenMonomial::word() const {
    OpSequence w = ops;
    if (gen.kind == GenKind::Zeta) w.push_back(gen.a);
    return w;
}

bool GenMonomial::valid() const {
    if (!gen.valid()) return false;
    for (int i : ops)
        if (i < 1) return false;
    if (!admissible(ops)) return false;
    if (excess(ops) <= gen.dimension()) return false;
    if (gen.kind == GenKind::Zeta && !ops.empty() && ops.back() > 2 * gen.a) return false;
    return true;
}

int cmp(const GenMonomial& x, const GenMonomial& y) {
    const int dx = x.dimension(), dy = y.dimension();
    if (dx != dy) return dx < dy ? -1 : 1;
    if (int c = cmp(x.gen, y.gen)) return c;
    if (x.ops != y.ops) return x.ops < y.ops ? -1 : 1;
    return 0;
}

Monomial Monomial::single(GenMonomial gm, int exp) {
    Monomial m;
    if (exp > 0) m.factors.emplace_back(std::move(gm), exp);
    return m;
}

int Monomial::dimension() const {
    int d = 0;
    for (const auto& [gm, e] : factors) d += gm.dimension() * e;
    return d;
}

int Monomial::total_multiplicity() const {
    int t = 0;
    for (const auto& [gm, e] : factors) t += e;
    return t;
}

int cmp(const Monomial& x, const Monomial& y) {
    const int dx = x.dimension(), dy = y.dimension();
    if (dx != dy) return dx < dy ? -1 : 1;
    const std::size_t n = std::min(x.factors.size(), y.factors.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (int c = cmp(x.factors[k].first, y.factors[k].first)) return c;
        if (x.factors[k].second != y.factors[k].second)
            return x.factors[k].second < y.factors[k].second ? -1 : 1;
    }
    if (x.factors.size() != y.factors.size())
        return x.factors.size() < y.factors.size() ? -1 : 1;
    return 0;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.factors.reserve(x.factors.size() + y.factors.size());
    std::size_t i = 0, j = 0;
    while (i < x.factors.size() && j < y.factors.size()) {
        const int c = cmp(x.factors[i].first, y.factors[j].first);
        if (c < 0) {
            out.factors.push_back(x.factors[i++]);
        } else if (c > 0) {
            out.factors.push_back(y.factors[j++]);
        } else {
            out.factors.emplace_back(x.factors[i].first,
                                     x.factors[i].second + y.factors[j].second);
            ++i;
            ++j;
        }
    }
    for (; i < x.factors.size(); ++i) out.factors.push_back(x.factors[i]);
    for (; j < y.factors.size(); ++j) out.factors.push_back(y.factors[j]);
    return out;
}

std::optional<Monomial> square_root(const Monomial& m) {
    Monomial root;
    root.factors.reserve(m.factors.size());
    for (const auto& [gm, e] : m.factors) {
        if (e % 2) return std::nullopt;
        root.factors.emplace_back(gm, e / 2);
    }
    return root;
}

SpaceContext SpaceContext::qsphere(int n) {
    if (n < 1) throw Error("QSphere context requires n >= 1");
    return {Kind::QSphere, n, 0};
}

SpaceContext SpaceContext::q0s0() { return {Kind::Q0S0, 0, 0}; }

SpaceContext SpaceContext::loop_sphere(int a, int b) {
    if (a < 1 || b <= a) throw Error("LoopSphere context requires 1 <= a < b");
    return {Kind::LoopSphere, a, b};
}

SpaceContext SpaceContext::qstunted(int m) {
    if (m < 1) throw Error("QStunted context requires m >= 1");
    return {Kind::QStunted, m, 0};
}

namespace {

// Lower indices of Q^I g, innermost entries last; nullopt when some entry
// would be <= 0 (excess boundary or below).
std::optional<std::vector<int>> lower_of(const OpSequence& ops, const Generator& gen) {
    std::vector<int> lower(ops.size());
    int d = gen.dimension();
    for (std::size_t k = ops.size(); k-- > 0;) {
        const int j = ops[k] - d;
        if (j <= 0) return std::nullopt;
        lower[k] = j;
        d += ops[k];
    }
    return lower;
}

} // namespace

bool SpaceContext::admits(const GenMonomial& gm) const {
    if (!gm.valid()) return false;
    switch (kind) {
    case Kind::QSphere:
        return gm.gen == Generator::sphere(a);
    case Kind::Q0S0:
        return gm.gen.kind == GenKind::Zeta;
    case Kind::LoopSphere: {
        if (gm.gen != Generator::sphere(b - a)) return false;
        const auto lower = lower_of(gm.ops, gm.gen);
        if (!lower) return false;
        for (int j : *lower)
            if (j > a - 1) return false;
        return true;
    }
    case Kind::QStunted:
        return gm.gen.kind == GenKind::Stunted && gm.gen.a == a;
    }
    return false;
}

bool SpaceContext::admits(const Monomial& m) const {
    for (const auto& [gm, e] : m.factors)
        if (!admits(gm)) return false;
    return true;
}

std::string SpaceContext::name() const {
    switch (kind) {
    case Kind::QSphere: return "QS" + std::to_string(a);
    case Kind::Q0S0: return "Q0S0";
    case Kind::LoopSphere: return "L" + std::to_string(a) + "S" + std::to_string(b);
    case Kind::QStunted: return "QP" + std::to_string(a);
    }
    return "?";
}

std::optional<SpaceContext> SpaceContext::parse(std::string_view text) {
    auto number = [](std::string_view s, int& out) -> std::size_t {
        int v = 0;
        const auto* first = s.data();
        const auto* last = s.data() + s.size();
        auto [p, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || v < 0) return 0;
        out = v;
        return static_cast<std::size_t>(p - first);
    };
    if (text == "Q0S0") return q0s0();
    if (text.size() > 2 && text.substr(0, 2) == "QS") {
        int n = 0;
        if (number(text.substr(2), n) == text.size() - 2 && n >= 1)
            return qsphere(n);
        return std::nullopt;
    }
    if (text.size() > 2 && text.substr(0, 2) == "QP") {
        int m = 0;
        if (number(text.substr(2), m) == text.size() - 2 && m >= 1)
            return qstunted(m);
        return std::nullopt;
    }
    if (!text.empty() && text[0] == 'L') {
        int a = 0, b = 0;
        const std::size_t na = number(text.substr(1), a);
        if (na == 0) return std::nullopt;
        std::size_t pos = 1 + na;
        if (pos >= text.size() || text[pos] != 'S') return std::nullopt;
        ++pos;
        if (number(text.substr(pos), b) != text.size() - pos) return std::nullopt;
        if (a >= 1 && b > a) return loop_sphere(a, b);
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<int> Element::dimension() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->dimension();
    for (const auto& m : terms_)
        if (m.dimension() != d) return std::nullopt;
    return d;
}

bool Element::homogeneous() const {
    return terms_.empty() || dimension().has_value();
}

void Element::toggle(Monomial m) {
    auto [it, inserted] = terms_.insert(std::move(m));
    if (!inserted) terms_.erase(it);
}

void Element::add_in_place(const Element& other) {
    if (other.space_ != space_)
        throw Error("element sum: mixed space contexts (" + space_.name() + " vs " +
                    other.space_.name() + ")");
    for (const auto& m : other.terms_) toggle(m);
}

Element multiply(const Element& x, const Element& y) {
    if (x.space() != y.space())
        throw Error("multiply: mixed space contexts (" + x.space().name() + " vs " +
                    y.space().name() + ")");
    Element out(x.space());
    for (const auto& mx : x.terms())
        for (const auto& my : y.terms()) out.toggle(mx * my);
    return out;
}

void TensorElement::toggle(Monomial left, Monomial right) {
    auto [it, inserted] = pairs_.insert({std::move(left), std::move(right)});
    if (!inserted) pairs_.erase(it);
}

void TensorElement::add_in_place(const TensorElement& other) {
    if (other.space_ != space_) throw Error("tensor sum: mixed space contexts");
    for (const auto& p : other.pairs_) toggle(p.first, p.second);
}

TensorElement multiply(const TensorElement& x, const TensorElement& y) {
    if (x.space() != y.space()) throw Error("tensor multiply: mixed space contexts");
    TensorElement out(x.space());
    for (const auto& [a, b] : x.pairs())
        for (const auto& [c, d] : y.pairs()) out.toggle(a * c, b * d);
    return out;
}

namespace {

// Prepends admissible ops onto gm, capped by max_dim; for LoopSphere contexts
// each new lower index must stay within [1, a-1].
void grow_generators(const SpaceContext& space, const GenMonomial& gm, int max_dim,
                     std::vector<GenMonomial>& out) {
    const int d = gm.dimension();
    if (d > max_dim) return;
    out.push_back(gm);
    int hi = max_dim - d;
    const OpSequence w = gm.word();
    if (!w.empty()) hi = std::min(hi, 2 * w.front());
    if (space.kind == SpaceContext::Kind::LoopSphere)
        hi = std::min(hi, d + (space.a - 1));
    for (int p = d + 1; p <= hi; ++p) {
        GenMonomial next{OpSequence{p}, gm.gen};
        next.ops.insert(next.ops.end(), gm.ops.begin(), gm.ops.end());
        grow_generators(space, next, max_dim, out);
    }
}

} // namespace

std::vector<GenMonomial> algebra_generators(const SpaceContext& space, int max_dim) {
    std::vector<GenMonomial> out;
    switch (space.kind) {
    case SpaceContext::Kind::QSphere:
    case SpaceContext::Kind::LoopSphere:
        grow_generators(space, GenMonomial{{}, Generator::sphere(space.sphere_dim())},
                        max_dim, out);
        break;
    case SpaceContext::Kind::Q0S0:
        for (int i = 1; i <= max_dim; ++i)
            grow_generators(space, GenMonomial{{}, Generator::zeta(i)}, max_dim, out);
        break;
    case SpaceContext::Kind::QStunted:
        for (int j = space.a; space.a + j <= max_dim; ++j)
            grow_generators(space, GenMonomial{{}, Generator::stunted(space.a, j)},
                            max_dim, out);
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void enumerate_rec(const std::vector<GenMonomial>& gens, std::size_t i, int rem,
                   Monomial& cur, std::vector<Monomial>& out) {
    if (rem == 0) {
        Monomial m = cur;
        std::sort(m.factors.begin(), m.factors.end(),
                  [](const auto& x, const auto& y) { return cmp(x.first, y.first) < 0; });
        out.push_back(std::move(m));
        return;
    }
    if (i >= gens.size()) return;
    enumerate_rec(gens, i + 1, rem, cur, out);
    const int dg = gens[i].dimension();
    if (dg <= rem) {
        for (int e = 1; e * dg <= rem; ++e) {
            cur.factors.emplace_back(gens[i], e);
            enumerate_rec(gens, i + 1, rem - e * dg, cur, out);
            cur.factors.pop_back();
        }
    }
}

} // namespace

std::vector<Monomial> enumerate_basis(const SpaceContext& space, int d) {
    if (d < 0) throw Error("enumerate_basis: negative dimension");
    if (d == 0) return {Monomial::unit()};
    const auto gens = algebra_generators(space, d);
    std::vector<Monomial> out;
    Monomial cur;
    enumerate_rec(gens, 0, d, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Gaussian elimination over F2 with combination tracking.  Rows are sparse
// key sets over an arbitrary totally ordered key type.
template <class Key>
std::vector<std::vector<std::size_t>>
kernel_combinations(const std::vector<std::set<Key>>& images) {
    std::vector<Key> keys;
    for (const auto& img : images)
        keys.insert(keys.end(), img.begin(), img.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    const std::size_t words = (keys.size() + 63) / 64;
    const std::size_t n = images.size();
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < n; ++r) {
        for (const auto& k : images[r]) {
            const auto idx = static_cast<std::size_t>(
                std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
            rows[r][idx / 64] ^= 1ull << (idx % 64);
        }
    }

    auto lowest_bit = [&](const std::vector<std::uint64_t>& v) -> long long {
        for (std::size_t w = 0; w < v.size(); ++w)
            if (v[w]) {
                unsigned long long x = v[w];
                std::size_t b = 0;
                while (!(x & 1ull)) {
                    x >>= 1;
                    ++b;
                }
                return static_cast<long long>(w) * 64 + static_cast<long long>(b);
            }
        return -1;
    };

    std::map<long long, std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
        pivots;
    const std::size_t cwords = (n + 63) / 64;
    std::vector<std::vector<std::size_t>> kernel;
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::uint64_t> row = rows[r];
        std::vector<std::uint64_t> combo(cwords, 0);
        combo[r / 64] = 1ull << (r % 64);
        for (;;) {
            const long long low = lowest_bit(row);
            if (low < 0) break;
            auto it = pivots.find(low);
            if (it == pivots.end()) {
                pivots.emplace(low, std::make_pair(row, combo));
                break;
            }
            for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= it->second.first[w];
            for (std::size_t w = 0; w < combo.size(); ++w) combo[w] ^= it->second.second[w];
        }
        if (lowest_bit(row) < 0) {
            std::vector<std::size_t> comb;
            for (std::size_t k = 0; k < n; ++k)
                if (combo[k / 64] >> (k % 64) & 1ull) comb.push_back(k);
            kernel.push_back(std::move(comb));
        }
    }
    return kernel;
}

std::vector<Element> combine(const std::vector<Element>& vectors,
                             const std::vector<std::vector<std::size_t>>& combos) {
    std::vector<Element> out;
    out.reserve(combos.size());
    for (const auto& comb : combos) {
        Element e(vectors.empty() ? SpaceContext::q0s0() : vectors.front().space());
        for (std::size_t k : comb) e.add_in_place(vectors[k]);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

std::vector<Element> solve_f2(const std::vector<Element>& vectors,
                              const std::vector<Element>& images) {
    if (vectors.size() != images.size())
        throw Error("solve_f2: dimension mismatch between vectors and images");
    std::vector<std::set<Monomial>> rows;
    rows.reserve(images.size());
    for (const auto& e : images) rows.push_back(e.terms());
    return combine(vectors, kernel_combinations(rows));
}

std::vector<Element> solve_f2_tensor(const std::vector<Element>& vectors,
                                     const std::vector<TensorElement>& images) {
    if (vectors.size() != images.size())
        throw Error("solve_f2: dimension mismatch between vectors and images");
    std::vector<std::set<std::pair<Monomial, Monomial>>> rows;
    rows.reserve(images.size());
    for (const auto& t : images) rows.push_back(t.pairs());
    return combine(vectors, kernel_combinations(rows));
}

} // namespace loopcalc
