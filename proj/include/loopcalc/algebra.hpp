#ifndef LOOPCALC_ALGEBRA_HPP
#define LOOPCALC_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loopcalc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Upper Dyer-Lashof indices, outermost operation first.
using OpSequence = std::vector<int>;

/// i_j <= 2 i_{j+1} for every adjacent pair; the empty sequence is admissible.
bool admissible(const OpSequence& ops);

/// i_1 - (i_2 + ... + i_s); the empty sequence has infinite excess.
long long excess(const OpSequence& ops);
inline constexpr long long kInfiniteExcess = 1ll << 60;

enum class GenKind : std::uint8_t { Sphere, Zeta, Stunted };

/// A polynomial-algebra generator: the sphere class x_n, the base-component
/// class zeta_i, or the stunted-projective class Sigma^m a_j (bottom cell at
/// j = m, so dimension m + j).
struct Generator {
    GenKind kind = GenKind::Sphere;
    int a = 0; // Sphere: n, Zeta: i, Stunted: m
    int b = 0; // Stunted: j

    static Generator sphere(int n) { return {GenKind::Sphere, n, 0}; }
    static Generator zeta(int i) { return {GenKind::Zeta, i, 0}; }
    static Generator stunted(int m, int j) { return {GenKind::Stunted, m, j}; }

    int dimension() const {
        return kind == GenKind::Stunted ? a + b : a;
    }
    bool valid() const;

    friend bool operator==(const Generator&, const Generator&) = default;
};

int cmp(const Generator& x, const Generator& y);

/// Q^I g with I admissible and excess(I) > dim g; for zeta generators the
/// concatenated sequence (I, i) must additionally be admissible.
struct GenMonomial {
    OpSequence ops;
    Generator gen;

    int dimension() const;
    /// ops for sphere/stunted generators; ops with the zeta index appended
    /// for zeta generators (the word acting on the virtual 0-dimensional
    /// bottom class).
    OpSequence word() const;
    bool valid() const;

    friend bool operator==(const GenMonomial&, const GenMonomial&) = default;
};

int cmp(const GenMonomial& x, const GenMonomial& y);
inline bool operator<(const GenMonomial& x, const GenMonomial& y) { return cmp(x, y) < 0; }

/// Product of operated generators with positive exponents, no repeated key,
/// factors sorted canonically.  The empty product is the algebra unit.
struct Monomial {
    std::vector<std::pair<GenMonomial, int>> factors;

    static Monomial unit() { return {}; }
    static Monomial single(GenMonomial gm, int exp = 1);

    int dimension() const;
    bool is_unit() const { return factors.empty(); }
    int total_multiplicity() const;
    bool decomposable() const { return total_multiplicity() >= 2; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

int cmp(const Monomial& x, const Monomial& y);
inline bool operator<(const Monomial& x, const Monomial& y) { return cmp(x, y) < 0; }

Monomial operator*(const Monomial& x, const Monomial& y);

/// Componentwise halving of exponents; nullopt when any exponent is odd.
std::optional<Monomial> square_root(const Monomial& m);

/// Which homology algebra is in force.
struct SpaceContext {
    enum class Kind : std::uint8_t { QSphere, Q0S0, LoopSphere, QStunted };
    Kind kind = Kind::QSphere;
    int a = 0; // QSphere: n, LoopSphere: loop count a, QStunted: m
    int b = 0; // LoopSphere: b (with b > a)

    static SpaceContext qsphere(int n);
    static SpaceContext q0s0();
    static SpaceContext loop_sphere(int a, int b);
    static SpaceContext qstunted(int m);

    /// Dimension of the sphere generator for QSphere / LoopSphere contexts.
    int sphere_dim() const { return kind == Kind::LoopSphere ? b - a : a; }

    bool admits(const GenMonomial& gm) const;
    bool admits(const Monomial& m) const;

    std::string name() const;
    static std::optional<SpaceContext> parse(std::string_view text);

    friend bool operator==(const SpaceContext&, const SpaceContext&) = default;
};

/// F2-linear combination of monomials with set semantics: adding a monomial
/// twice removes it.
class Element {
public:
    explicit Element(SpaceContext space) : space_(space) {}
    Element(SpaceContext space, Monomial m) : space_(space) { toggle(std::move(m)); }

    const SpaceContext& space() const { return space_; }
    const std::set<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Common dimension of all terms; nullopt for the zero element and for
    /// inhomogeneous sums.
    std::optional<int> dimension() const;
    bool homogeneous() const;

    void toggle(Monomial m);
    void add_in_place(const Element& other);

    friend Element operator+(Element lhs, const Element& rhs) {
        lhs.add_in_place(rhs);
        return lhs;
    }
    friend bool operator==(const Element&, const Element&) = default;

private:
    SpaceContext space_;
    std::set<Monomial> terms_;
};

/// F2 bilinear product; commutative with the empty monomial as unit.
/// Mixed-context operands are rejected.
Element multiply(const Element& x, const Element& y);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

/// F2-combination of monomial pairs (the coproduct's codomain).
class TensorElement {
public:
    explicit TensorElement(SpaceContext space) : space_(space) {}

    const SpaceContext& space() const { return space_; }
    const std::set<std::pair<Monomial, Monomial>>& pairs() const { return pairs_; }
    bool is_zero() const { return pairs_.empty(); }

    void toggle(Monomial left, Monomial right);
    void add_in_place(const TensorElement& other);

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    SpaceContext space_;
    std::set<std::pair<Monomial, Monomial>> pairs_;
};

TensorElement multiply(const TensorElement& x, const TensorElement& y);

/// All basis generators of the context's polynomial algebra with dimension
/// at most max_dim, in canonical order.
std::vector<GenMonomial> algebra_generators(const SpaceContext& space, int max_dim);

/// The complete canonical list of degree-d basis monomials.
std::vector<Monomial> enumerate_basis(const SpaceContext& space, int d);

/// Kernel of the F2-linear map vectors[k] |-> images[k], returned as a basis
/// of combinations of `vectors`.  Deterministic pivots, lowest canonical
/// index first.  Rejects mismatched lengths.
std::vector<Element> solve_f2(const std::vector<Element>& vectors,
                              const std::vector<Element>& images);

/// Same kernel computation against tensor-valued images.
std::vector<Element> solve_f2_tensor(const std::vector<Element>& vectors,
                                     const std::vector<TensorElement>& images);

} // namespace loopcalc

#endif
