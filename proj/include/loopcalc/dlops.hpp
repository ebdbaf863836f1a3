#ifndef LOOPCALC_DLOPS_HPP
#define LOOPCALC_DLOPS_HPP

#include <optional>

#include "loopcalc/algebra.hpp"

namespace loopcalc {

/// Rewriting fuel guard.  The outermost scope installs the budget (from
/// LOOPCALC_FUEL when set); nested scopes are no-ops.  Exhaustion throws.
class FuelScope {
public:
    FuelScope();
    ~FuelScope();
    FuelScope(const FuelScope&) = delete;
    FuelScope& operator=(const FuelScope&) = delete;

private:
    bool owner_;
};

void burn_fuel();

enum class ScanOrder { LeftToRight, RightToLeft };

/// Q^a on a homogeneous element: additive, Cartan on products, and on a
/// single generator zero below its dimension, the square at it, prepend and
/// normalize above it.
Element apply_Q(int a, const Element& e);

/// Admissible-basis expansion of an arbitrary positive op word acting on a
/// bare generator, rewriting innermost-first.
Element adem_normalize(const OpSequence& word, const Generator& g, const SpaceContext& space);

/// Same expansion through explicit word-level rewriting with a chosen scan
/// order, for confluence checking.
Element adem_normalize_word_order(const OpSequence& word, const Generator& g,
                                  const SpaceContext& space, ScanOrder order);

/// Q_{j_1} ... Q_{j_r} g translated to upper-indexed form, folding
/// innermost-first; Q_0 steps square, so the result is an Element.
Element convert_lower_to_upper(const std::vector<int>& lower, const Generator& g,
                               const SpaceContext& space);

/// Unique lower-index sequence of Q^I g; nullopt (out of model) when a lower
/// index would be <= 0.
std::optional<std::vector<int>> convert_upper_to_lower(const OpSequence& I, const Generator& g);
std::optional<std::vector<int>> lower_indices(const GenMonomial& gm);

/// Snaith weight: 2^length(ops) per generator power, additive with
/// multiplicity over the factors.
long long weight(const Monomial& m);

namespace detail {

/// Q^a with negative indices mapped to zero; no homogeneity precondition.
Element q_elem(int a, const Element& e);

/// Evaluates an op word right-to-left over the family's bottom class.  For
/// zeta families the word must be nonempty and its innermost entry becomes
/// the zeta index.
Element eval_word(const OpSequence& word, const Generator& family, const SpaceContext& space);

/// Q^b applied to the class carried by `rest` over the family; an empty rest
/// over a zeta family denotes the virtual bottom class, so Q^b of it is the
/// generator zeta_b.
Element q_on_rest(int b, const OpSequence& rest, const Generator& family,
                  const SpaceContext& space);

} // namespace detail

} // namespace loopcalc

#endif
