#ifndef ALGAME_ABELIAN_HPP
#define ALGAME_ABELIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "algame/engine.hpp"
#include "algame/ordinal.hpp"

namespace algame {

/// Finitely generated abelian group in canonical form: an invariant-factor
/// chain d_1 | d_2 | ... | d_s (all d_i >= 2) plus the number of Z summands.
/// Two isomorphic groups have identical (torsion, rank).
class FinGenAbGroup {
public:
    FinGenAbGroup() = default; // trivial group
    FinGenAbGroup(std::vector<std::int64_t> torsion, int rank);

    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    int rank() const { return rank_; }

    bool is_trivial() const { return torsion_.empty() && rank_ == 0; }
    bool is_finite() const { return rank_ == 0; }
    /// Product of the invariant factors; requires a finite group.
    std::int64_t order() const;
    /// Length of the torsion part: sum of Omega(d_i).
    int torsion_length() const;

    std::string to_string() const;

    friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;
    friend bool operator<(const FinGenAbGroup& a, const FinGenAbGroup& b) {
        if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
        return a.torsion_ < b.torsion_;
    }

private:
    std::vector<std::int64_t> torsion_;
    int rank_ = 0;
};

/// Element of a FinGenAbGroup: one residue per torsion factor (reduced mod
/// d_i) followed by one integer per Z summand.
struct AbElement {
    std::vector<std::int64_t> residues;
    std::vector<std::int64_t> free_coords;

    bool is_zero() const;
    std::string to_string() const;
};

/// Invariant-factor form of the direct sum of Z/orders[i], with Z/0 = Z and
/// Z/1 dropped. Entries must be >= 0.
FinGenAbGroup canonicalize(const std::vector<std::int64_t>& orders);

/// Direct sum, re-canonicalized.
FinGenAbGroup direct_sum(const FinGenAbGroup& a, const FinGenAbGroup& b);

/// All isomorphism classes reachable in one move: chains m with
/// m_i | n_i and n_{i-1} | m_i (n_0 = 1), m != n, canonicalized and
/// deduplicated, sorted. Throws unsupported_error("infinite option set")
/// when rank > 0.
std::vector<FinGenAbGroup> options(const FinGenAbGroup& a);

/// Canonical form of A/<x>, computed from the Smith normal form of the
/// relation matrix. x must be nonzero in A.
FinGenAbGroup quotient_by_element(const FinGenAbGroup& a, const AbElement& x);

/// Reduces an element's residues into canonical range.
AbElement reduce_element(const FinGenAbGroup& a, AbElement x);

/// Order of x in a finite group.
std::int64_t element_order(const FinGenAbGroup& a, const AbElement& x);

/// All elements of a finite group, in lexicographic coordinate order.
std::vector<AbElement> all_elements(const FinGenAbGroup& a);

/// The explicit element realizing the option chain m (same length as the
/// torsion chain of a, entries m_i | n_i, n_{i-1} | m_i).
AbElement option_realizing_element(const FinGenAbGroup& a, const std::vector<std::int64_t>& m);

/// True iff A is isomorphic to B x B: even rank and a torsion chain made of
/// equal pairs. (In canonical form an odd-length chain is never a square.)
bool is_square(const FinGenAbGroup& a);

/// True iff A is finite and a vector space over F_p for some prime p;
/// the trivial group counts (dimension 0).
bool is_elementary_abelian(const FinGenAbGroup& a);

/// Closed-form outcome: normal P iff square; misere P iff elementary
/// abelian of odd dimension, or a square that is not finite elementary
/// abelian.
Outcome outcome_classifier(const FinGenAbGroup& a);

/// An explicit x with A/<x> a P-position under the rule. A must be an
/// N-position under the rule (and non-trivial).
AbElement winning_move(const FinGenAbGroup& a, Rule rule);

/// Engine adapter for the game of a finite abelian group.
class AbelianPosition final : public Position {
public:
    explicit AbelianPosition(FinGenAbGroup g) : g_(std::move(g)) {}

    const FinGenAbGroup& group() const { return g_; }

    std::string key() const override;
    bool terminal() const override { return g_.is_trivial(); }
    std::vector<PositionPtr> options() const override;

private:
    FinGenAbGroup g_;
};

PositionPtr abelian_position(FinGenAbGroup g);

/// Sprague-Grundy value via the generic engine; finite groups only.
Ordinal nimber_bruteforce(const FinGenAbGroup& a, Solver& solver);
Outcome outcome_bruteforce(const FinGenAbGroup& a, Solver& solver);

/// Closed-form nimber of Z/p^n + Z/p^m for n <= m:
/// n + m if n <= T_k, else T_k + ((n - T_k - 1) mod (k+1)), with k = m - n
/// and T_k the triangular number.
std::int64_t nimber_2gen_formula(std::int64_t n, std::int64_t m);

/// Replaces the chain n_1 | ... | n_s by p^Omega(n_1) | ... | p^Omega(n_s);
/// the nimber is invariant under this reduction. Finite groups only.
FinGenAbGroup omega_reduce(const FinGenAbGroup& a, std::int64_t p = 2);

/// Closed-form nimber for the supported families: finite with at most two
/// invariant factors, Z, and Z/n + Z. Throws unsupported_error otherwise.
Ordinal nimber_formula(const FinGenAbGroup& a);

struct ConjecturedNimber {
    std::int64_t value;
    bool trusted; // only the n2 > T_{k+n1+1} branch is reliable
};

/// The experimental three-generator formula; never feeds the solver, used
/// for comparison reports only.
ConjecturedNimber conjectured_nimber_3gen(std::int64_t n1, std::int64_t n2, std::int64_t n3);

} // namespace algame

#endif
