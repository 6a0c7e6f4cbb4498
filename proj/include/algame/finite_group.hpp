#ifndef ALGAME_FINITE_GROUP_HPP
#define ALGAME_FINITE_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algame/abelian.hpp"
#include "algame/engine.hpp"

namespace algame {

/// Finite group given by its multiplication table. Element 0 is the
/// identity. Group axioms are validated at construction: identity and
/// inverses always, associativity exhaustively up to order 512. Larger raw
/// tables are rejected; only tables built from permutation composition
/// (associative by construction) may skip the O(n^3) check.
class FiniteGroup {
public:
    static constexpr int kValidationCap = 512;

    static FiniteGroup from_table(std::vector<std::vector<int>> mul,
                                  std::vector<std::string> labels = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, std::int64_t e) const;
    int element_order(int a) const;
    bool is_abelian() const { return abelian_; }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int a) const;
    /// Element id with the given label, or -1.
    int element_by_label(const std::string& name) const;

    /// Stable identity of this table, used in memo keys.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    FiniteGroup() = default;
    static FiniteGroup build(std::vector<std::uint16_t> mul, int n,
                             std::vector<std::string> labels, bool assoc_trusted);
    static FiniteGroup from_perm_set(std::vector<std::vector<int>> perms);

    int n_ = 1;
    std::vector<std::uint16_t> mul_{0};
    std::vector<std::uint16_t> inv_{0};
    std::vector<std::string> labels_;
    bool abelian_ = true;
    std::uint64_t fingerprint_ = 0;

    friend FiniteGroup cyclic(int);
    friend FiniteGroup dihedral(int);
    friend FiniteGroup dicyclic(int);
    friend FiniteGroup symmetric(int);
    friend FiniteGroup alternating(int);
    friend FiniteGroup from_permutations(int, const std::vector<std::vector<int>>&);
    friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&);
    friend FiniteGroup semidirect_by_cyclic(const FiniteGroup&, const std::vector<int>&, int);
    friend FiniteGroup quotient_group(const FiniteGroup&, const class Subgroup&);
};

/// Subgroup of a fixed ambient group: a sorted list of element ids
/// containing the identity and closed under products and inverses.
class Subgroup {
public:
    Subgroup() : elements_{0} {}
    explicit Subgroup(std::vector<int> sorted_elements) : elements_(std::move(sorted_elements)) {}

    const std::vector<int>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(int a) const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;

private:
    std::vector<int> elements_;
};

FiniteGroup cyclic(int n);
/// D_n of order 2n (D_1 is the 2-element group).
FiniteGroup dihedral(int n);
/// Dic_n of order 4n; Dic_2 is the quaternion group.
FiniteGroup dicyclic(int n);
/// S_n (n <= 7), elements in lexicographic one-line order.
FiniteGroup symmetric(int n);
/// A_n (n <= 7).
FiniteGroup alternating(int n);
/// Group generated by the given permutations of {0, ..., degree-1}.
FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& generators);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// A x| Z/m for an automorphism sigma of A (given as a map on element ids)
/// with sigma^m = id; both conditions are validated.
FiniteGroup semidirect_by_cyclic(const FiniteGroup& a, const std::vector<int>& sigma, int m);
/// Quotient by a normal subgroup (validated); elements are cosets labelled
/// by their smallest representative.
FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n);
/// The non-abelian groups of order 16, numbered as in the standard small
/// group catalogue: ids 3, 4, 6, 7, 8, 9, 11, 12, 13.
FiniteGroup order16(int id);
/// The non-abelian group of order p*q for primes p | q-1.
FiniteGroup nonabelian_pq(int p, int q);

/// Least subgroup containing the seed (closure under products).
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& seed);
/// Least normal subgroup containing the seed (closure under products and
/// conjugation).
Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& seed);
/// <u, extra> starting from a subgroup u.
Subgroup extend_subgroup(const FiniteGroup& g, const Subgroup& u, int extra);
/// Normal closure of u together with extra, for normal u.
Subgroup extend_normal(const FiniteGroup& g, const Subgroup& u, int extra);

bool is_normal(const FiniteGroup& g, const Subgroup& u);

bool is_abelian(const FiniteGroup& g);
/// Invariant factors of an abelian group, recovered from the element counts
/// of the maps x -> p^k x.
FinGenAbGroup to_abelian(const FiniteGroup& g);

enum class GroupGameKind : std::uint8_t {
    Quotient, // positions are normal subgroups N, a move adjoins <<g>> for g not in N
    Subgroup, // positions are subgroups U, a move adjoins g not in U
};

/// Position of either group game over a fixed ambient group.
class GroupGamePosition final : public Position {
public:
    GroupGamePosition(std::shared_ptr<const FiniteGroup> g, Subgroup current, GroupGameKind kind);

    const Subgroup& subgroup() const { return current_; }

    std::string key() const override;
    bool terminal() const override { return current_.size() == static_cast<std::size_t>(g_->order()); }
    std::vector<PositionPtr> options() const override;

    /// Elements generating each distinct option, ascending; used for move
    /// selection in play mode.
    std::vector<int> option_generators() const;

private:
    std::shared_ptr<const FiniteGroup> g_;
    Subgroup current_;
    GroupGameKind kind_;
};

PositionPtr group_game_start(std::shared_ptr<const FiniteGroup> g, GroupGameKind kind);

/// Outcome of the quotient game of G (positions are normal subgroups).
Outcome quotient_game_outcome(const std::shared_ptr<const FiniteGroup>& g, Solver& solver,
                              int max_order = 512);
/// Outcome of the subgroup game of G under both rules.
Outcome subgroup_game_outcome(const std::shared_ptr<const FiniteGroup>& g, Solver& solver,
                              int max_order = 1000);

/// A short isomorphism-type label: abelian invariant factors, or a named
/// non-abelian family detected by invariants (order, involution count, ...).
std::string identify_group(const FiniteGroup& g);

/// Brute-force isomorphism test for small groups (order <= 16).
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

} // namespace algame

#endif
