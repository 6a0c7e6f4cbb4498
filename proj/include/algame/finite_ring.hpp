#ifndef ALGAME_FINITE_RING_HPP
#define ALGAME_FINITE_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "algame/engine.hpp"

namespace algame {

/// Finite commutative unital ring with explicit structure constants. The
/// additive group is a direct sum of Z/k_i with basis e_i; elements are
/// coordinate vectors flattened to ids in mixed-radix order (first
/// coordinate most significant). Commutativity, associativity and
/// well-definedness of the bilinear product are validated on the basis at
/// construction; validate_exhaustive() re-checks the axioms element-wise.
class FiniteCommRing {
public:
    static constexpr std::int64_t kSizeCap = 512;

    static FiniteCommRing from_structure_constants(std::vector<std::int64_t> additive_orders,
                                                   std::vector<std::int64_t> one,
                                                   std::vector<std::vector<std::vector<std::int64_t>>> basis_products);

    std::int64_t size() const { return size_; }
    int dim() const { return static_cast<int>(additive_orders_.size()); }
    const std::vector<std::int64_t>& additive_orders() const { return additive_orders_; }

    int zero_id() const { return 0; }
    int one_id() const { return one_id_; }

    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
    int neg(int a) const { return neg_[a]; }

    std::vector<std::int64_t> coords(int id) const;
    int id_of(const std::vector<std::int64_t>& coords) const;
    std::string label(int id) const;

    bool validate_exhaustive() const;

    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    FiniteCommRing() = default;

    std::vector<std::int64_t> additive_orders_;
    std::vector<std::int64_t> one_;
    std::vector<std::vector<std::vector<std::int64_t>>> basis_products_;
    std::int64_t size_ = 1;
    int one_id_ = 0;
    std::vector<std::uint16_t> add_, mul_, neg_;
    std::uint64_t fingerprint_ = 0;
};

/// Z/n with its usual ring structure (the trivial ring for n = 1).
FiniteCommRing z_mod(std::int64_t n);
/// The prime field F_p.
FiniteCommRing gf_p(std::int64_t p);
FiniteCommRing product(const FiniteCommRing& r, const FiniteCommRing& s);
/// K + V over K = F_p with dim V = d and V*V = 0.
FiniteCommRing square_zero_extension(std::int64_t p, int d);
/// F_p[X,Y]/(Y^2 - X^3, X^{n+1}, X^n Y), basis 1..X^n, Y..X^{n-1}Y.
FiniteCommRing cusp_truncation(std::int64_t p, int n);
/// (Z/p^n)[X]/(X^2, p^{n-1} X): additive orders [p^n, p^{n-1}] and
/// (a+bX)(c+dX) = ac + (ad+bc)X. The field F_p for n = 1.
FiniteCommRing dual_truncated(std::int64_t p, int n);
/// F_p[X,Y]/(X^n, XY, Y^m).
FiniteCommRing monomial_ring(std::int64_t p, int n, int m);

/// Ideal of a fixed ambient ring: sorted element ids.
class Ideal {
public:
    Ideal() : elements_{0} {}
    explicit Ideal(std::vector<int> sorted_elements) : elements_(std::move(sorted_elements)) {}

    const std::vector<int>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(int a) const;

    friend bool operator==(const Ideal&, const Ideal&) = default;

private:
    std::vector<int> elements_;
};

/// { r*a : r in R }.
Ideal principal_ideal(const FiniteCommRing& r, int a);
/// I + <a> for a not in I; strictly larger.
Ideal ideal_extend(const FiniteCommRing& r, const Ideal& i, int a);
/// Axiom check used by tests: 0, closed under + and -, absorbs products.
bool is_ideal(const FiniteCommRing& r, const Ideal& i);

bool has_nontrivial_idempotent(const FiniteCommRing& r);
bool is_field(const FiniteCommRing& r);

/// Position of the ring game: an ideal I standing for R/I; a move extends I
/// by a generator outside it; terminal when I = R.
class RingGamePosition final : public Position {
public:
    RingGamePosition(std::shared_ptr<const FiniteCommRing> r, Ideal current);

    const Ideal& ideal() const { return current_; }

    std::string key() const override;
    bool terminal() const override { return current_.size() == static_cast<std::size_t>(r_->size()); }
    std::vector<PositionPtr> options() const override;

    /// Generators of the distinct extensions, ascending by element id.
    std::vector<int> option_generators() const;

private:
    std::shared_ptr<const FiniteCommRing> r_;
    Ideal current_;
};

PositionPtr ring_game_start(std::shared_ptr<const FiniteCommRing> r);

Outcome ring_game_outcome(const std::shared_ptr<const FiniteCommRing>& r, Solver& solver,
                          std::int64_t max_size = 512);
Ordinal ring_nimber(const std::shared_ptr<const FiniteCommRing>& r, Solver& solver,
                    std::int64_t max_size = 512);

} // namespace algame

#endif
