#include "algame/finite_ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "algame/errors.hpp"
#include "algame/numtheory.hpp"

namespace algame {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t k) {
    v %= k;
    return v < 0 ? v + k : v;
}

} // namespace

std::vector<std::int64_t> FiniteCommRing::coords(int id) const {
    std::vector<std::int64_t> c(additive_orders_.size());
    std::int64_t v = id;
    for (std::size_t i = additive_orders_.size(); i-- > 0;) {
        c[i] = v % additive_orders_[i];
        v /= additive_orders_[i];
    }
    return c;
}

int FiniteCommRing::id_of(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != additive_orders_.size())
        throw std::invalid_argument("coordinate count does not match the ring");
    std::int64_t id = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        id = id * additive_orders_[i] + mod_reduce(coords[i], additive_orders_[i]);
    return static_cast<int>(id);
}

std::string FiniteCommRing::label(int id) const {
    std::vector<std::int64_t> c = coords(id);
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s;
}

FiniteCommRing FiniteCommRing::from_structure_constants(
    std::vector<std::int64_t> additive_orders, std::vector<std::int64_t> one,
    std::vector<std::vector<std::vector<std::int64_t>>> basis_products) {
    const std::size_t d0 = additive_orders.size();
    if (one.size() != d0 || basis_products.size() != d0)
        throw std::invalid_argument("structure constant shapes do not match");
    for (const auto& row : basis_products)
        if (row.size() != d0) throw std::invalid_argument("basis product table is not square");

    // Trivial additive summands (k_i = 1) carry nothing; drop them.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d0; ++i) {
        if (additive_orders[i] < 1) throw std::invalid_argument("additive orders must be >= 1");
        if (additive_orders[i] > 1) keep.push_back(i);
    }
    FiniteCommRing r;
    for (std::size_t i : keep) r.additive_orders_.push_back(additive_orders[i]);
    const std::size_t d = keep.size();
    auto project = [&](const std::vector<std::int64_t>& full) {
        if (full.size() != d0) throw std::invalid_argument("coordinate vector shape mismatch");
        std::vector<std::int64_t> out(d);
        for (std::size_t i = 0; i < d; ++i)
            out[i] = mod_reduce(full[keep[i]], r.additive_orders_[i]);
        return out;
    };
    r.one_ = project(one);
    r.basis_products_.assign(d, std::vector<std::vector<std::int64_t>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            r.basis_products_[i][j] = project(basis_products[keep[i]][keep[j]]);

    r.size_ = 1;
    for (std::int64_t k : r.additive_orders_) {
        r.size_ *= k;
        if (r.size_ > kSizeCap) throw resource_limit_error("ring size exceeds the construction cap");
    }

    auto add_coords = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::vector<std::int64_t> c(d);
        for (std::size_t i = 0; i < d; ++i) c[i] = mod_reduce(a[i] + b[i], r.additive_orders_[i]);
        return c;
    };
    auto scale_coords = [&](std::int64_t s, const std::vector<std::int64_t>& a) {
        std::vector<std::int64_t> c(d);
        for (std::size_t i = 0; i < d; ++i)
            c[i] = mod_reduce(mod_reduce(s, r.additive_orders_[i]) * a[i], r.additive_orders_[i]);
        return c;
    };
    auto mul_coords = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::vector<std::int64_t> c(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b[j] == 0) continue;
                c = add_coords(c, scale_coords(a[i] * b[j], r.basis_products_[i][j]));
            }
        }
        return c;
    };

    std::vector<std::vector<std::int64_t>> basis(d, std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) basis[i][i] = 1;

    // Basis-level axioms; bilinearity then gives them on all elements.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (r.basis_products_[i][j] != r.basis_products_[j][i])
                throw std::invalid_argument("basis products are not commutative");
            auto killed = scale_coords(r.additive_orders_[i], r.basis_products_[i][j]);
            for (std::int64_t v : killed)
                if (v != 0)
                    throw std::invalid_argument("basis product incompatible with additive orders");
        }
    for (std::size_t i = 0; i < d; ++i) {
        if (mul_coords(r.one_, basis[i]) != basis[i])
            throw std::invalid_argument("unit law fails on the basis");
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (mul_coords(r.basis_products_[i][j], basis[k]) !=
                    mul_coords(basis[i], r.basis_products_[j][k]))
                    throw std::invalid_argument("basis products are not associative");
    }

    const std::size_t n = static_cast<std::size_t>(r.size_);
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    r.neg_.resize(n);
    std::vector<std::vector<std::int64_t>> cs(n);
    for (std::size_t a = 0; a < n; ++a) cs[a] = r.coords(static_cast<int>(a));
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::int64_t> na(d);
        for (std::size_t i = 0; i < d; ++i) na[i] = mod_reduce(-cs[a][i], r.additive_orders_[i]);
        r.neg_[a] = static_cast<std::uint16_t>(r.id_of(na));
        for (std::size_t b = 0; b < n; ++b) {
            r.add_[a * n + b] = static_cast<std::uint16_t>(r.id_of(add_coords(cs[a], cs[b])));
            r.mul_[a * n + b] = static_cast<std::uint16_t>(r.id_of(mul_coords(cs[a], cs[b])));
        }
    }
    r.one_id_ = r.id_of(r.one_);

    std::uint64_t h = fnv1a(0xcbf29ce484222325ULL, n);
    for (std::int64_t k : r.additive_orders_) h = fnv1a(h, static_cast<std::uint64_t>(k));
    for (std::uint16_t v : r.mul_) h = fnv1a(h, v);
    r.fingerprint_ = h;
    return r;
}

bool FiniteCommRing::validate_exhaustive() const {
    const int n = static_cast<int>(size_);
    for (int a = 0; a < n; ++a) {
        if (mul(one_id_, a) != a) return false;
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) != mul(b, a)) return false;
            for (int c = 0; c < n; ++c) {
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Constructors

FiniteCommRing z_mod(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("z_mod: n must be >= 1");
    return FiniteCommRing::from_structure_constants({n}, {1}, {{{1}}});
}

FiniteCommRing gf_p(std::int64_t p) {
    if (!nt::is_prime(p)) throw std::invalid_argument("gf_p: p must be prime");
    return z_mod(p);
}

FiniteCommRing product(const FiniteCommRing& r, const FiniteCommRing& s) {
    const int dr = r.dim(), ds = s.dim(), d = dr + ds;
    std::vector<std::int64_t> orders = r.additive_orders();
    orders.insert(orders.end(), s.additive_orders().begin(), s.additive_orders().end());

    std::vector<std::int64_t> one(d, 0);
    {
        auto ro = r.coords(r.one_id());
        auto so = s.coords(s.one_id());
        for (int i = 0; i < dr; ++i) one[i] = ro[i];
        for (int i = 0; i < ds; ++i) one[dr + i] = so[i];
    }

    std::vector<std::vector<std::vector<std::int64_t>>> prods(
        d, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
    auto basis_id = [](const FiniteCommRing& ring, int i) {
        std::vector<std::int64_t> e(ring.dim(), 0);
        e[i] = 1;
        return ring.id_of(e);
    };
    for (int i = 0; i < dr; ++i)
        for (int j = 0; j < dr; ++j) {
            auto c = r.coords(r.mul(basis_id(r, i), basis_id(r, j)));
            for (int k = 0; k < dr; ++k) prods[i][j][k] = c[k];
        }
    for (int i = 0; i < ds; ++i)
        for (int j = 0; j < ds; ++j) {
            auto c = s.coords(s.mul(basis_id(s, i), basis_id(s, j)));
            for (int k = 0; k < ds; ++k) prods[dr + i][dr + j][dr + k] = c[k];
        }
    return FiniteCommRing::from_structure_constants(std::move(orders), std::move(one),
                                                    std::move(prods));
}

FiniteCommRing square_zero_extension(std::int64_t p, int dim_v) {
    if (!nt::is_prime(p)) throw std::invalid_argument("square_zero_extension: p must be prime");
    if (dim_v < 0) throw std::invalid_argument("square_zero_extension: dim must be >= 0");
    const int d = 1 + dim_v;
    std::vector<std::int64_t> orders(d, p);
    std::vector<std::int64_t> one(d, 0);
    one[0] = 1;
    std::vector<std::vector<std::vector<std::int64_t>>> prods(
        d, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
    prods[0][0][0] = 1;
    for (int i = 1; i < d; ++i) {
        prods[0][i][i] = 1; // 1 * v = v
        prods[i][0][i] = 1;
    }
    return FiniteCommRing::from_structure_constants(std::move(orders), std::move(one),
                                                    std::move(prods));
}

FiniteCommRing cusp_truncation(std::int64_t p, int n) {
    if (!nt::is_prime(p)) throw std::invalid_argument("cusp_truncation: p must be prime");
    if (n < 0) throw std::invalid_argument("cusp_truncation: n must be >= 0");
    // Basis 1, X, ..., X^n, Y, XY, ..., X^{n-1}Y; multiplication reduces by
    // Y^2 -> X^3, X^{n+1} -> 0, X^n Y -> 0.
    const int d = 2 * n + 1;
    auto idx = [&](int a, int b) { return b == 0 ? a : n + 1 + a; };
    std::vector<std::int64_t> orders(d, p);
    std::vector<std::int64_t> one(d, 0);
    one[0] = 1;
    std::vector<std::vector<std::vector<std::int64_t>>> prods(
        d, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
    auto monomial = [&](int a, int b) { // X^a Y^b as coordinates; zero if truncated
        std::vector<std::int64_t> c(d, 0);
        if (b >= 2) { // Y^2 = X^3
            a += 3 * (b / 2);
            b %= 2;
        }
        bool zero = b == 0 ? a > n : a > n - 1;
        if (!zero) c[idx(a, b)] = 1;
        return c;
    };
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= 1; ++b) {
            if (b == 1 && a > n - 1) continue;
            for (int c = 0; c <= n; ++c)
                for (int e = 0; e <= 1; ++e) {
                    if (e == 1 && c > n - 1) continue;
                    prods[idx(a, b)][idx(c, e)] = monomial(a + c, b + e);
                }
        }
    return FiniteCommRing::from_structure_constants(std::move(orders), std::move(one),
                                                    std::move(prods));
}

FiniteCommRing dual_truncated(std::int64_t p, int n) {
    if (!nt::is_prime(p)) throw std::invalid_argument("dual_truncated: p must be prime");
    if (n < 1) throw std::invalid_argument("dual_truncated: n must be >= 1");
    std::vector<std::int64_t> orders{nt::ipow(p, n), nt::ipow(p, n - 1)};
    std::vector<std::int64_t> one{1, 0};
    std::vector<std::vector<std::vector<std::int64_t>>> prods{
        {{1, 0}, {0, 1}},
        {{0, 1}, {0, 0}}, // X * X = 0
    };
    return FiniteCommRing::from_structure_constants(std::move(orders), std::move(one),
                                                    std::move(prods));
}

FiniteCommRing monomial_ring(std::int64_t p, int n, int m) {
    if (!nt::is_prime(p)) throw std::invalid_argument("monomial_ring: p must be prime");
    if (n < 1 || m < 1) throw std::invalid_argument("monomial_ring: exponents must be >= 1");
    // Basis 1, X..X^{n-1}, Y..Y^{m-1}; XY = 0.
    const int d = 1 + (n - 1) + (m - 1);
    auto xi = [&](int a) { return a; };          // X^a, a <= n-1 (a = 0 is the unit slot)
    auto yi = [&](int b) { return n - 1 + b; };  // Y^b, 1 <= b <= m-1
    std::vector<std::int64_t> orders(d, p);
    std::vector<std::int64_t> one(d, 0);
    one[0] = 1;
    std::vector<std::vector<std::vector<std::int64_t>>> prods(
        d, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
    auto xmon = [&](int a) {
        std::vector<std::int64_t> c(d, 0);
        if (a <= n - 1) c[xi(a)] = 1;
        return c;
    };
    auto ymon = [&](int b) {
        std::vector<std::int64_t> c(d, 0);
        if (b == 0)
            c[0] = 1;
        else if (b <= m - 1)
            c[yi(b)] = 1;
        return c;
    };
    for (int a = 0; a <= n - 1; ++a)
        for (int c = 0; c <= n - 1; ++c) prods[xi(a)][xi(c)] = xmon(a + c);
    for (int b = 1; b <= m - 1; ++b)
        for (int e = 1; e <= m - 1; ++e) prods[yi(b)][yi(e)] = ymon(b + e);
    for (int b = 1; b <= m - 1; ++b) {
        prods[xi(0)][yi(b)] = ymon(b); // 1 * Y^b; X^a Y^b = 0 stays zero-initialized
        prods[yi(b)][xi(0)] = ymon(b);
    }
    return FiniteCommRing::from_structure_constants(std::move(orders), std::move(one),
                                                    std::move(prods));
}

// ---------------------------------------------------------------------------
// Ideals

bool Ideal::contains(int a) const {
    return std::binary_search(elements_.begin(), elements_.end(), a);
}

Ideal principal_ideal(const FiniteCommRing& r, int a) {
    std::vector<char> in(r.size(), 0);
    std::vector<int> out;
    for (int x = 0; x < r.size(); ++x) {
        int v = r.mul(x, a);
        if (!in[v]) {
            in[v] = 1;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return Ideal(std::move(out));
}

Ideal ideal_extend(const FiniteCommRing& r, const Ideal& i, int a) {
    if (i.contains(a)) throw std::invalid_argument("element already in the ideal");
    Ideal pa = principal_ideal(r, a);
    std::vector<char> in(r.size(), 0);
    std::vector<int> out;
    for (int x : i.elements())
        for (int t : pa.elements()) {
            int v = r.add(x, t);
            if (!in[v]) {
                in[v] = 1;
                out.push_back(v);
            }
        }
    std::sort(out.begin(), out.end());
    return Ideal(std::move(out));
}

bool is_ideal(const FiniteCommRing& r, const Ideal& i) {
    std::vector<char> in(r.size(), 0);
    for (int x : i.elements()) in[x] = 1;
    if (!in[0]) return false;
    for (int x : i.elements()) {
        if (!in[r.neg(x)]) return false;
        for (int y : i.elements())
            if (!in[r.add(x, y)]) return false;
        for (int s = 0; s < r.size(); ++s)
            if (!in[r.mul(s, x)]) return false;
    }
    return true;
}

bool has_nontrivial_idempotent(const FiniteCommRing& r) {
    for (int e = 0; e < r.size(); ++e) {
        if (e == r.zero_id() || e == r.one_id()) continue;
        if (r.mul(e, e) == e) return true;
    }
    return false;
}

bool is_field(const FiniteCommRing& r) {
    if (r.size() < 2) return false;
    for (int a = 1; a < r.size(); ++a) {
        bool invertible = false;
        for (int b = 1; b < r.size(); ++b)
            if (r.mul(a, b) == r.one_id()) {
                invertible = true;
                break;
            }
        if (!invertible) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// The ring game

RingGamePosition::RingGamePosition(std::shared_ptr<const FiniteCommRing> r, Ideal current)
    : r_(std::move(r)), current_(std::move(current)) {}

std::string RingGamePosition::key() const {
    std::string k = "ri:" + hex64(r_->fingerprint()) + ":";
    const auto& e = current_.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(e[i]);
    }
    return k;
}

namespace {

// Distinct one-move extensions, ascending by generator; elements of an
// already-seen additive coset a + I are skipped.
std::vector<std::pair<int, Ideal>> scan_ring_extensions(const FiniteCommRing& r, const Ideal& i) {
    std::vector<char> covered(r.size(), 0);
    for (int e : i.elements()) covered[e] = 1;
    std::vector<std::pair<int, Ideal>> out;
    std::unordered_set<std::string> seen;
    for (int a = 0; a < r.size(); ++a) {
        if (covered[a]) continue;
        Ideal j = ideal_extend(r, i, a);
        std::string sig;
        for (int e : j.elements()) sig += std::to_string(e) + ",";
        if (seen.insert(sig).second) out.emplace_back(a, std::move(j));
        for (int e : i.elements()) covered[r.add(e, a)] = 1;
    }
    return out;
}

} // namespace

std::vector<PositionPtr> RingGamePosition::options() const {
    std::vector<PositionPtr> out;
    for (auto& [a, j] : scan_ring_extensions(*r_, current_))
        out.push_back(std::make_shared<RingGamePosition>(r_, std::move(j)));
    return out;
}

std::vector<int> RingGamePosition::option_generators() const {
    std::vector<int> out;
    for (auto& [a, j] : scan_ring_extensions(*r_, current_)) out.push_back(a);
    return out;
}

PositionPtr ring_game_start(std::shared_ptr<const FiniteCommRing> r) {
    return std::make_shared<RingGamePosition>(std::move(r), Ideal());
}

Outcome ring_game_outcome(const std::shared_ptr<const FiniteCommRing>& r, Solver& solver,
                          std::int64_t max_size) {
    if (r->size() > max_size)
        throw resource_limit_error("ring size " + std::to_string(r->size()) +
                                   " exceeds the game cap " + std::to_string(max_size));
    return solver.outcome(ring_game_start(r));
}

Ordinal ring_nimber(const std::shared_ptr<const FiniteCommRing>& r, Solver& solver,
                    std::int64_t max_size) {
    if (r->size() > max_size)
        throw resource_limit_error("ring size " + std::to_string(r->size()) +
                                   " exceeds the game cap " + std::to_string(max_size));
    return solver.nimber(ring_game_start(r));
}

} // namespace algame
