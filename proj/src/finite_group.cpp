#include "algame/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
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

} // namespace

namespace {

// Multiplication tables are materialized in full; 5040 (= |S_7|) is the
// largest supported order.
void check_order_cap(std::int64_t order) {
    if (order < 1 || order > 5040)
        throw resource_limit_error("group order " + std::to_string(order) +
                                   " outside the supported range 1..5040");
}

} // namespace

FiniteGroup FiniteGroup::build(std::vector<std::uint16_t> mul, int n,
                               std::vector<std::string> labels, bool assoc_trusted) {
    check_order_cap(n);
    FiniteGroup g;
    g.n_ = n;
    g.mul_ = std::move(mul);
    g.labels_ = std::move(labels);
    if (n < 1 || g.mul_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("multiplication table has the wrong shape");
    for (std::uint16_t v : g.mul_)
        if (v >= n) throw std::invalid_argument("multiplication table entry out of range");
    if (!g.labels_.empty() && g.labels_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("label count does not match the order");

    for (int a = 0; a < n; ++a)
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            throw std::invalid_argument("element 0 is not an identity");

    g.inv_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                found = b;
                break;
            }
        if (found < 0) throw std::invalid_argument("element without a two-sided inverse");
        g.inv_[a] = static_cast<std::uint16_t>(found);
    }

    if (!assoc_trusted) {
        if (n > kValidationCap)
            throw std::invalid_argument("cannot validate associativity beyond order 512");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw std::invalid_argument("multiplication table is not associative");
    }

    g.abelian_ = true;
    for (int a = 0; a < n && g.abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.mul(a, b) != g.mul(b, a)) {
                g.abelian_ = false;
                break;
            }

    std::uint64_t h = fnv1a(0xcbf29ce484222325ULL, static_cast<std::uint64_t>(n));
    for (std::uint16_t v : g.mul_) h = fnv1a(h, v);
    g.fingerprint_ = h;
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul,
                                    std::vector<std::string> labels) {
    const int n = static_cast<int>(mul.size());
    std::vector<std::uint16_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : mul) {
        if (row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("multiplication table is not square");
        for (int v : row) {
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
            flat.push_back(static_cast<std::uint16_t>(v));
        }
    }
    return build(std::move(flat), n, std::move(labels), /*assoc_trusted=*/false);
}

int FiniteGroup::pow(int a, std::int64_t e) const {
    int r = 0, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::string FiniteGroup::label(int a) const {
    if (!labels_.empty()) return labels_[a];
    return std::to_string(a);
}

int FiniteGroup::element_by_label(const std::string& name) const {
    for (int a = 0; a < n_; ++a)
        if (label(a) == name) return a;
    return -1;
}

bool Subgroup::contains(int a) const {
    return std::binary_search(elements_.begin(), elements_.end(), a);
}

// ---------------------------------------------------------------------------
// Constructors

FiniteGroup cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
    check_order_cap(n);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) mul[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
    return FiniteGroup::build(std::move(mul), n, std::move(labels), n > FiniteGroup::kValidationCap);
}

FiniteGroup dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral: n must be >= 1");
    check_order_cap(std::int64_t{2} * n);
    const int order = 2 * n;
    auto id = [&](int i, int f) { return 2 * i + f; };
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(order) * order);
    std::vector<std::string> labels(order);
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 2; ++f) {
            std::string l = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
            if (f) l += l.empty() ? "s" : "*s";
            if (l.empty()) l = "1";
            labels[id(i, f)] = l;
            for (int j = 0; j < n; ++j)
                for (int e = 0; e < 2; ++e) {
                    int k = f ? (i - j % n + n) % n : (i + j) % n;
                    mul[static_cast<std::size_t>(id(i, f)) * order + id(j, e)] = id(k, f ^ e);
                }
        }
    return FiniteGroup::build(std::move(mul), order, std::move(labels),
                              order > FiniteGroup::kValidationCap);
}

FiniteGroup dicyclic(int n) {
    if (n < 1) throw std::invalid_argument("dicyclic: n must be >= 1");
    check_order_cap(std::int64_t{4} * n);
    const int m = 2 * n, order = 4 * n;
    auto id = [&](int i, int e) { return e * m + i; };
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(order) * order);
    std::vector<std::string> labels(order);
    for (int i = 0; i < m; ++i)
        for (int e = 0; e < 2; ++e) {
            std::string l = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
            if (e) l += l.empty() ? "x" : "*x";
            if (l.empty()) l = "1";
            labels[id(i, e)] = l;
            for (int j = 0; j < m; ++j)
                for (int f = 0; f < 2; ++f) {
                    int k, g;
                    if (e == 0) {
                        k = (i + j) % m;
                        g = f;
                    } else if (f == 0) {
                        k = (i - j % m + m) % m;
                        g = 1;
                    } else { // x * x = a^n
                        k = ((i - j % m + m) + n) % m;
                        g = 0;
                    }
                    mul[static_cast<std::size_t>(id(i, e)) * order + id(j, f)] = id(k, g);
                }
        }
    return FiniteGroup::build(std::move(mul), order, std::move(labels),
                              order > FiniteGroup::kValidationCap);
}

namespace {

std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
    return r;
}

std::string one_line(const std::vector<int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

bool even_permutation(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

} // namespace

FiniteGroup FiniteGroup::from_perm_set(std::vector<std::vector<int>> perms) {
    std::sort(perms.begin(), perms.end()); // identity is lexicographically first
    const int order = static_cast<int>(perms.size());
    if (order > 5040) throw resource_limit_error("permutation group too large (order > 5040)");
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < order; ++i) index.emplace(perms[i], i);
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(order) * order);
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) {
        labels[i] = one_line(perms[i]);
        for (int j = 0; j < order; ++j) {
            auto it = index.find(compose(perms[i], perms[j]));
            if (it == index.end()) throw std::logic_error("permutation set not closed");
            mul[static_cast<std::size_t>(i) * order + j] = static_cast<std::uint16_t>(it->second);
        }
    }
    // Composition of functions is associative; skip the cubic check above 512.
    return build(std::move(mul), order, std::move(labels), order > kValidationCap);
}

FiniteGroup symmetric(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("symmetric: supported range is 1 <= n <= 7");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return FiniteGroup::from_perm_set(std::move(perms));
}

FiniteGroup alternating(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("alternating: supported range is 1 <= n <= 7");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do
        if (even_permutation(p)) perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return FiniteGroup::from_perm_set(std::move(perms));
}

FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& generators) {
    if (degree < 1 || degree > 16) throw std::invalid_argument("degree out of range");
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& g : generators) {
        std::vector<int> sorted = g;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != id) throw std::invalid_argument("generator is not a permutation of 0..degree-1");
    }
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> queue{id};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& g : generators) {
            std::vector<int> next = compose(queue[i], g);
            if (seen.insert(next).second) {
                if (seen.size() > 5040) throw resource_limit_error("generated group exceeds order 5040");
                queue.push_back(std::move(next));
            }
        }
    }
    return FiniteGroup::from_perm_set({seen.begin(), seen.end()});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    check_order_cap(std::int64_t{g.order()} * h.order());
    const int n = g.order() * h.order();
    auto id = [&](int a, int b) { return a * h.order() + b; };
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) {
            labels[id(a, b)] = "(" + g.label(a) + "," + h.label(b) + ")";
            for (int c = 0; c < g.order(); ++c)
                for (int d = 0; d < h.order(); ++d)
                    mul[static_cast<std::size_t>(id(a, b)) * n + id(c, d)] =
                        static_cast<std::uint16_t>(id(g.mul(a, c), h.mul(b, d)));
        }
    // Factors are validated groups, so the product table is associative.
    return FiniteGroup::build(std::move(mul), n, std::move(labels), n > FiniteGroup::kValidationCap);
}

FiniteGroup semidirect_by_cyclic(const FiniteGroup& a, const std::vector<int>& sigma, int m) {
    const int na = a.order();
    if (m < 1) throw std::invalid_argument("semidirect: m must be >= 1");
    check_order_cap(std::int64_t{na} * m);
    if (sigma.size() != static_cast<std::size_t>(na))
        throw std::invalid_argument("sigma must map every element of A");
    std::vector<char> hit(na, 0);
    for (int v : sigma) {
        if (v < 0 || v >= na || hit[v]) throw std::invalid_argument("sigma is not a bijection");
        hit[v] = 1;
    }
    if (sigma[0] != 0) throw std::invalid_argument("sigma must fix the identity");
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            if (sigma[a.mul(x, y)] != a.mul(sigma[x], sigma[y]))
                throw std::invalid_argument("sigma is not an automorphism");

    // Powers of sigma; sigma^m must be the identity map.
    std::vector<std::vector<int>> pow(m);
    pow[0].resize(na);
    std::iota(pow[0].begin(), pow[0].end(), 0);
    for (int k = 1; k < m; ++k) {
        pow[k].resize(na);
        for (int x = 0; x < na; ++x) pow[k][x] = sigma[pow[k - 1][x]];
    }
    for (int x = 0; x < na; ++x) {
        int last = sigma[pow[m - 1][x]];
        if (last != x) throw std::invalid_argument("sigma^m is not the identity");
    }

    const int n = na * m;
    auto id = [&](int x, int k) { return x * m + k; };
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int x = 0; x < na; ++x)
        for (int k = 0; k < m; ++k) {
            labels[id(x, k)] = "(" + a.label(x) + ";" + std::to_string(k) + ")";
            for (int y = 0; y < na; ++y)
                for (int l = 0; l < m; ++l)
                    mul[static_cast<std::size_t>(id(x, k)) * n + id(y, l)] =
                        static_cast<std::uint16_t>(id(a.mul(x, pow[k][y]), (k + l) % m));
        }
    return FiniteGroup::build(std::move(mul), n, std::move(labels),
                              n > FiniteGroup::kValidationCap);
}

FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw std::invalid_argument("quotient by a non-normal subgroup");
    const int order = g.order();
    std::vector<int> coset_of(order, -1), reps;
    for (int x = 0; x < order; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : n.elements()) coset_of[g.mul(x, h)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::uint16_t> mul(static_cast<std::size_t>(q) * q);
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) {
        labels[i] = "[" + g.label(reps[i]) + "]";
        for (int j = 0; j < q; ++j)
            mul[static_cast<std::size_t>(i) * q + j] =
                static_cast<std::uint16_t>(coset_of[g.mul(reps[i], reps[j])]);
    }
    return FiniteGroup::build(std::move(mul), q, std::move(labels),
                              q > FiniteGroup::kValidationCap);
}

FiniteGroup order16(int id) {
    switch (id) {
    case 3: {
        // (Z/4 x Z/2) x| Z/2 with a -> ab, b -> b.
        FiniteGroup a = direct_product(cyclic(4), cyclic(2));
        std::vector<int> sigma(8);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) sigma[i * 2 + j] = i * 2 + (i + j) % 2;
        return semidirect_by_cyclic(a, sigma, 2);
    }
    case 4: {
        // Z/4 x|_3 Z/4.
        std::vector<int> sigma(4);
        for (int i = 0; i < 4; ++i) sigma[i] = 3 * i % 4;
        return semidirect_by_cyclic(cyclic(4), sigma, 4);
    }
    case 6: {
        std::vector<int> sigma(8);
        for (int i = 0; i < 8; ++i) sigma[i] = 5 * i % 8;
        return semidirect_by_cyclic(cyclic(8), sigma, 2);
    }
    case 7:
        return dihedral(8);
    case 8: {
        std::vector<int> sigma(8);
        for (int i = 0; i < 8; ++i) sigma[i] = 3 * i % 8;
        return semidirect_by_cyclic(cyclic(8), sigma, 2);
    }
    case 9:
        return dicyclic(4);
    case 11:
        return direct_product(dihedral(4), cyclic(2));
    case 12:
        return direct_product(dicyclic(2), cyclic(2));
    case 13: {
        // Central product D_4 o Z/4: quotient of D_4 x Z/4 by the diagonal
        // central subgroup of order 2 generated by (r^2, 2).
        FiniteGroup p = direct_product(dihedral(4), cyclic(4));
        int r2 = 4;            // (i=2, f=0) in the dihedral encoding
        int e = r2 * 4 + 2;    // (r^2, 2)
        Subgroup n = generated_subgroup(p, {e});
        if (n.size() != 2) throw std::logic_error("central subgroup of order 2 expected");
        return quotient_group(p, n);
    }
    default:
        throw std::invalid_argument("order16: non-abelian ids are 3,4,6,7,8,9,11,12,13");
    }
}

FiniteGroup nonabelian_pq(int p, int q) {
    if (!nt::is_prime(p) || !nt::is_prime(q) || (q - 1) % p != 0)
        throw std::invalid_argument("nonabelian_pq requires primes with p | q-1");
    check_order_cap(std::int64_t{p} * q);
    int r = -1;
    for (int c = 2; c < q; ++c) {
        std::int64_t v = 1;
        for (int k = 0; k < p; ++k) v = v * c % q;
        if (v == 1) {
            r = c;
            break;
        }
    }
    if (r < 0) throw std::logic_error("no element of order p mod q");
    std::vector<int> sigma(q);
    for (int i = 0; i < q; ++i) sigma[i] = static_cast<int>(std::int64_t{r} * i % q);
    return semidirect_by_cyclic(cyclic(q), sigma, p);
}

// ---------------------------------------------------------------------------
// Subgroup machinery

namespace {

Subgroup finish(std::vector<char>& in, std::vector<int> elems) {
    (void)in;
    std::sort(elems.begin(), elems.end());
    return Subgroup(std::move(elems));
}

// Closes `elems` under products; all pairs with both indices < base are
// assumed closed already.
void close_under_products(const FiniteGroup& g, std::vector<char>& in, std::vector<int>& elems,
                          std::size_t base) {
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    };
    for (std::size_t i = base; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(g.mul(elems[i], elems[j]));
            add(g.mul(elems[j], elems[i]));
        }
}

// <U, g> for abelian ambient groups: the union of the cosets g^k U.
Subgroup extend_abelian(const FiniteGroup& g, const Subgroup& u, int extra) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> elems = u.elements();
    for (int e : elems) in[e] = 1;
    std::size_t base_size = elems.size();
    for (int t = extra; !in[t]; t = g.mul(t, extra))
        for (std::size_t i = 0; i < base_size; ++i) {
            int v = g.mul(t, elems[i]);
            if (!in[v]) {
                in[v] = 1;
                elems.push_back(v);
            }
        }
    return finish(in, std::move(elems));
}

} // namespace

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (x < 0 || x >= g.order()) throw std::invalid_argument("seed element out of range");
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    };
    add(0);
    for (int s : seed) add(s);
    close_under_products(g, in, elems, 0);
    return finish(in, std::move(elems));
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<int> conjugates;
    for (int s : seed) {
        if (s < 0 || s >= g.order()) throw std::invalid_argument("seed element out of range");
        for (int x = 0; x < g.order(); ++x) conjugates.push_back(g.mul(g.mul(x, s), g.inv(x)));
    }
    return generated_subgroup(g, conjugates);
}

Subgroup extend_subgroup(const FiniteGroup& g, const Subgroup& u, int extra) {
    if (u.contains(extra)) throw std::invalid_argument("element already in the subgroup");
    if (g.is_abelian()) return extend_abelian(g, u, extra);
    std::vector<char> in(g.order(), 0);
    std::vector<int> elems = u.elements();
    for (int e : elems) in[e] = 1;
    std::size_t base = elems.size();
    in[extra] = 1;
    elems.push_back(extra);
    close_under_products(g, in, elems, base);
    return finish(in, std::move(elems));
}

Subgroup extend_normal(const FiniteGroup& g, const Subgroup& u, int extra) {
    if (u.contains(extra)) throw std::invalid_argument("element already in the subgroup");
    if (g.is_abelian()) return extend_abelian(g, u, extra);
    std::vector<char> in(g.order(), 0);
    std::vector<int> elems = u.elements();
    for (int e : elems) in[e] = 1;
    std::size_t base = elems.size();
    for (int x = 0; x < g.order(); ++x) {
        int c = g.mul(g.mul(x, extra), g.inv(x));
        if (!in[c]) {
            in[c] = 1;
            elems.push_back(c);
        }
    }
    close_under_products(g, in, elems, base);
    return finish(in, std::move(elems));
}

bool is_normal(const FiniteGroup& g, const Subgroup& u) {
    std::vector<char> in(g.order(), 0);
    for (int e : u.elements()) in[e] = 1;
    if (u.elements().empty() || !in[0]) return false;
    for (int x = 0; x < g.order(); ++x)
        for (int h : u.elements())
            if (!in[g.mul(g.mul(x, h), g.inv(x))]) return false;
    return true;
}

bool is_abelian(const FiniteGroup& g) { return g.is_abelian(); }

FinGenAbGroup to_abelian(const FiniteGroup& g) {
    if (!g.is_abelian()) throw std::invalid_argument("to_abelian requires an abelian group");
    const int n = g.order();
    std::vector<std::int64_t> prime_powers;
    for (const auto& [p, e_total] : nt::factor(n)) {
        // m_k = #{invariant factors whose p-exponent is >= k}, read off the
        // kernel sizes of multiplication by p^k.
        std::vector<int> m;
        std::int64_t prev = 1;
        for (int k = 1;; ++k) {
            std::int64_t pk = nt::ipow(p, k);
            std::int64_t count = 0;
            for (int x = 0; x < n; ++x)
                if (g.pow(x, pk) == 0) ++count;
            if (count == prev) break;
            if (count % prev != 0) throw std::logic_error("kernel sizes are not nested");
            std::int64_t ratio = count / prev;
            int mk = 0;
            while (ratio > 1) {
                if (ratio % p != 0) throw std::logic_error("kernel ratio is not a p-power");
                ratio /= p;
                ++mk;
            }
            m.push_back(mk);
            prev = count;
        }
        m.push_back(0);
        for (std::size_t k = 1; k < m.size(); ++k)
            for (int c = 0; c < m[k - 1] - m[k]; ++c)
                prime_powers.push_back(nt::ipow(p, static_cast<int>(k)));
    }
    return canonicalize(prime_powers);
}

// ---------------------------------------------------------------------------
// Games

GroupGamePosition::GroupGamePosition(std::shared_ptr<const FiniteGroup> g, Subgroup current,
                                     GroupGameKind kind)
    : g_(std::move(g)), current_(std::move(current)), kind_(kind) {}

std::string GroupGamePosition::key() const {
    std::string k = kind_ == GroupGameKind::Quotient ? "gq:" : "sg:";
    k += hex64(g_->fingerprint());
    k += ":";
    const auto& e = current_.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(e[i]);
    }
    return k;
}

namespace {

// Enumerates the distinct one-move extensions, ascending in the generating
// element; elements of an already-seen coset U*g are skipped.
std::vector<std::pair<int, Subgroup>> scan_extensions(const FiniteGroup& g, const Subgroup& u,
                                                      GroupGameKind kind) {
    std::vector<char> covered(g.order(), 0);
    for (int e : u.elements()) covered[e] = 1;
    std::vector<std::pair<int, Subgroup>> out;
    std::unordered_set<std::string> seen;
    for (int x = 0; x < g.order(); ++x) {
        if (covered[x]) continue;
        Subgroup v = kind == GroupGameKind::Quotient ? extend_normal(g, u, x)
                                                     : extend_subgroup(g, u, x);
        std::string sig;
        for (int e : v.elements()) sig += std::to_string(e) + ",";
        if (seen.insert(sig).second) out.emplace_back(x, std::move(v));
        for (int e : u.elements()) covered[g.mul(e, x)] = 1;
    }
    return out;
}

} // namespace

std::vector<PositionPtr> GroupGamePosition::options() const {
    std::vector<PositionPtr> out;
    for (auto& [x, v] : scan_extensions(*g_, current_, kind_))
        out.push_back(std::make_shared<GroupGamePosition>(g_, std::move(v), kind_));
    return out;
}

std::vector<int> GroupGamePosition::option_generators() const {
    std::vector<int> out;
    for (auto& [x, v] : scan_extensions(*g_, current_, kind_)) out.push_back(x);
    return out;
}

PositionPtr group_game_start(std::shared_ptr<const FiniteGroup> g, GroupGameKind kind) {
    return std::make_shared<GroupGamePosition>(std::move(g), Subgroup(), kind);
}

Outcome quotient_game_outcome(const std::shared_ptr<const FiniteGroup>& g, Solver& solver,
                              int max_order) {
    if (g->order() > max_order)
        throw resource_limit_error("group order " + std::to_string(g->order()) +
                                   " exceeds the quotient-game cap " + std::to_string(max_order));
    return solver.outcome(group_game_start(g, GroupGameKind::Quotient));
}

Outcome subgroup_game_outcome(const std::shared_ptr<const FiniteGroup>& g, Solver& solver,
                              int max_order) {
    if (g->order() > max_order)
        throw resource_limit_error("group order " + std::to_string(g->order()) +
                                   " exceeds the subgroup-game cap " + std::to_string(max_order));
    return solver.outcome(group_game_start(g, GroupGameKind::Subgroup));
}

// ---------------------------------------------------------------------------
// Identification

namespace {

int involution_count(const FiniteGroup& g) {
    int c = 0;
    for (int a = 1; a < g.order(); ++a)
        if (g.mul(a, a) == 0) ++c;
    return c;
}

} // namespace

std::string identify_group(const FiniteGroup& g) {
    if (g.is_abelian()) return to_abelian(g).to_string();
    const int n = g.order();
    const int inv2 = involution_count(g);
    switch (n) {
    case 6: return "D3";
    case 8: return inv2 == 5 ? "D4" : "Q8";
    case 10: return "D5";
    case 12:
        if (inv2 == 7) return "D6";
        if (inv2 == 3) return "A4";
        return "Dic3";
    case 14: return "D7";
    default: break;
    }
    std::map<int, int> orders;
    for (int a = 0; a < n; ++a) ++orders[g.element_order(a)];
    std::string sig = "nonabelian(order=" + std::to_string(n);
    for (const auto& [o, c] : orders) sig += "," + std::to_string(o) + "^" + std::to_string(c);
    return sig + ")";
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
    const int n = g.order();
    if (n != h.order()) return false;
    if (n > 16) throw unsupported_error("brute-force isomorphism only below order 16");
    if (g.is_abelian() != h.is_abelian()) return false;
    if (g.is_abelian()) return to_abelian(g) == to_abelian(h);

    std::map<int, int> og, oh;
    for (int a = 0; a < n; ++a) {
        ++og[g.element_order(a)];
        ++oh[h.element_order(a)];
    }
    if (og != oh) return false;

    // Greedy generating sequence for g.
    std::vector<int> gens;
    Subgroup closure = generated_subgroup(g, {});
    while (closure.size() < static_cast<std::size_t>(n)) {
        for (int a = 1; a < n; ++a)
            if (!closure.contains(a)) {
                gens.push_back(a);
                break;
            }
        closure = generated_subgroup(g, gens);
    }

    // Backtrack over image tuples with matching element orders.
    std::vector<int> img(gens.size(), 0);
    auto consistent = [&]() {
        std::vector<int> phi(n, -1);
        phi[0] = 0;
        std::vector<int> known{0};
        for (std::size_t i = 0; i < known.size(); ++i)
            for (std::size_t k = 0; k < gens.size(); ++k) {
                int x = g.mul(known[i], gens[k]);
                int y = h.mul(phi[known[i]], img[k]);
                if (phi[x] == -1) {
                    phi[x] = y;
                    known.push_back(x);
                } else if (phi[x] != y)
                    return false;
            }
        if (known.size() != static_cast<std::size_t>(n)) return false;
        std::vector<char> hit(n, 0);
        for (int v : phi) {
            if (v < 0 || hit[v]) return false;
            hit[v] = 1;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
        return true;
    };
    std::vector<int> stack(gens.size(), 0);
    std::size_t level = 0;
    while (true) {
        if (stack[level] == n) {
            if (level == 0) return false;
            stack[level] = 0;
            ++stack[--level];
            continue;
        }
        int cand = stack[level];
        if (h.element_order(cand) != g.element_order(gens[level])) {
            ++stack[level];
            continue;
        }
        img[level] = cand;
        if (level + 1 < gens.size()) {
            ++level;
            continue;
        }
        if (consistent()) return true;
        ++stack[level];
    }
}

} // namespace algame
