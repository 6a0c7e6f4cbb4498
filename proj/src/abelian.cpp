#include "algame/abelian.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "algame/errors.hpp"
#include "algame/intmat.hpp"
#include "algame/numtheory.hpp"

namespace algame {

FinGenAbGroup::FinGenAbGroup(std::vector<std::int64_t> torsion, int rank)
    : torsion_(std::move(torsion)), rank_(rank) {
    if (rank_ < 0) throw std::invalid_argument("rank must be >= 0");
    std::int64_t prev = 1;
    for (std::int64_t d : torsion_) {
        if (d < 2) throw std::invalid_argument("torsion entries must be >= 2");
        if (d % prev != 0) throw std::invalid_argument("torsion chain must satisfy d_i | d_{i+1}");
        prev = d;
    }
}

std::int64_t FinGenAbGroup::order() const {
    if (rank_ > 0) throw unsupported_error("order of an infinite group");
    std::int64_t n = 1;
    for (std::int64_t d : torsion_) {
        if (n > std::numeric_limits<std::int64_t>::max() / d) throw std::overflow_error("group order overflow");
        n *= d;
    }
    return n;
}

int FinGenAbGroup::torsion_length() const {
    int len = 0;
    for (std::int64_t d : torsion_) len += nt::omega(d);
    return len;
}

std::string FinGenAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    for (std::int64_t d : torsion_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + std::to_string(d);
    }
    for (int i = 0; i < rank_; ++i) {
        if (!out.empty()) out += " + ";
        out += "Z";
    }
    return out;
}

bool AbElement::is_zero() const {
    auto zero = [](std::int64_t v) { return v == 0; };
    return std::all_of(residues.begin(), residues.end(), zero) &&
           std::all_of(free_coords.begin(), free_coords.end(), zero);
}

std::string AbElement::to_string() const {
    std::string out;
    for (std::int64_t v : residues) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    for (std::int64_t v : free_coords) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out.empty() ? "0" : out;
}

FinGenAbGroup canonicalize(const std::vector<std::int64_t>& orders) {
    int rank = 0;
    std::map<std::int64_t, std::vector<int>> exponents; // prime -> exponents, one per entry containing it
    for (std::int64_t n : orders) {
        if (n < 0) throw std::invalid_argument("orders must be >= 0");
        if (n == 0) {
            ++rank;
            continue;
        }
        if (n == 1) continue;
        for (const auto& [p, e] : nt::factor(n)) exponents[p].push_back(e);
    }
    std::size_t s = 0;
    for (auto& [p, es] : exponents) {
        std::sort(es.begin(), es.end());
        s = std::max(s, es.size());
    }
    std::vector<std::int64_t> chain(s, 1);
    for (const auto& [p, es] : exponents) {
        // Right-align: the largest exponents go into the largest factors.
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::size_t slot = s - es.size() + i;
            chain[slot] *= nt::ipow(p, es[i]);
        }
    }
    // Leading 1s cannot occur (every prime list is right-aligned and s is the
    // longest list), but keep the filter for safety.
    std::vector<std::int64_t> torsion;
    for (std::int64_t d : chain)
        if (d > 1) torsion.push_back(d);
    return FinGenAbGroup(std::move(torsion), rank);
}

FinGenAbGroup direct_sum(const FinGenAbGroup& a, const FinGenAbGroup& b) {
    std::vector<std::int64_t> orders = a.torsion();
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    FinGenAbGroup c = canonicalize(orders);
    return FinGenAbGroup(c.torsion(), a.rank() + b.rank());
}

std::vector<FinGenAbGroup> options(const FinGenAbGroup& a) {
    if (a.rank() > 0) throw unsupported_error("infinite option set");
    const auto& n = a.torsion();
    const std::size_t s = n.size();

    // Per slot, the admissible m_i: multiples of n_{i-1} dividing n_i.
    std::vector<std::vector<std::int64_t>> choices(s);
    std::int64_t prev = 1;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::int64_t d : nt::divisors(n[i] / prev)) choices[i].push_back(prev * d);
        prev = n[i];
    }

    std::set<FinGenAbGroup> out;
    std::vector<std::int64_t> m(s);
    std::vector<std::size_t> idx(s, 0);
    for (;;) {
        for (std::size_t i = 0; i < s; ++i) m[i] = choices[i][idx[i]];
        if (m != n) out.insert(canonicalize(m));
        std::size_t i = 0;
        while (i < s && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == s) break;
    }
    return {out.begin(), out.end()};
}

AbElement reduce_element(const FinGenAbGroup& a, AbElement x) {
    const auto& n = a.torsion();
    if (x.residues.size() != n.size() || x.free_coords.size() != static_cast<std::size_t>(a.rank()))
        throw std::invalid_argument("element shape does not match the group");
    for (std::size_t i = 0; i < n.size(); ++i) {
        x.residues[i] %= n[i];
        if (x.residues[i] < 0) x.residues[i] += n[i];
    }
    return x;
}

FinGenAbGroup quotient_by_element(const FinGenAbGroup& a, const AbElement& x0) {
    AbElement x = reduce_element(a, x0);
    if (x.is_zero()) throw std::invalid_argument("cannot quotient by the zero element");

    const auto& n = a.torsion();
    const std::size_t s = n.size();
    const std::size_t r = static_cast<std::size_t>(a.rank());

    IntMatrix m(s + 1, s + r);
    for (std::size_t i = 0; i < s; ++i) m.at(i, i) = n[i];
    for (std::size_t j = 0; j < s; ++j) m.at(s, j) = x.residues[j];
    for (std::size_t j = 0; j < r; ++j) m.at(s, s + j) = x.free_coords[j];

    std::vector<bigint> diag = smith_diagonal(std::move(m));
    std::vector<std::int64_t> orders;
    for (const bigint& d : diag) {
        if (d > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("invariant factor overflow");
        orders.push_back(static_cast<std::int64_t>(d));
    }
    orders.resize(s + r, 0); // columns beyond the diagonal are free
    return canonicalize(orders);
}

std::int64_t element_order(const FinGenAbGroup& a, const AbElement& x0) {
    if (!a.is_finite()) throw unsupported_error("element order in an infinite group");
    AbElement x = reduce_element(a, x0);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < a.torsion().size(); ++i) {
        std::int64_t d = a.torsion()[i] / std::gcd(a.torsion()[i], x.residues[i]);
        ord = std::lcm(ord, d);
    }
    return ord;
}

std::vector<AbElement> all_elements(const FinGenAbGroup& a) {
    if (!a.is_finite()) throw unsupported_error("cannot enumerate an infinite group");
    const auto& n = a.torsion();
    std::vector<AbElement> out;
    out.reserve(static_cast<std::size_t>(a.order()));
    AbElement x;
    x.residues.assign(n.size(), 0);
    for (;;) {
        out.push_back(x);
        std::size_t i = n.size();
        while (i > 0 && ++x.residues[i - 1] == n[i - 1]) x.residues[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

AbElement option_realizing_element(const FinGenAbGroup& a, const std::vector<std::int64_t>& m) {
    const auto& n = a.torsion();
    if (m.size() != n.size()) throw std::invalid_argument("option chain length mismatch");
    std::int64_t prev = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (m[i] % prev != 0 || n[i] % m[i] != 0)
            throw std::invalid_argument("not an interleaved divisor chain");
        prev = n[i];
    }
    // x = m_1 (+) m_1 m_2/n_1 (+) m_1 m_2 m_3 / (n_1 n_2) (+) ...
    AbElement x;
    x.residues.resize(n.size());
    x.free_coords.assign(a.rank(), 0);
    std::int64_t c = 1;
    for (std::size_t i = 0; i < n.size(); ++i) {
        c = c * m[i] / (i == 0 ? 1 : n[i - 1]);
        x.residues[i] = c;
    }
    return reduce_element(a, x);
}

bool is_square(const FinGenAbGroup& a) {
    if (a.rank() % 2 != 0) return false;
    const auto& n = a.torsion();
    if (n.size() % 2 != 0) return false;
    for (std::size_t i = 0; i + 1 < n.size(); i += 2)
        if (n[i] != n[i + 1]) return false;
    return true;
}

bool is_elementary_abelian(const FinGenAbGroup& a) {
    if (a.rank() > 0) return false;
    const auto& n = a.torsion();
    if (n.empty()) return true; // dimension 0
    return n.front() == n.back() && nt::is_prime(n.front());
}

Outcome outcome_classifier(const FinGenAbGroup& a) {
    const bool square = is_square(a);
    const bool elementary = is_elementary_abelian(a);
    Outcome out;
    out.normal = square ? NP::P : NP::N;
    const bool misere_p =
        (elementary && a.torsion().size() % 2 == 1) || (square && !elementary);
    out.misere = misere_p ? NP::P : NP::N;
    return out;
}

namespace {

// The constructive move from a non-square chain to a square, with the
// convention that a single trailing 0 stands for a Z summand. The last
// entry is never divided through.
std::vector<std::int64_t> square_reaching_move(const std::vector<std::int64_t>& chain) {
    const std::size_t s = chain.size();
    std::vector<std::int64_t> x(s, 0);
    if (s % 2 == 0) {
        // 0 (+) n_1 (+) n_1 n_3/n_2 (+) n_1 n_3/n_2 (+) ...
        std::int64_t t = chain[0];
        x[1] = t;
        for (std::size_t j = 2; j <= s / 2; ++j) {
            t *= chain[2 * j - 2] / chain[2 * j - 3]; // n_{2j-1}/n_{2j-2}, integral by the chain property
            x[2 * j - 2] = t;
            x[2 * j - 1] = t;
        }
    } else {
        // 1 (+) n_2/n_1 (+) n_2/n_1 (+) n_2 n_4/(n_1 n_3) (+) ...
        x[0] = 1;
        std::int64_t u = 1;
        for (std::size_t j = 1; j <= (s - 1) / 2; ++j) {
            u *= chain[2 * j - 1] / chain[2 * j - 2]; // n_{2j}/n_{2j-1}
            x[2 * j - 1] = u;
            x[2 * j] = u;
        }
    }
    return x;
}

AbElement normal_winning_move(const FinGenAbGroup& a) {
    const auto& n = a.torsion();
    const std::size_t s = n.size();
    AbElement x;
    x.free_coords.assign(a.rank(), 0);
    if (a.rank() % 2 == 0) {
        // The torsion chain is not a square; move inside it.
        x.residues = square_reaching_move(n);
    } else {
        // Absorb one Z summand as a trailing 0 and ignore the rest.
        std::vector<std::int64_t> ext = n;
        ext.push_back(0);
        std::vector<std::int64_t> move = square_reaching_move(ext);
        x.residues.assign(move.begin(), move.begin() + s);
        x.free_coords[0] = move[s];
    }
    return reduce_element(a, x);
}

AbElement misere_winning_move(const FinGenAbGroup& a) {
    const auto& n = a.torsion();
    const std::size_t s = n.size();
    AbElement x;
    x.residues.assign(s, 0);
    x.free_coords.assign(a.rank(), 0);

    if (a.rank() == 0) {
        if (is_elementary_abelian(a)) {
            // Even dimension >= 2: kill one generator.
            x.residues[s - 1] = 1;
            return x;
        }
        // Chains (p, ..., p, n_s) with p prime and p | n_s != p: the normal
        // move would land on an elementary abelian (or trivial) quotient.
        bool exceptional = false;
        std::int64_t p = 0;
        if (s == 1) {
            p = nt::factor(n[0]).front().first;
            exceptional = true; // n[0] is composite, else A would be misere P
        } else if (nt::is_prime(n[0])) {
            exceptional = std::all_of(n.begin(), n.end() - 1,
                                      [&](std::int64_t d) { return d == n[0]; });
            p = n[0];
        }
        if (exceptional) {
            x.residues[s - 1] = (s % 2 == 0) ? 1 : p;
            return x;
        }
        return normal_winning_move(a);
    }

    // Infinite groups: the normal move lands on an infinite square except
    // when A = (Z/p)^s + Z, whose normal quotient is finite elementary.
    if (a.rank() == 1 && (s == 0 || is_elementary_abelian(FinGenAbGroup(n, 0)))) {
        std::int64_t p = s == 0 ? 2 : n[0];
        x.free_coords[0] = (s % 2 == 1) ? 1 : p;
        return x;
    }
    return normal_winning_move(a);
}

} // namespace

AbElement winning_move(const FinGenAbGroup& a, Rule rule) {
    if (a.is_trivial()) throw std::invalid_argument("terminal position has no moves");
    if (outcome_classifier(a).under(rule) == NP::P)
        throw std::invalid_argument("P-position has no winning move");
    return rule == Rule::Normal ? normal_winning_move(a) : misere_winning_move(a);
}

std::string AbelianPosition::key() const {
    std::string k = "ab:";
    const auto& n = g_.torsion();
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(n[i]);
    }
    if (g_.rank() > 0) k += "|r" + std::to_string(g_.rank());
    return k;
}

std::vector<PositionPtr> AbelianPosition::options() const {
    std::vector<FinGenAbGroup> opts = algame::options(g_);
    std::vector<PositionPtr> out;
    out.reserve(opts.size());
    for (FinGenAbGroup& g : opts) out.push_back(std::make_shared<AbelianPosition>(std::move(g)));
    return out;
}

PositionPtr abelian_position(FinGenAbGroup g) { return std::make_shared<AbelianPosition>(std::move(g)); }

Ordinal nimber_bruteforce(const FinGenAbGroup& a, Solver& solver) {
    return solver.nimber(abelian_position(a));
}

Outcome outcome_bruteforce(const FinGenAbGroup& a, Solver& solver) {
    return solver.outcome(abelian_position(a));
}

std::int64_t nimber_2gen_formula(std::int64_t n, std::int64_t m) {
    if (n < 0 || n > m) throw std::invalid_argument("nimber_2gen_formula requires 0 <= n <= m");
    const std::int64_t k = m - n;
    const std::int64_t t = nt::triangular(k);
    if (n <= t) return n + m;
    return t + (n - t - 1) % (k + 1);
}

FinGenAbGroup omega_reduce(const FinGenAbGroup& a, std::int64_t p) {
    if (!a.is_finite()) throw unsupported_error("omega_reduce requires a finite group");
    if (!nt::is_prime(p)) throw std::invalid_argument("reference prime required");
    std::vector<std::int64_t> orders;
    for (std::int64_t d : a.torsion()) orders.push_back(nt::ipow(p, nt::omega(d)));
    return canonicalize(orders);
}

Ordinal nimber_formula(const FinGenAbGroup& a) {
    const auto& n = a.torsion();
    if (a.rank() == 0) {
        if (n.empty()) return Ordinal();
        if (n.size() == 1) return Ordinal::finite(nt::omega(n[0]));
        if (n.size() == 2)
            return Ordinal::finite(nimber_2gen_formula(nt::omega(n[0]), nt::omega(n[1])));
    } else if (a.rank() == 1) {
        if (n.empty()) return Ordinal::omega();
        if (n.size() == 1) return Ordinal(1, nt::omega(n[0]));
    }
    throw unsupported_error("no closed-form nimber for this family: " + a.to_string());
}

ConjecturedNimber conjectured_nimber_3gen(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
    if (!(0 <= n1 && n1 <= n2 && n2 <= n3))
        throw std::invalid_argument("conjectured_nimber_3gen requires 0 <= n1 <= n2 <= n3");
    const std::int64_t k = n3 - n2;
    const std::int64_t t1 = nt::triangular(k + n1);
    const std::int64_t t2 = nt::triangular(k + n1 + 1);
    ConjecturedNimber out{};
    out.trusted = n2 > t2;
    if (n2 <= t1)
        out.value = n1 + n2 + n3;
    else if (n2 <= t2)
        out.value = n1 + n2 - 1;
    else
        out.value = t1 + (n2 - t1 - 1) % (k + n1 + 1);
    return out;
}

} // namespace algame
