#include "algame/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace algame::nt {

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factor: argument must be >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int omega(std::int64_t n) {
    int total = 0;
    for (const auto& [p, e] : factor(n)) total += e;
    return total;
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
    if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factor(n)) {
        std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t triangular(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("triangular: k must be >= 0");
    return k * (k + 1) / 2;
}

std::int64_t ipow(std::int64_t p, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (std::int64_t{1} << 62) / p) throw std::overflow_error("ipow overflow");
        r *= p;
    }
    return r;
}

} // namespace algame::nt
