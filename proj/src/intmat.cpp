#include "algame/intmat.hpp"

#include <cstdlib>
#include <utility>

namespace algame {

namespace {

bigint abs_val(const bigint& x) { return x < 0 ? bigint(-x) : x; }

// Locates the entry of smallest nonzero absolute value in the submatrix
// starting at (t, t). Returns false if that submatrix is zero.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    bigint best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const bigint& v = m.at(i, j);
            if (v == 0) continue;
            bigint a = abs_val(v);
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pi = i;
                pj = j;
            }
        }
    return found;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

bool clear_pivot_cross(IntMatrix& m, std::size_t t) {
    bool changed = false;
    const bigint& piv = m.at(t, t);
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) == 0) continue;
        bigint q = m.at(i, t) / piv; // truncated division keeps |remainder| < |piv|
        if (q != 0)
            for (std::size_t j = t; j < m.cols(); ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) changed = true;
    }
    for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) == 0) continue;
        bigint q = m.at(t, j) / piv;
        if (q != 0)
            for (std::size_t i = t; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) changed = true;
    }
    return changed;
}

bool cross_is_zero(const IntMatrix& m, std::size_t t) {
    for (std::size_t i = t + 1; i < m.rows(); ++i)
        if (m.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < m.cols(); ++j)
        if (m.at(t, j) != 0) return false;
    return true;
}

} // namespace

std::vector<bigint> smith_diagonal(IntMatrix m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<bigint> diag(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(m, t, pi, pj)) break; // rest of matrix is zero
            swap_rows(m, t, pi);
            swap_cols(m, t, pj);
            if (clear_pivot_cross(m, t)) continue; // remainders appeared, pick a new pivot
            if (!cross_is_zero(m, t)) continue;
            // Pivot divides its cross; enforce divisibility into the rest.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols() && fixed; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (std::size_t jj = t; jj < m.cols(); ++jj) m.at(t, jj) += m.at(i, jj);
                        fixed = false;
                    }
            if (fixed) break;
        }
        diag[t] = abs_val(m.at(t, t));
        if (diag[t] == 0) break; // everything below/right is zero too
    }
    return diag;
}

} // namespace algame
