#ifndef ALGAME_INTMAT_HPP
#define ALGAME_INTMAT_HPP

#include <cstddef>
#include <vector>

#include "algame/ordinal.hpp" // bigint

namespace algame {

/// Dense integer matrix with unbounded-width entries, just big enough for the
/// relation matrices that arise when quotienting finitely generated abelian
/// groups. Row-major.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bigint& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const bigint& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<bigint> a_;
};

/// Diagonal of the Smith normal form of m: non-negative d_1 | d_2 | ... of
/// length min(rows, cols). Elementary row/column operations with
/// smallest-nonzero-pivot selection; the input is taken by value and
/// destroyed.
std::vector<bigint> smith_diagonal(IntMatrix m);

} // namespace algame

#endif
