#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algame/intmat.hpp"

using namespace algame;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("diagonal examples") {
    CHECK(smith_diagonal(from_rows({{4, 0}, {0, 8}, {0, 4}})) == std::vector<bigint>{4, 4});
    CHECK(smith_diagonal(from_rows({{2, 2}})) == std::vector<bigint>{2});
    CHECK(smith_diagonal(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}})) ==
          std::vector<bigint>{2, 2, 156});
    CHECK(smith_diagonal(from_rows({{0, 0}, {0, 0}})) == std::vector<bigint>{0, 0});
    CHECK(smith_diagonal(from_rows({{1, 0}, {0, 1}})) == std::vector<bigint>{1, 1});
}

TEST_CASE("divisibility chain and determinant invariance on random matrices") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix m(n, n);
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
        for (auto& row : rows)
            for (auto& v : row) v = static_cast<long long>(rng() % 21) - 10;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];

        auto diag = smith_diagonal(std::move(m));
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
            if (diag[i] == 0) CHECK(diag[i + 1] == 0);
        }

        // |det| is preserved by unimodular operations.
        auto det = [&](auto&& self, std::vector<std::vector<long long>> a) -> bigint {
            if (a.empty()) return 1;
            bigint total = 0;
            int sign = 1;
            for (std::size_t c = 0; c < a.size(); ++c) {
                std::vector<std::vector<long long>> minor;
                for (std::size_t i = 1; i < a.size(); ++i) {
                    std::vector<long long> row;
                    for (std::size_t j = 0; j < a.size(); ++j)
                        if (j != c) row.push_back(a[i][j]);
                    minor.push_back(row);
                }
                total += sign * bigint(a[0][c]) * self(self, minor);
                sign = -sign;
            }
            return total;
        };
        bigint d = det(det, rows);
        if (d < 0) d = -d;
        bigint prod = 1;
        for (const bigint& v : diag) prod *= v;
        CHECK(prod == d);
    }
}
