/*
   Copyright 2026 The nsatz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "linsys.hpp"

namespace nsatz {

std::optional<std::vector<Rat>> solve_exact(const LinearSystem& system) {
    const std::size_t nrows = system.rows.size();
    const std::size_t ncols = system.ncols;

    // scale each row to integers (a row operation, harmless to solutions)
    std::vector<std::vector<Int>> m(nrows, std::vector<Int>(ncols + 1));
    for (std::size_t i = 0; i < nrows; ++i) {
        Int denom_lcm = 1;
        for (std::size_t j = 0; j < ncols; ++j)
            denom_lcm = lcm(denom_lcm, system.rows[i][j].get_den());
        denom_lcm = lcm(denom_lcm, system.rhs[i].get_den());
        for (std::size_t j = 0; j < ncols; ++j) {
            const Rat& v = system.rows[i][j];
            m[i][j] = v.get_num() * (denom_lcm / v.get_den());
        }
        m[i][ncols] = system.rhs[i].get_num() * (denom_lcm / system.rhs[i].get_den());
    }

    // Bareiss forward elimination with row pivoting
    std::vector<std::size_t> pivot_col;  // pivot_col[r] = column of pivot row r
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t j = 0; j < ncols && r < nrows; ++j) {
        std::size_t best = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (m[i][j] == 0) continue;
            if (best == nrows ||
                mpz_cmpabs(m[i][j].get_mpz_t(), m[best][j].get_mpz_t()) > 0)
                best = i;
        }
        if (best == nrows) continue;  // free column
        if (best != r) std::swap(m[best], m[r]);

        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t k = j + 1; k <= ncols; ++k) {
                Int t = m[r][j] * m[i][k] - m[i][j] * m[r][k];
                mpz_divexact(m[i][k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][j] = 0;
        }
        prev = m[r][j];
        pivot_col.push_back(j);
        ++r;
    }

    // rows below the last pivot are all-zero on the left; consistency is
    // a question about their right-hand sides
    for (std::size_t i = r; i < nrows; ++i)
        if (m[i][ncols] != 0) return std::nullopt;

    // back substitution, free variables pinned to zero
    std::vector<Rat> x(ncols, Rat(0));
    for (std::size_t rr = r; rr-- > 0;) {
        std::size_t j = pivot_col[rr];
        Rat acc(m[rr][ncols]);
        for (std::size_t k = j + 1; k < ncols; ++k) {
            if (m[rr][k] == 0) continue;
            acc -= Rat(m[rr][k]) * x[k];
        }
        x[j] = acc / Rat(m[rr][j]);
    }
    return x;
}

}  // namespace nsatz
