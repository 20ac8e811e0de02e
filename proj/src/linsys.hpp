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

// Exact rational linear solving by fraction-free (Bareiss) elimination
// over the integers. Partial pivoting picks the entry of largest absolute
// value, lowest row index on ties, so the computed solution is a
// deterministic function of the input.

#ifndef NSATZ_LINSYS_HPP
#define NSATZ_LINSYS_HPP

#include <optional>
#include <vector>

#include "poly.hpp"

namespace nsatz {

// One equation: sum coeff[j] * x_j = rhs.
struct LinearSystem {
    std::size_t ncols = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
};

// Solution with every free variable set to zero, or nullopt when the
// system is inconsistent.
std::optional<std::vector<Rat>> solve_exact(const LinearSystem& system);

}  // namespace nsatz

#endif
