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

// Mahler measure M(f) = |lead(f)| * prod over |root| >= 1 of |root|,
// from numerically approximated complex roots with a reported error
// bound, plus the two-sided comparison against the coefficient max:
// 2^-d |f| <= M(f) <= 2^(2d+1) |f|.

#ifndef NSATZ_MAHLER_HPP
#define NSATZ_MAHLER_HPP

#include <vector>

#include "poly.hpp"

namespace nsatz::heights {

struct MahlerResult {
    double value = 0.0;
    std::vector<double> root_moduli;
    double error_bound = 0.0;
};

// Roots come from the companion-matrix eigenvalues, polished by Newton
// iteration; a root whose modulus is within tolerance of 1 contributes 1
// and widens the error bound by its distance to the circle. Throws if the
// accumulated bound cannot be brought below tolerance.
MahlerResult mahler_measure(const Poly& f, double tolerance);

struct MahlerBoundsReport {
    bool holds = false;
    double lhs = 0.0;   // 2^-d |f|
    double measure = 0.0;
    double rhs = 0.0;   // 2^(2d+1) |f|
    double error_bound = 0.0;
};

MahlerBoundsReport check_mahler_bounds(const Poly& f, double tolerance);

}  // namespace nsatz::heights

#endif
