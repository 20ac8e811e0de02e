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

// Parameterized families whose Bezout certificates have forced
// coefficients, each one measurable:
//
//   family A     f1 = 1 + X + (1 - p^m) X^2, f2 = X^3: the X^2 cofactor
//                coefficient is forced to a p^m, so its valuation grows
//                with m while the inputs keep valuation 0.
//   family B     g1 = p^m - 1 + X, g2 = 1 - X: evaluating at X = 1 forces
//                p^m to divide the multiplier a.
//   divisor      f1 = 1 + a_n X + b_n^2 X^2, f2 = X^3: the forced X^2
//                coefficient is a (a_n - b_n)(a_n + b_n), whose divisor
//                count blows up along Goldbach pairs.
//   ufd demo     f1 = p^(2m+1) + p^(2m) Y, f2 = p^m B - p^m B Y over
//                Z[X][Y], with the identity p^(2m) B (p+1) = B f1 + p^m f2
//                and the p-adically weighted norm making the height/gcd
//                requirements fight each other.
//   new prime    E = sum (A/p_i)^m in Z[X] with |E(gamma)| < 1 certified
//                by rational interval arithmetic, then bounded trial
//                division for a small-value irreducible factor.
//
// Every measured quantity is recomputed from a verified certificate.

#ifndef NSATZ_FAMILIES_HPP
#define NSATZ_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "certify.hpp"
#include "poly.hpp"

namespace nsatz::families {

struct Trace {
    std::string family;
    long long parameter = 0;
    std::vector<std::pair<std::string, std::string>> measured;

    const std::string& get(const std::string& key) const;
    Int get_int(const std::string& key) const;
};

std::string traces_csv(const std::vector<Trace>& traces);

Trace valuation_family_a(long p, int m);
Trace valuation_family_b(long p, int m);
Trace divisor_family(long long a_n, long long b_n);

Trace goldbach_trace(long long n);
std::vector<Trace> hc_sweep_traces(int target_d, long long limit);

struct WeightedValue {
    std::string name;
    double value;
};

struct UfdDemoReport {
    long p = 0;
    double c = 0.0;
    int m = 0;  // minimal with |p^m B| <= 1
    int k = 0;  // minimal with |p^k B| <= threshold
    double threshold = 1.0;
    Poly f1, f2;          // over Z[X][Y], variables (x, y)
    bool identity_zero = false;
    std::vector<WeightedValue> values;

    Trace as_trace() const;
};

// B univariate over Z with content coprime to p; c > 1
UfdDemoReport ufd_one_property_demo(long p, const Poly& b, double c,
                                    double c2_threshold);

// closed rational interval; degenerate (lo == hi) intervals are exact
struct RatInterval {
    Rat lo, hi;

    static RatInterval point(const Rat& x) { return {x, x}; }
    RatInterval operator+(const RatInterval& o) const;
    RatInterval operator-(const RatInterval& o) const;
    RatInterval operator*(const RatInterval& o) const;
    bool abs_below(const Rat& bound) const;  // certified |value| < bound
};

RatInterval eval_interval(const Poly& f, const RatInterval& x);

struct NewPrimeReport {
    Poly element;                  // E = sum (A/p_i)^m
    RatInterval value_at_gamma;
    bool value_small = false;      // certified |E(gamma)| < 1
    std::optional<Poly> factor;    // irreducible, |factor(gamma)| < 1
    RatInterval factor_value_at_gamma;
    std::string note;

    Trace as_trace() const;
};

// gamma given as center +- radius; small_primes are univariate integer
// polynomials, each irreducible within the search bounds, of value
// certified below 1 at gamma, pairwise non-associated, at least two of
// them. Throws if a precondition fails or if m leaves |E(gamma)| >= 1;
// an exhausted factor search is reported, not thrown.
NewPrimeReport new_small_prime(const Rat& gamma, const Rat& radius,
                               const std::vector<Poly>& small_primes, int m,
                               int max_degree, const Int& max_coeff);

// bounded trial division helpers, exposed for direct testing
bool irreducible_within_bounds(const Poly& f, int max_degree, const Int& max_coeff);
std::optional<Poly> search_small_factor(const Poly& e, const RatInterval& gamma,
                                        const std::vector<Poly>& excluded,
                                        int max_degree, const Int& max_coeff);

}  // namespace nsatz::families

#endif
