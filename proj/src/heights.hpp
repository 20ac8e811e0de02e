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

// Height functions over Q and Z[X]: naive and logarithmic heights of
// rationals, coefficient-max heights of polynomials, exact p-adic
// valuations and absolute values, the Gauss-lemma equality check, the
// root/coefficient height inequality, growth-contract (theta-type)
// verification, and p-adically weighted polynomial norms.
//
// Everything that the underlying statement makes exact stays exact:
// p-adic absolute values are integer powers of p held as rationals, the
// root-product inequality is compared with big-integer arithmetic, and
// only genuinely real-valued quantities (logarithms) become doubles.

#ifndef NSATZ_HEIGHTS_HPP
#define NSATZ_HEIGHTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "poly.hpp"

namespace nsatz::heights {

// H(a/b) = max(|a|, |b|) in lowest terms; H(0) = 1 so the logarithmic
// height of 0 is 0.
Int naive_height(const Rat& x);
double log_height(const Rat& x);

// max of the naive height over nonzero coefficients; 0 for the zero poly
Int poly_naive_height(const Poly& f);
double poly_log_height(const Poly& f);

bool is_prime(const Int& p);

// exact exponent of p in x; nullopt is the v(0) = infinity sentinel
std::optional<long> padic_val(const Rat& x, const Int& p);
std::optional<long> padic_val(const Int& x, const Int& p);

// |x|_p = p^(-v(x)) as an exact rational; |0|_p = 0
Rat padic_abs(const Rat& x, const Int& p);

// |f|_p = max over coefficients of |a_i|_p, exact (Gauss-lemma norm)
Rat poly_padic_abs(const Poly& f, const Int& p);

struct GaussReport {
    Rat lhs;   // |fg|_p
    Rat rhs;   // |f|_p * |g|_p
    bool equal;
};
GaussReport gauss_check(const Poly& f, const Poly& g, const Int& p);

struct HeightInequalityReport {
    Int hf;        // H(f) for the monic product of (X - root_i)
    Int product;   // prod H(root_i)
    Rat lower;     // 2^-d * H(f)
    Rat upper;     // 2^(2d+1) * H(f)
    bool holds;
};
HeightInequalityReport height_inequality_check(const std::vector<Rat>& roots);

// max over nonzero terms of c^i * p^(-val(a_i, p)); requires f != 0 with
// integer coefficients and c > 1
double weighted_poly_abs(const Poly& f, const Int& p, double c);

// --- height evaluators and the theta-type growth contract ---

struct HeightSpec {
    enum class Kind {
        NaiveAbs,         // |x| of the coefficient / max |a_i| of a poly
        LogWeil,          // log of the naive height
        PadicAbs,         // p^(-v), a genuine height function
        PadicValMagnitude,  // |v_p|, the paper's non-height
        WeightedPoly,     // max c^i |a_i|_p on univariate integer polys
        Degree,           // total degree (0 for the zero polynomial)
        Arithmetical,     // |g(n)| for g in {phi, pi, d, omega}
    };

    Kind kind = Kind::NaiveAbs;
    Int p = 2;        // PadicAbs / PadicValMagnitude / WeightedPoly
    double c = 2.0;   // WeightedPoly
    arith::Fn fn = arith::Fn::Phi;  // Arithmetical
    std::string name;

    static HeightSpec naive_abs();
    static HeightSpec log_weil();
    static HeightSpec padic_abs_spec(const Int& p);
    static HeightSpec padic_val_magnitude(const Int& p);
    static HeightSpec weighted(const Int& p, double c);
    static HeightSpec degree();
    static HeightSpec arithmetical(arith::Fn fn);

    double eval(const Rat& x) const;
    // polynomial extension: max over coefficients, except Degree and
    // WeightedPoly which act on the polynomial itself
    double eval(const Poly& f) const;
};

using ThetaFn = std::function<unsigned long long(unsigned long long)>;

inline ThetaFn theta_square() {
    return [](unsigned long long n) { return (n + 1) * (n + 1); };
}

struct ThetaViolation {
    Poly x, y;
    unsigned long long n;
    char op;  // '+' or '*'
    double value;
};

// Checks the contract "h(x),h(y) <= n implies h(x+y),h(xy) <= theta(n)"
// for every ordered pair from the domain, in domain order, at the least
// integer n >= max(h(x), h(y)); pairs whose n exceeds n_max are skipped.
// Returns the first violation, or nullopt for a pass.
std::optional<ThetaViolation> theta_verify(const HeightSpec& h, const ThetaFn& theta,
                                           const std::vector<Poly>& domain,
                                           unsigned long long n_max);

// Same check over an explicit pair list (witness families).
std::optional<ThetaViolation> theta_verify_pairs(
    const HeightSpec& h, const ThetaFn& theta,
    const std::vector<std::pair<Poly, Poly>>& pairs, unsigned long long n_max);

}  // namespace nsatz::heights

#endif
