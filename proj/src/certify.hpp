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

// Degree-capped ideal membership over Q by exact linear algebra, Bezout
// certificates for 1, integral certificates over Z with gcd
// normalization, the effective degree/height bound pair
//
//   deg(h_i) <= 4 n D^n
//   h(a), h(h_i) <= 4 n (n+1) D^n (H + ln s + (n+7) ln((n+1) D))
//
// with natural logarithms, and a sampling primality probe for bounded
// degree and height.
//
// Membership at cap k is a linear solve: unknowns are the q(n,k) = C(n+k, n)
// coefficients of each candidate cofactor, equations match the coefficient
// of every monomial of sum f_i h_i against the target. A Member verdict
// always carries a certificate whose residual has been re-checked exactly.

#ifndef NSATZ_CERTIFY_HPP
#define NSATZ_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "poly.hpp"

namespace nsatz::certify {

struct PolySystem {
    std::vector<std::string> vars;
    std::vector<Poly> gens;

    int nvars() const { return static_cast<int>(vars.size()); }
    int size() const { return static_cast<int>(gens.size()); }
    // D = max total degree of the generators (>= 0; throws if all zero)
    long max_degree() const;
    // H = max logarithmic coefficient height of the generators
    double max_log_height() const;
};

struct Certificate {
    Poly target;                  // f0
    std::vector<Poly> cofactors;  // h_1 .. h_s
    Int multiplier = 1;           // a, nonzero; 1 for certificates over Q
    long degree_cap_used = 0;

    bool integral() const;
    // a * f0 - sum f_i h_i, which a valid certificate makes zero
    Poly residual(const std::vector<Poly>& gens) const;
};

struct MembershipVerdict {
    std::optional<Certificate> certificate;  // present iff member
    long cap = 0;  // cap of the certificate, or the largest cap searched

    bool member() const { return certificate.has_value(); }
};

// Builds and solves the cofactor-coefficient system at exactly this cap.
MembershipVerdict membership_solve(const Poly& f0, const std::vector<Poly>& gens,
                                   long cap);

struct CapStrategy {
    enum class Mode { Fixed, IterateToEffective, IterateToMax };
    Mode mode = Mode::IterateToEffective;
    long value = 0;  // the fixed cap, or the user ceiling

    static CapStrategy fixed(long cap) { return {Mode::Fixed, cap}; }
    static CapStrategy effective() { return {Mode::IterateToEffective, 0}; }
    static CapStrategy up_to(long cap) { return {Mode::IterateToMax, cap}; }
};

// Searches caps 0, 1, 2, ... (or the single fixed cap) for a certificate
// of 1; the first hit has minimal cap among those attempted.
MembershipVerdict bezout_certificate(const PolySystem& system, CapStrategy strategy);

// Clears denominators with their lcm and divides out the common gcd, so
// the result is integral with gcd(a, cofactor coefficients) = 1.
Certificate integral_certificate(const Certificate& cert,
                                 const std::vector<Poly>& gens);

struct KpsBounds {
    int n = 1;
    int D = 1;
    double H = 0.0;
    int s = 1;
    long long degree_bound = 0;  // 4 n D^n
    double height_bound = 0.0;   // 4 n (n+1) D^n (H + ln s + (n+7) ln((n+1)D))
};

KpsBounds kps_bounds(int n, int D, double H, int s);

struct VerifyReport {
    bool residual_zero = false;
    bool degree_ok = false;  // every deg h_i <= degree_cap_used
    double height_of_a = 0.0;
    double max_cofactor_height = 0.0;
    long max_cofactor_degree = 0;
    KpsBounds kps;
    bool kps_degree_ok = false;
    bool kps_height_ok = false;

    bool all_ok() const { return residual_zero && degree_ok && kps_degree_ok && kps_height_ok; }
};

VerifyReport verify_certificate(const Certificate& cert, const PolySystem& system);

// true iff the iterated monic gcd of the generators is a nonzero constant,
// i.e. the generators have no common zero in the algebraic closure
bool univariate_oracle(const std::vector<Poly>& gens);

struct PrimalityVerdict {
    bool not_prime = false;
    // witness, present when not_prime
    std::optional<Poly> f, g;
    std::optional<Certificate> product_certificate;
    long deg_bound = 0;
    double height_bound = 0.0;
    int samples_checked = 0;
    long membership_cap = 0;
};

// Draws up to budget random pairs (f, g) with deg < deg_bound and
// logarithmic height < height_bound; reports NotPrime on the first pair
// with fg in the ideal but neither factor in it up to the cap.
PrimalityVerdict primality_probe(const std::vector<Poly>& gens, long deg_bound,
                                 double height_bound, int budget,
                                 std::uint64_t seed, long membership_cap);

// --- size budget (number of unknowns a single solve may use) ---

long long size_budget();
void set_size_budget(long long unknowns);

// --- deterministic sampling ---

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_below(std::uint64_t bound);        // uniform in [0, bound)
    long long int_in(long long lo, long long hi);         // uniform inclusive
    long long nonzero_int_in(long long bound);            // uniform in +-[1, bound]

private:
    std::mt19937_64 engine_;
};

// Random polynomial with total degree <= max_deg and integer coefficients
// in [-coeff_bound, coeff_bound]; each monomial is present with roughly
// density/256 probability, resampled until nonzero.
Poly random_poly(Rng& rng, int nvars, long max_deg, long long coeff_bound,
                 int density = 128);

// Sparse sample for the primality probe: one or two terms, degree <= max_deg.
Poly random_sparse_poly(Rng& rng, int nvars, long max_deg, long long coeff_bound);

struct KpsSweepRow {
    int instance_id = 0;
    int n = 0;
    int D = 0;
    double H = 0.0;
    int s = 0;
    long cap_used = 0;
    long deg_max = 0;
    double log_h_a = 0.0;
    double log_h_cofactors_max = 0.0;
    long long kps_deg_bound = 0;
    double kps_height_bound = 0.0;
    bool deg_ok = false;
    bool height_ok = false;
};

// Random integral systems (n <= 2, D <= 3, s <= 3, |coeff| <= 10) filtered
// to those certifiably without common zeros; one row per certified
// instance, measured from the minimal-cap integral certificate.
std::vector<KpsSweepRow> kps_conformance_sweep(int target_count, std::uint64_t seed,
                                               int max_attempts = 0);

}  // namespace nsatz::certify

#endif
