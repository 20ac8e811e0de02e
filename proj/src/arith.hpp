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

// Arithmetical functions at desk scale: trial-division factorization,
// totient / divisor-count / distinct-prime-count, prime counting by
// segmented sieve, and Goldbach-pair searches over even numbers with
// many divisors.

#ifndef NSATZ_ARITH_HPP
#define NSATZ_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nsatz::arith {

// prime factorization of n >= 1, (prime, multiplicity) pairs ascending
std::vector<std::pair<long long, int>> factorize(long long n);

bool is_prime(long long n);

long long phi(long long n);             // Euler totient, n >= 1
long long divisor_count(long long n);   // d(n), n >= 1
long long omega(long long n);           // distinct prime factors, n >= 1
long long prime_count_below(long long n);  // pi(n) = #{p prime : p < n}

enum class Fn { Phi, Pi, D, Omega };
std::optional<Fn> fn_by_name(const std::string& name);

// extension to all of Z: g(-n) = g(n), g(0) = 0
long long arithmetical(Fn fn, long long n);

struct PhiBoundViolation {
    long long n;
    long long phi_n;
    long long d_n;
};

// Checks sqrt(n)/2 <= phi(n) and d(n) <= 2*sqrt(n) on [lo, hi],
// both as exact integer comparisons. Returns the first violation.
std::optional<PhiBoundViolation> phi_bound_check(long long lo, long long hi);

std::vector<long long> primes_up_to(long long limit);

// d(n) for every n <= limit in one pass
std::vector<std::uint16_t> divisor_count_sieve(long long limit);

struct GoldbachPair {
    long long n;
    long long p;
    long long q;
    long long d_n;
};

// least-p decomposition n = p + q with p, q prime; n even, n >= 4
std::optional<GoldbachPair> goldbach_search(long long n);

// Scans the divisor-count record setters (the highly composite numbers)
// up to limit and returns a Goldbach pair for each even record setter with
// d(n) >= target_d.
std::vector<GoldbachPair> hc_sweep(int target_d, long long limit);

}  // namespace nsatz::arith

#endif
