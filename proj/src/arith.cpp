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

#include "arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsatz::arith {

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

long long phi(long long n) {
    if (n < 1) throw std::invalid_argument("phi requires n >= 1");
    long long r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

long long divisor_count(long long n) {
    if (n < 1) throw std::invalid_argument("divisor_count requires n >= 1");
    long long d = 1;
    for (const auto& [p, e] : factorize(n)) d *= e + 1;
    return d;
}

long long omega(long long n) {
    if (n < 1) throw std::invalid_argument("omega requires n >= 1");
    return static_cast<long long>(factorize(n).size());
}

long long prime_count_below(long long n) {
    if (n <= 2) return 0;
    const long long limit = n - 1;  // count primes p < n
    const long long segment = 1 << 20;
    std::vector<long long> base;
    for (long long p = 2; p * p <= limit; ++p) {
        bool prime = true;
        for (long long q : base) {
            if (q * q > p) break;
            if (p % q == 0) {
                prime = false;
                break;
            }
        }
        if (prime) base.push_back(p);
    }
    long long count = 0;
    std::vector<char> sieve;
    for (long long lo = 2; lo <= limit; lo += segment) {
        long long hi = std::min(lo + segment - 1, limit);
        sieve.assign(static_cast<std::size_t>(hi - lo + 1), 1);
        for (long long p : base) {
            if (p * p > hi) break;
            long long start = std::max(p * p, (lo + p - 1) / p * p);
            for (long long m = start; m <= hi; m += p) sieve[m - lo] = 0;
        }
        for (long long v = lo; v <= hi; ++v)
            if (sieve[v - lo]) ++count;
    }
    return count;
}

std::optional<Fn> fn_by_name(const std::string& name) {
    if (name == "phi") return Fn::Phi;
    if (name == "pi") return Fn::Pi;
    if (name == "d") return Fn::D;
    if (name == "omega") return Fn::Omega;
    return std::nullopt;
}

long long arithmetical(Fn fn, long long n) {
    if (n == 0) return 0;
    if (n < 0) n = -n;
    switch (fn) {
        case Fn::Phi: return phi(n);
        case Fn::Pi: return prime_count_below(n);
        case Fn::D: return divisor_count(n);
        case Fn::Omega: return omega(n);
    }
    throw std::logic_error("unreachable");
}

std::optional<PhiBoundViolation> phi_bound_check(long long lo, long long hi) {
    if (lo < 1) lo = 1;
    for (long long n = lo; n <= hi; ++n) {
        long long ph = phi(n);
        long long dc = divisor_count(n);
        // sqrt(n)/2 <= phi(n)  <=>  n <= 4*phi(n)^2
        // d(n) <= 2*sqrt(n)    <=>  d(n)^2 <= 4n
        if (n > 4 * ph * ph || dc * dc > 4 * n)
            return PhiBoundViolation{n, ph, dc};
    }
    return std::nullopt;
}

std::vector<long long> primes_up_to(long long limit) {
    std::vector<long long> primes;
    if (limit < 2) return primes;
    std::vector<char> is_comp(static_cast<std::size_t>(limit) + 1, 0);
    for (long long p = 2; p <= limit; ++p) {
        if (is_comp[p]) continue;
        primes.push_back(p);
        for (long long m = p * p; m <= limit; m += p) is_comp[m] = 1;
    }
    return primes;
}

std::vector<std::uint16_t> divisor_count_sieve(long long limit) {
    std::vector<std::uint16_t> d(static_cast<std::size_t>(limit) + 1, 0);
    for (long long k = 1; k <= limit; ++k)
        for (long long m = k; m <= limit; m += k) ++d[m];
    return d;
}

std::optional<GoldbachPair> goldbach_search(long long n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("goldbach_search requires an even n >= 4");
    for (long long p = 2; p <= n / 2; p = (p == 2 ? 3 : p + 2)) {
        if (!is_prime(p)) continue;
        if (is_prime(n - p))
            return GoldbachPair{n, p, n - p, divisor_count(n)};
    }
    return std::nullopt;
}

std::vector<GoldbachPair> hc_sweep(int target_d, long long limit) {
    auto d = divisor_count_sieve(limit);
    std::vector<GoldbachPair> out;
    std::uint16_t record = 0;
    for (long long n = 1; n <= limit; ++n) {
        if (d[n] <= record) continue;
        record = d[n];
        if (n % 2 != 0 || n < 4 || d[n] < target_d) continue;
        if (auto pair = goldbach_search(n)) out.push_back(*pair);
    }
    return out;
}

}  // namespace nsatz::arith
