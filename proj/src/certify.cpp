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

#include "certify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

#include "heights.hpp"
#include "linsys.hpp"

namespace nsatz::certify {

long PolySystem::max_degree() const {
    long d = -1;
    for (const Poly& f : gens) {
        auto fd = f.total_degree();
        if (fd && *fd > d) d = *fd;
    }
    if (d < 0) throw Error("system of zero polynomials has no degree");
    return d;
}

double PolySystem::max_log_height() const {
    double h = 0.0;
    for (const Poly& f : gens) h = std::max(h, heights::poly_log_height(f));
    return h;
}

bool Certificate::integral() const {
    for (const Poly& h : cofactors)
        if (!h.is_integral()) return false;
    return true;
}

Poly Certificate::residual(const std::vector<Poly>& gens) const {
    if (gens.size() != cofactors.size())
        throw Error("certificate size does not match the system");
    Poly acc = target * Rat(multiplier);
    for (std::size_t i = 0; i < gens.size(); ++i)
        acc = acc - gens[i] * cofactors[i];
    return acc;
}

// ---------------------------------------------------------------------------
// size budget
// ---------------------------------------------------------------------------

namespace {

std::atomic<long long> g_size_budget{0};

long long initial_budget() {
    if (const char* env = std::getenv("NSATZ_SIZE_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 50000;
}

}  // namespace

long long size_budget() {
    long long v = g_size_budget.load();
    if (v == 0) {
        v = initial_budget();
        g_size_budget.store(v);
    }
    return v;
}

void set_size_budget(long long unknowns) {
    if (unknowns <= 0) throw Error("size budget must be positive");
    g_size_budget.store(unknowns);
}

// ---------------------------------------------------------------------------
// membership
// ---------------------------------------------------------------------------

MembershipVerdict membership_solve(const Poly& f0, const std::vector<Poly>& gens,
                                   long cap) {
    if (gens.empty()) throw Error("empty generator list");
    const int n = f0.nvars();
    for (const Poly& g : gens)
        if (g.nvars() != n) throw Error("variable-count mismatch in system");
    if (cap < 0) throw Error("negative degree cap");

    const auto cof_monomials = monomials_up_to_degree(n, cap);
    const std::size_t per_gen = cof_monomials.size();
    const std::size_t unknowns = per_gen * gens.size();
    if (static_cast<long long>(unknowns) > size_budget())
        throw SizeBudgetError("membership system needs " + std::to_string(unknowns) +
                              " unknowns, over the budget of " +
                              std::to_string(size_budget()));

    // row space: monomials of sum f_i h_i (degree <= cap + D) plus the
    // target's own monomials
    long max_gen_deg = 0;
    for (const Poly& g : gens) {
        auto d = g.total_degree();
        if (d && *d > max_gen_deg) max_gen_deg = *d;
    }
    long row_deg = cap + max_gen_deg;
    auto f0_deg = f0.total_degree();
    if (f0_deg && *f0_deg > row_deg) row_deg = *f0_deg;

    const auto row_monomials = monomials_up_to_degree(n, row_deg);
    std::map<Exponents, std::size_t, GradedLexLess> row_of;
    for (std::size_t i = 0; i < row_monomials.size(); ++i)
        row_of.emplace(row_monomials[i], i);

    LinearSystem system;
    system.ncols = unknowns;
    system.rows.assign(row_monomials.size(), std::vector<Rat>(unknowns, Rat(0)));
    system.rhs.assign(row_monomials.size(), Rat(0));

    Exponents sum(n);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (std::size_t mi = 0; mi < per_gen; ++mi) {
            const std::size_t col = gi * per_gen + mi;
            for (const auto& [ge, gc] : gens[gi].terms()) {
                for (int v = 0; v < n; ++v) sum[v] = ge[v] + cof_monomials[mi][v];
                system.rows[row_of.at(sum)][col] += gc;
            }
        }
    }
    for (const auto& [e, c] : f0.terms()) system.rhs[row_of.at(e)] = c;

    auto solution = solve_exact(system);
    if (!solution) return MembershipVerdict{std::nullopt, cap};

    Certificate cert;
    cert.target = f0;
    cert.multiplier = 1;
    cert.degree_cap_used = cap;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Poly h(n);
        for (std::size_t mi = 0; mi < per_gen; ++mi)
            h.add_term(cof_monomials[mi], (*solution)[gi * per_gen + mi]);
        cert.cofactors.push_back(h);
    }
    if (!cert.residual(gens).is_zero())
        throw Error("internal: solver returned a non-verifying certificate");
    return MembershipVerdict{cert, cap};
}

MembershipVerdict bezout_certificate(const PolySystem& system, CapStrategy strategy) {
    const Poly one = Poly::constant(system.nvars(), Rat(1));
    if (strategy.mode == CapStrategy::Mode::Fixed)
        return membership_solve(one, system.gens, strategy.value);

    long ceiling;
    if (strategy.mode == CapStrategy::Mode::IterateToEffective) {
        long D = std::max(system.max_degree(), 1L);
        ceiling = static_cast<long>(
            kps_bounds(system.nvars(), static_cast<int>(D), 0.0, system.size())
                .degree_bound);
    } else {
        ceiling = strategy.value;
    }

    MembershipVerdict last{std::nullopt, 0};
    for (long cap = 0; cap <= ceiling; ++cap) {
        last = membership_solve(one, system.gens, cap);
        if (last.member()) return last;
    }
    return last;
}

Certificate integral_certificate(const Certificate& cert,
                                 const std::vector<Poly>& gens) {
    if (!cert.residual(gens).is_zero())
        throw Error("refusing to normalize a non-verifying certificate");

    // multiplier: lcm of all cofactor-coefficient denominators (divides
    // the product of the denominators, so it is still a valid choice)
    Int scale = 1;
    for (const Poly& h : cert.cofactors)
        for (const auto& [e, c] : h.terms()) scale = lcm(scale, c.get_den());
    scale *= cert.multiplier;

    Certificate out;
    out.target = cert.target;
    out.degree_cap_used = cert.degree_cap_used;
    out.multiplier = scale;
    Int g = abs(scale);
    for (const Poly& h : cert.cofactors) {
        Poly hh = h * Rat(scale / cert.multiplier);
        if (!hh.is_integral())
            throw Error("internal: denominator clearing failed");
        for (const auto& [e, c] : hh.terms()) g = gcd(g, c.get_num());
        out.cofactors.push_back(hh);
    }
    if (g > 1) {
        out.multiplier /= g;
        for (Poly& h : out.cofactors) h = h * make_rat(1, g);
    }
    if (!out.residual(gens).is_zero())
        throw Error("internal: integral normalization broke the certificate");
    return out;
}

KpsBounds kps_bounds(int n, int D, double H, int s) {
    if (n < 1 || D < 1 || s < 1 || H < 0)
        throw Error("bounds need n, D, s >= 1 and H >= 0");
    long long dn = 1;
    for (int i = 0; i < n; ++i) {
        dn *= D;
        if (dn > (1LL << 50)) throw Error("degree bound overflow");
    }
    KpsBounds b;
    b.n = n;
    b.D = D;
    b.H = H;
    b.s = s;
    b.degree_bound = 4LL * n * dn;
    b.height_bound = 4.0 * n * (n + 1) * static_cast<double>(dn) *
                     (H + std::log(static_cast<double>(s)) +
                      (n + 7) * std::log(static_cast<double>(n + 1) * D));
    return b;
}

VerifyReport verify_certificate(const Certificate& cert, const PolySystem& system) {
    VerifyReport report;
    report.residual_zero = cert.residual(system.gens).is_zero();

    long max_deg = 0;
    double max_h = 0.0;
    for (const Poly& h : cert.cofactors) {
        auto d = h.total_degree();
        if (d && *d > max_deg) max_deg = *d;
        max_h = std::max(max_h, heights::poly_log_height(h));
    }
    report.max_cofactor_degree = max_deg;
    report.max_cofactor_height = max_h;
    report.height_of_a = heights::log_height(Rat(cert.multiplier));
    report.degree_ok = max_deg <= cert.degree_cap_used;

    long D = std::max(system.max_degree(), 1L);
    report.kps = kps_bounds(system.nvars(), static_cast<int>(D),
                            system.max_log_height(), system.size());
    report.kps_degree_ok = max_deg <= report.kps.degree_bound;
    report.kps_height_ok = report.height_of_a <= report.kps.height_bound &&
                           max_h <= report.kps.height_bound;
    return report;
}

bool univariate_oracle(const std::vector<Poly>& gens) {
    if (gens.empty()) throw Error("empty generator list");
    for (const Poly& g : gens)
        if (g.nvars() != 1) throw Error("univariate oracle on multivariate input");
    Poly acc(1);
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        acc = acc.is_zero() ? g : univariate_gcd(acc, g);
    }
    if (acc.is_zero()) return false;  // the zero ideal
    return *acc.total_degree() == 0;
}

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw Error("empty sampling range");
    // unbiased rejection; avoids platform-defined distributions
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

long long Rng::int_in(long long lo, long long hi) {
    if (lo > hi) throw Error("empty sampling range");
    return lo + static_cast<long long>(
                    next_below(static_cast<std::uint64_t>(hi - lo) + 1));
}

long long Rng::nonzero_int_in(long long bound) {
    long long magnitude = int_in(1, bound);
    return next_below(2) == 0 ? magnitude : -magnitude;
}

Poly random_poly(Rng& rng, int nvars, long max_deg, long long coeff_bound,
                 int density) {
    const auto monomials = monomials_up_to_degree(nvars, max_deg);
    for (;;) {
        Poly p(nvars);
        for (const auto& e : monomials) {
            if (rng.next_below(256) >= static_cast<std::uint64_t>(density)) continue;
            p.add_term(e, Rat(Int(rng.nonzero_int_in(coeff_bound))));
        }
        if (!p.is_zero()) return p;
    }
}

Poly random_sparse_poly(Rng& rng, int nvars, long max_deg, long long coeff_bound) {
    const auto monomials = monomials_up_to_degree(nvars, max_deg);
    const std::size_t terms = rng.next_below(2) == 0 ? 1 : 2;
    Poly p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
        const auto& e = monomials[rng.next_below(monomials.size())];
        p.add_term(e, Rat(Int(rng.nonzero_int_in(coeff_bound))));
    }
    if (p.is_zero()) return random_sparse_poly(rng, nvars, max_deg, coeff_bound);
    return p;
}

// ---------------------------------------------------------------------------
// primality probe
// ---------------------------------------------------------------------------

PrimalityVerdict primality_probe(const std::vector<Poly>& gens, long deg_bound,
                                 double height_bound, int budget,
                                 std::uint64_t seed, long membership_cap) {
    if (gens.empty()) throw Error("empty generator list");
    if (deg_bound < 1 || budget < 1 || !(height_bound > 0))
        throw Error("probe needs deg_bound >= 1, budget >= 1, height_bound > 0");
    const int n = gens.front().nvars();

    // integer coefficients of magnitude <= K keep log height < height_bound
    long long coeff_bound =
        std::max(1LL, static_cast<long long>(std::ceil(std::exp(height_bound))) - 1);

    PrimalityVerdict verdict;
    verdict.deg_bound = deg_bound;
    verdict.height_bound = height_bound;
    verdict.membership_cap = membership_cap;

    Rng rng(seed);
    for (int i = 0; i < budget; ++i) {
        verdict.samples_checked = i + 1;
        Poly f = random_sparse_poly(rng, n, deg_bound - 1, coeff_bound);
        Poly g = random_sparse_poly(rng, n, deg_bound - 1, coeff_bound);
        auto product = membership_solve(f * g, gens, membership_cap);
        if (!product.member()) continue;
        if (membership_solve(f, gens, membership_cap).member()) continue;
        if (membership_solve(g, gens, membership_cap).member()) continue;
        verdict.not_prime = true;
        verdict.f = f;
        verdict.g = g;
        verdict.product_certificate = product.certificate;
        return verdict;
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// conformance sweep
// ---------------------------------------------------------------------------

std::vector<KpsSweepRow> kps_conformance_sweep(int target_count, std::uint64_t seed,
                                               int max_attempts) {
    if (max_attempts <= 0) max_attempts = 40 * target_count;
    Rng rng(seed);
    std::vector<KpsSweepRow> rows;

    // classification ceiling: random n <= 2, D <= 3 unit-ideal systems
    // certify at tiny caps; anything needing more is left unclassified
    const long filter_cap = 8;

    for (int attempt = 0;
         attempt < max_attempts && static_cast<int>(rows.size()) < target_count;
         ++attempt) {
        int n = static_cast<int>(rng.int_in(1, 2));
        int s = static_cast<int>(rng.int_in(1, 3));
        PolySystem system;
        system.vars = n == 1 ? std::vector<std::string>{"x"}
                             : std::vector<std::string>{"x", "y"};
        bool nonconstant = false;
        for (int i = 0; i < s; ++i) {
            long deg = rng.int_in(1, 3);
            Poly f = random_poly(rng, n, deg, 10);
            system.gens.push_back(f);
            if (*f.total_degree() >= 1) nonconstant = true;
        }
        if (!nonconstant) continue;

        MembershipVerdict verdict;
        try {
            verdict = bezout_certificate(system, CapStrategy::up_to(filter_cap));
        } catch (const SizeBudgetError&) {
            continue;
        }
        if (!verdict.member()) continue;

        Certificate integral = integral_certificate(*verdict.certificate, system.gens);
        VerifyReport report = verify_certificate(integral, system);

        KpsSweepRow row;
        row.instance_id = static_cast<int>(rows.size());
        row.n = n;
        row.D = static_cast<int>(system.max_degree());
        row.H = system.max_log_height();
        row.s = s;
        row.cap_used = integral.degree_cap_used;
        row.deg_max = report.max_cofactor_degree;
        row.log_h_a = report.height_of_a;
        row.log_h_cofactors_max = report.max_cofactor_height;
        row.kps_deg_bound = report.kps.degree_bound;
        row.kps_height_bound = report.kps.height_bound;
        row.deg_ok = report.kps_degree_ok;
        row.height_ok = report.kps_height_ok;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace nsatz::certify
