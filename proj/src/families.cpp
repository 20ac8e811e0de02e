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

#include "families.hpp"

#include <algorithm>
#include <cmath>

#include "heights.hpp"
#include "sysio.hpp"

namespace nsatz::families {

const std::string& Trace::get(const std::string& key) const {
    for (const auto& [k, v] : measured)
        if (k == key) return v;
    throw Error("trace has no measurement '" + key + "'");
}

Int Trace::get_int(const std::string& key) const { return Int(get(key)); }

std::string traces_csv(const std::vector<Trace>& traces) {
    if (traces.empty()) return io::csv_row({"family", "parameter"});
    std::vector<std::string> header{"family", "parameter"};
    for (const auto& [k, v] : traces.front().measured) header.push_back(k);
    std::string out = io::csv_row(header);
    for (const Trace& t : traces) {
        std::vector<std::string> row{t.family, std::to_string(t.parameter)};
        for (const auto& [k, v] : t.measured) row.push_back(v);
        out += io::csv_row(row);
    }
    return out;
}

namespace {

Int int_pow(long base, int exp) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

// minimal-cap integral certificate for 1 in the given univariate system;
// a failure here would falsify the membership reduction itself
certify::Certificate certified_or_die(const certify::PolySystem& system) {
    auto verdict = certify::bezout_certificate(system, certify::CapStrategy::effective());
    if (!verdict.member())
        throw Error("family system unexpectedly has no certificate; "
                    "this contradicts the no-common-zero construction");
    return certify::integral_certificate(*verdict.certificate, system.gens);
}

Rat coeff_of_power(const Poly& p, unsigned k) {
    return p.coeff(Exponents{k});
}

}  // namespace

Trace valuation_family_a(long p, int m) {
    if (m < 1) throw Error("family A needs m >= 1");
    Int pm = int_pow(p, m);
    certify::PolySystem system;
    system.vars = {"x"};
    Poly f1(1);
    f1.add_term({0}, Rat(1));
    f1.add_term({1}, Rat(1));
    f1.add_term({2}, Rat(Int(1) - pm));
    Poly f2 = Poly::monomial(1, {3}, Rat(1));
    system.gens = {f1, f2};

    certify::Certificate cert = certified_or_die(system);
    const Poly& h1 = cert.cofactors[0];
    Int a = cert.multiplier;
    Int b0 = coeff_of_power(h1, 0).get_num();
    Int b1 = coeff_of_power(h1, 1).get_num();
    Int b2 = coeff_of_power(h1, 2).get_num();

    auto vp_a = heights::padic_val(a, p);
    auto vp_b2 = heights::padic_val(b2, p);
    if (!vp_b2 || *vp_b2 - *vp_a != m)
        throw Error("family A: forced coefficient b2 = a p^m violated");

    Trace t;
    t.family = "valA";
    t.parameter = m;
    t.measured = {{"p", std::to_string(p)},
                  {"cap", std::to_string(cert.degree_cap_used)},
                  {"a", a.get_str()},
                  {"b0", b0.get_str()},
                  {"b1", b1.get_str()},
                  {"b2", b2.get_str()},
                  {"vp_b2", std::to_string(*vp_b2)},
                  {"vp_a", std::to_string(*vp_a)},
                  {"vp_excess", std::to_string(*vp_b2 - *vp_a)}};
    return t;
}

Trace valuation_family_b(long p, int m) {
    if (m < 1) throw Error("family B needs m >= 1");
    Int pm = int_pow(p, m);
    certify::PolySystem system;
    system.vars = {"x"};
    Poly g1(1);
    g1.add_term({0}, Rat(pm - 1));
    g1.add_term({1}, Rat(1));
    Poly g2(1);
    g2.add_term({0}, Rat(1));
    g2.add_term({1}, Rat(-1));
    system.gens = {g1, g2};

    certify::Certificate cert = certified_or_die(system);
    Int a = cert.multiplier;
    if (a % pm != 0)
        throw Error("family B: p^m does not divide the multiplier");
    auto vp_a = heights::padic_val(a, p);

    Trace t;
    t.family = "valB";
    t.parameter = m;
    t.measured = {{"p", std::to_string(p)},
                  {"cap", std::to_string(cert.degree_cap_used)},
                  {"a", a.get_str()},
                  {"vp_a", std::to_string(*vp_a)}};
    return t;
}

Trace divisor_family(long long a_n, long long b_n) {
    if (a_n < 1 || b_n < 1) throw Error("divisor family needs a_n, b_n >= 1");
    certify::PolySystem system;
    system.vars = {"x"};
    Poly f1(1);
    f1.add_term({0}, Rat(1));
    f1.add_term({1}, Rat(Int(a_n)));
    f1.add_term({2}, Rat(Int(b_n) * Int(b_n)));
    Poly f2 = Poly::monomial(1, {3}, Rat(1));
    system.gens = {f1, f2};

    certify::Certificate cert = certified_or_die(system);
    const Poly& h1 = cert.cofactors[0];
    Int a = cert.multiplier;
    Int c2 = coeff_of_power(h1, 2).get_num();
    Int expected = Int(a_n - b_n) * Int(a_n + b_n) * a;
    if (c2 != expected)
        throw Error("divisor family: forced coefficient c2 = a (a_n-b_n)(a_n+b_n) violated");

    Rat ratio = make_rat(c2, a);
    long long d_c2 = 0;
    if (c2 != 0) {
        Int absc2 = abs(c2);
        if (!absc2.fits_slong_p()) throw Error("c2 out of desk factorization range");
        d_c2 = arith::divisor_count(absc2.get_si());
    }

    Trace t;
    t.family = "divisor";
    t.parameter = a_n;
    t.measured = {{"a_n", std::to_string(a_n)},
                  {"b_n", std::to_string(b_n)},
                  {"cap", std::to_string(cert.degree_cap_used)},
                  {"a", a.get_str()},
                  {"c2", c2.get_str()},
                  {"c2_over_a", ratio.get_str()},
                  {"d_abs_c2", std::to_string(d_c2)},
                  {"d_a_n", std::to_string(arith::divisor_count(a_n))},
                  {"d_b_n", std::to_string(arith::divisor_count(b_n))}};
    return t;
}

Trace goldbach_trace(long long n) {
    auto pair = arith::goldbach_search(n);
    if (!pair) throw Error("no Goldbach pair found for " + std::to_string(n));
    Trace t;
    t.family = "goldbach";
    t.parameter = n;
    t.measured = {{"p", std::to_string(pair->p)},
                  {"q", std::to_string(pair->q)},
                  {"d_N", std::to_string(pair->d_n)}};
    return t;
}

std::vector<Trace> hc_sweep_traces(int target_d, long long limit) {
    std::vector<Trace> out;
    for (const auto& pair : arith::hc_sweep(target_d, limit)) {
        Trace t;
        t.family = "goldbach";
        t.parameter = pair.n;
        t.measured = {{"p", std::to_string(pair.p)},
                      {"q", std::to_string(pair.q)},
                      {"d_N", std::to_string(pair.d_n)}};
        out.push_back(t);
    }
    return out;
}

// ---------------------------------------------------------------------------
// UFD with one small prime
// ---------------------------------------------------------------------------

namespace {

// embed a univariate polynomial in x as a polynomial in (x, y)
Poly embed_in_xy(const Poly& f) {
    Poly out(2);
    for (const auto& [e, c] : f.terms()) out.add_term({e[0], 0}, c);
    return out;
}

int minimal_power(double value, long p, double threshold) {
    int m = 0;
    double pm = 1.0;
    while (value > threshold * pm) {
        pm *= static_cast<double>(p);
        ++m;
        if (m > 4096) throw Error("weighted norm scaling did not terminate");
    }
    return m;
}

}  // namespace

Trace UfdDemoReport::as_trace() const {
    Trace t;
    t.family = "ufd1";
    t.parameter = m;
    t.measured = {{"p", std::to_string(p)},
                  {"c", io::format_double(c)},
                  {"k", std::to_string(k)},
                  {"identity_zero", identity_zero ? "1" : "0"}};
    for (const auto& wv : values)
        t.measured.emplace_back(wv.name, io::format_double(wv.value));
    return t;
}

UfdDemoReport ufd_one_property_demo(long p, const Poly& b, double c,
                                    double c2_threshold) {
    if (b.is_zero() || b.nvars() != 1 || !b.is_integral())
        throw Error("B must be a nonzero univariate integer polynomial");
    if (!(c > 1.0)) throw Error("the weight base c must exceed 1");
    if (!heights::is_prime(Int(p))) throw Error("p must be prime");
    auto [content, prim] = content_primitive(b);
    if (content % p == 0) throw Error("content of B must be coprime to p");

    const Int ip(p);
    double norm_b = heights::weighted_poly_abs(b, ip, c);
    int m = minimal_power(norm_b, p, 1.0);
    int k = minimal_power(norm_b, p, c2_threshold);

    Int p2m = int_pow(p, 2 * m);
    Int p2m1 = int_pow(p, 2 * m + 1);
    Int pm = int_pow(p, m);

    Poly y = Poly::variable(2, 1);
    Poly b2 = embed_in_xy(b);
    Poly f1 = Poly::constant(2, Rat(p2m1)) + Poly::constant(2, Rat(p2m)) * y;
    Poly f2 = b2 * Rat(pm) - b2 * Rat(pm) * y;
    Poly a = b2 * Rat(p2m * (p + 1));
    Poly residual = b2 * f1 + f2 * Rat(pm) - a;

    // weighted norm of an element of Z[X][Y]: max over Y-coefficients
    auto norm_xy = [&](const Poly& f) {
        std::vector<Poly> slices;
        for (const auto& [e, coef] : f.terms()) {
            if (e[1] >= slices.size()) slices.resize(e[1] + 1, Poly(1));
            Poly& slice = slices[e[1]];
            slice.add_term({e[0]}, coef);
        }
        double best = 0.0;
        for (const Poly& s : slices)
            if (!s.is_zero())
                best = std::max(best, heights::weighted_poly_abs(s, ip, c));
        return best;
    };

    UfdDemoReport report;
    report.p = p;
    report.c = c;
    report.m = m;
    report.k = k;
    report.threshold = c2_threshold;
    report.f1 = f1;
    report.f2 = f2;
    report.identity_zero = residual.is_zero();
    report.values = {
        {"norm_B", norm_b},
        {"norm_a", norm_xy(a)},
        {"norm_f1", norm_xy(f1)},
        {"norm_f2", norm_xy(f2)},
        {"norm_h1", norm_b},
        {"norm_h2", std::pow(static_cast<double>(p), -m)},
        // dividing by p^k to reach gcd 1 multiplies the norm of h1 = B by p^k
        {"norm_h1_over_pk", norm_b * std::pow(static_cast<double>(p), k)},
    };
    return report;
}

// ---------------------------------------------------------------------------
// interval arithmetic and the new-small-prime search
// ---------------------------------------------------------------------------

RatInterval RatInterval::operator+(const RatInterval& o) const {
    return {lo + o.lo, hi + o.hi};
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
    return {lo - o.hi, hi - o.lo};
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
}

bool RatInterval::abs_below(const Rat& bound) const {
    return hi < bound && lo > -bound;
}

RatInterval eval_interval(const Poly& f, const RatInterval& x) {
    if (f.nvars() != 1) throw Error("interval evaluation is univariate");
    auto coeffs = univariate_coeffs(f);
    RatInterval acc = RatInterval::point(Rat(0));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + RatInterval::point(*it);
    return acc;
}

namespace {

std::vector<Int> signed_divisors(const Int& n) {
    // all divisors of |n|, both signs, ascending
    std::vector<Int> pos;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        pos.push_back(d);
        if (d != a / d) pos.push_back(a / d);
    }
    std::sort(pos.begin(), pos.end());
    std::vector<Int> out;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
    for (const Int& d : pos) out.push_back(d);
    return out;
}

bool associated(const Poly& a, const Poly& b) {
    return a == b || a == -b;
}

// enumerate candidate divisors of e with positive leading coefficient,
// lc | lc(e), constant | const(e), remaining coefficients in [-bound, bound],
// degree ascending; visit returns true to stop
template <typename Visit>
void enumerate_divisor_candidates(const Poly& e, int max_degree, const Int& max_coeff,
                                  Visit visit) {
    auto ecoeffs = univariate_coeffs(e);
    long edeg = static_cast<long>(ecoeffs.size()) - 1;
    Int lead = abs(ecoeffs.back().get_num());
    Int constant = ecoeffs.front().get_num();

    for (long deg = 1; deg <= std::min<long>(max_degree, edeg); ++deg) {
        std::vector<Int> lead_choices;
        for (const Int& d : signed_divisors(lead))
            if (d > 0 && d <= max_coeff) lead_choices.push_back(d);

        std::vector<Int> const_choices;
        if (constant == 0) {
            // X divides e; constants of candidates may be anything bounded
            for (Int v = -max_coeff; v <= max_coeff; ++v) const_choices.push_back(v);
        } else {
            for (const Int& d : signed_divisors(constant))
                if (abs(d) <= max_coeff) const_choices.push_back(d);
        }

        std::vector<Rat> cand(static_cast<std::size_t>(deg) + 1, Rat(0));
        auto emit = [&]() -> bool {
            for (const Int& l : lead_choices) {
                cand[deg] = Rat(l);
                for (const Int& c0 : const_choices) {
                    cand[0] = Rat(c0);
                    Poly r = poly_from_univariate_coeffs(cand);
                    if (r.is_zero() || *r.total_degree() != deg) continue;
                    if (visit(r)) return true;
                }
            }
            return false;
        };
        // indices 1..deg-1 are the free middle coefficients
        auto rec_middle = [&](auto&& self, long idx) -> bool {
            if (idx >= deg) return emit();
            for (Int v = -max_coeff; v <= max_coeff; ++v) {
                cand[idx] = Rat(v);
                if (self(self, idx + 1)) return true;
            }
            return false;
        };
        if (rec_middle(rec_middle, 1)) return;
    }
}

}  // namespace

bool irreducible_within_bounds(const Poly& f, int max_degree, const Int& max_coeff) {
    if (f.is_zero() || f.nvars() != 1 || !f.is_integral())
        throw Error("irreducibility check needs a nonzero univariate integer polynomial");
    long deg = *f.total_degree();
    if (deg == 0) return false;  // units and constant non-units are not primes here
    auto [content, prim] = content_primitive(f);
    if (content != 1) return false;
    bool reducible = false;
    enumerate_divisor_candidates(f, static_cast<int>(std::min<long>(deg - 1, max_degree)),
                                 max_coeff, [&](const Poly& r) {
                                     if (*r.total_degree() >= deg) return false;
                                     if (univariate_exact_divide(f, r)) {
                                         reducible = true;
                                         return true;
                                     }
                                     return false;
                                 });
    return !reducible;
}

std::optional<Poly> search_small_factor(const Poly& e, const RatInterval& gamma,
                                        const std::vector<Poly>& excluded,
                                        int max_degree, const Int& max_coeff) {
    std::optional<Poly> found;
    enumerate_divisor_candidates(e, max_degree, max_coeff, [&](const Poly& r) {
        if (!univariate_exact_divide(e, r)) return false;
        for (const Poly& p : excluded)
            if (associated(r, p)) return false;
        if (!eval_interval(r, gamma).abs_below(Rat(1))) return false;
        if (!irreducible_within_bounds(r, max_degree, max_coeff)) return false;
        found = r;
        return true;
    });
    return found;
}

Trace NewPrimeReport::as_trace() const {
    Trace t;
    t.family = "newprime";
    t.parameter = 0;
    t.measured = {{"element", format_poly(element)},
                  {"value_lo", value_at_gamma.lo.get_str()},
                  {"value_hi", value_at_gamma.hi.get_str()},
                  {"value_small", value_small ? "1" : "0"},
                  {"factor", factor ? format_poly(*factor) : ""},
                  {"note", note}};
    return t;
}

NewPrimeReport new_small_prime(const Rat& gamma, const Rat& radius,
                               const std::vector<Poly>& small_primes, int m,
                               int max_degree, const Int& max_coeff) {
    if (small_primes.size() < 2)
        throw Error("the construction needs at least two non-associated small primes");
    if (m < 1) throw Error("m must be at least 1");
    if (radius < 0) throw Error("negative interval radius");
    RatInterval g{gamma - radius, gamma + radius};
    if (!(g.lo > 0 && g.hi < 1))
        throw Error("gamma must lie in (0, 1) with its whole interval");

    for (std::size_t i = 0; i < small_primes.size(); ++i) {
        const Poly& p = small_primes[i];
        if (!irreducible_within_bounds(p, max_degree, max_coeff))
            throw Error("input " + format_poly(p) +
                        " is not irreducible within the search bounds");
        if (!eval_interval(p, g).abs_below(Rat(1)))
            throw Error("input " + format_poly(p) + " is not small at gamma");
        for (std::size_t j = i + 1; j < small_primes.size(); ++j)
            if (associated(p, small_primes[j]))
                throw Error("inputs must be pairwise non-associated");
    }

    // E = sum over i of (prod of the other primes)^m
    Poly e(1);
    for (std::size_t i = 0; i < small_primes.size(); ++i) {
        Poly others = Poly::constant(1, Rat(1));
        for (std::size_t j = 0; j < small_primes.size(); ++j)
            if (j != i) others = others * small_primes[j];
        e = e + pow(others, static_cast<unsigned>(m));
    }

    NewPrimeReport report;
    report.element = e;
    report.value_at_gamma = eval_interval(e, g);
    report.value_small = report.value_at_gamma.abs_below(Rat(1));
    if (!report.value_small)
        throw Error("m = " + std::to_string(m) +
                    " is insufficient: |E(gamma)| is not certified below 1");

    report.factor = search_small_factor(e, g, small_primes, max_degree, max_coeff);
    if (report.factor) {
        report.factor_value_at_gamma = eval_interval(*report.factor, g);
        report.note = "found";
    } else {
        report.note = "inconclusive: no small-value irreducible factor within bounds";
    }
    return report;
}

}  // namespace nsatz::families
