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

#include "heights.hpp"

#include <cmath>
#include <limits>

namespace nsatz::heights {

Int naive_height(const Rat& x) {
    if (x == 0) return 1;
    Int num = abs(x.get_num());
    Int den = x.get_den();
    return num > den ? num : den;
}

double log_height(const Rat& x) {
    Int h = naive_height(x);
    // log of a big integer via mpz -> double with exponent extraction
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, h.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

Int poly_naive_height(const Poly& f) {
    Int h = 0;
    for (const auto& [e, c] : f.terms()) {
        Int hc = naive_height(c);
        if (hc > h) h = hc;
    }
    return h;
}

double poly_log_height(const Poly& f) {
    if (f.is_zero()) return 0.0;
    return log_height(Rat(poly_naive_height(f)));
}

bool is_prime(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

static void require_prime(const Int& p) {
    if (!is_prime(p)) throw Error("p = " + p.get_str() + " is not prime");
}

std::optional<long> padic_val(const Int& x, const Int& p) {
    require_prime(p);
    if (x == 0) return std::nullopt;
    Int n = abs(x);
    long v = 0;
    Int q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

std::optional<long> padic_val(const Rat& x, const Int& p) {
    if (x == 0) {
        require_prime(p);
        return std::nullopt;
    }
    return *padic_val(x.get_num(), p) - *padic_val(x.get_den(), p);
}

static Rat p_power(const Int& p, long e) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rat(pe) : make_rat(1, pe);
}

Rat padic_abs(const Rat& x, const Int& p) {
    auto v = padic_val(x, p);
    if (!v) return Rat(0);
    return p_power(p, -*v);
}

Rat poly_padic_abs(const Poly& f, const Int& p) {
    if (f.is_zero()) throw Error("p-adic norm of the zero polynomial");
    bool have = false;
    long min_v = 0;
    for (const auto& [e, c] : f.terms()) {
        long v = *padic_val(c, p);
        if (!have || v < min_v) {
            min_v = v;
            have = true;
        }
    }
    return p_power(p, -min_v);
}

GaussReport gauss_check(const Poly& f, const Poly& g, const Int& p) {
    if (f.is_zero() || g.is_zero())
        throw Error("Gauss check requires nonzero polynomials");
    Rat lhs = poly_padic_abs(f * g, p);
    Rat rhs = poly_padic_abs(f, p) * poly_padic_abs(g, p);
    return GaussReport{lhs, rhs, lhs == rhs};
}

HeightInequalityReport height_inequality_check(const std::vector<Rat>& roots) {
    if (roots.empty()) throw Error("height inequality check needs at least one root");
    const int d = static_cast<int>(roots.size());
    Poly f = Poly::constant(1, Rat(1));
    Poly x = Poly::variable(1, 0);
    for (const Rat& alpha : roots) f = f * (x - Poly::constant(1, alpha));
    Int hf = poly_naive_height(f);  // includes the leading 1, so hf >= 1
    Int product = 1;
    for (const Rat& alpha : roots) product *= naive_height(alpha);
    Int two_d, two_2d1;
    mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(d));
    mpz_ui_pow_ui(two_2d1.get_mpz_t(), 2, static_cast<unsigned long>(2 * d + 1));
    Rat lower = make_rat(hf, two_d);
    Rat upper = Rat(hf * two_2d1);
    bool holds = lower <= Rat(product) && Rat(product) <= upper;
    return HeightInequalityReport{hf, product, lower, upper, holds};
}

double weighted_poly_abs(const Poly& f, const Int& p, double c) {
    if (f.is_zero()) throw Error("weighted norm of the zero polynomial");
    if (f.nvars() != 1) throw Error("weighted norm is univariate");
    if (!f.is_integral()) throw Error("weighted norm requires integer coefficients");
    if (!(c > 1.0)) throw Error("weighted norm requires c > 1");
    double best = 0.0;
    for (const auto& [e, coef] : f.terms()) {
        long v = *padic_val(coef, p);
        double term = std::pow(c, static_cast<double>(e[0])) *
                      std::pow(p.get_d(), static_cast<double>(-v));
        if (term > best) best = term;
    }
    return best;
}

HeightSpec HeightSpec::naive_abs() { return {Kind::NaiveAbs, 2, 2.0, arith::Fn::Phi, "abs"}; }
HeightSpec HeightSpec::log_weil() { return {Kind::LogWeil, 2, 2.0, arith::Fn::Phi, "log"}; }
HeightSpec HeightSpec::padic_abs_spec(const Int& p) {
    return {Kind::PadicAbs, p, 2.0, arith::Fn::Phi, "abs" + p.get_str()};
}
HeightSpec HeightSpec::padic_val_magnitude(const Int& p) {
    return {Kind::PadicValMagnitude, p, 2.0, arith::Fn::Phi, "val" + p.get_str()};
}
HeightSpec HeightSpec::weighted(const Int& p, double c) {
    return {Kind::WeightedPoly, p, c, arith::Fn::Phi, "weighted" + p.get_str()};
}
HeightSpec HeightSpec::degree() { return {Kind::Degree, 2, 2.0, arith::Fn::Phi, "degree"}; }
HeightSpec HeightSpec::arithmetical(arith::Fn fn) {
    const char* names[] = {"phi", "pi", "d", "omega"};
    return {Kind::Arithmetical, 2, 2.0, fn, names[static_cast<int>(fn)]};
}

double HeightSpec::eval(const Rat& x) const {
    switch (kind) {
        case Kind::NaiveAbs: {
            Rat a = abs(x);
            return a.get_d();
        }
        case Kind::LogWeil:
            return log_height(x);
        case Kind::PadicAbs:
            return padic_abs(x, p).get_d();
        case Kind::PadicValMagnitude: {
            auto v = padic_val(x, p);
            if (!v) return std::numeric_limits<double>::infinity();  // v(0)
            return std::abs(static_cast<double>(*v));
        }
        case Kind::Degree:
            return 0.0;
        case Kind::Arithmetical: {
            if (x.get_den() != 1)
                throw Error("arithmetical functions take integers");
            if (!x.get_num().fits_slong_p())
                throw Error("arithmetical function argument out of desk range");
            return static_cast<double>(
                std::abs(arith::arithmetical(fn, x.get_num().get_si())));
        }
        case Kind::WeightedPoly:
            throw Error("weighted norm evaluates polynomials, not scalars");
    }
    throw Error("unreachable");
}

double HeightSpec::eval(const Poly& f) const {
    switch (kind) {
        case Kind::Degree: {
            auto d = f.total_degree();
            return d ? static_cast<double>(*d) : 0.0;
        }
        case Kind::WeightedPoly:
            return weighted_poly_abs(f, p, c);
        case Kind::PadicValMagnitude: {
            // polynomial extension of the valuation: max |v| over coefficients
            if (f.is_zero()) return std::numeric_limits<double>::infinity();
            double best = 0.0;
            for (const auto& [e, coef] : f.terms())
                best = std::max(best, eval(coef));
            return best;
        }
        default: {
            if (f.is_zero()) return 0.0;
            double best = 0.0;
            for (const auto& [e, coef] : f.terms())
                best = std::max(best, eval(coef));
            return best;
        }
    }
}

namespace {

std::optional<ThetaViolation> check_pair(const HeightSpec& h, const ThetaFn& theta,
                                         const Poly& x, const Poly& y,
                                         unsigned long long n_max) {
    double hx = h.eval(x), hy = h.eval(y);
    double m = std::max(hx, hy);
    if (!std::isfinite(m)) return std::nullopt;  // no finite n admits this pair
    auto n = static_cast<unsigned long long>(std::ceil(m));
    if (n > n_max) return std::nullopt;
    double bound = static_cast<double>(theta(n));
    double hsum = h.eval(x + y);
    if (hsum > bound) return ThetaViolation{x, y, n, '+', hsum};
    double hprod = h.eval(x * y);
    if (hprod > bound) return ThetaViolation{x, y, n, '*', hprod};
    return std::nullopt;
}

}  // namespace

std::optional<ThetaViolation> theta_verify(const HeightSpec& h, const ThetaFn& theta,
                                           const std::vector<Poly>& domain,
                                           unsigned long long n_max) {
    for (const Poly& x : domain)
        for (const Poly& y : domain)
            if (auto v = check_pair(h, theta, x, y, n_max)) return v;
    return std::nullopt;
}

std::optional<ThetaViolation> theta_verify_pairs(
    const HeightSpec& h, const ThetaFn& theta,
    const std::vector<std::pair<Poly, Poly>>& pairs, unsigned long long n_max) {
    for (const auto& [x, y] : pairs)
        if (auto v = check_pair(h, theta, x, y, n_max)) return v;
    return std::nullopt;
}

}  // namespace nsatz::heights
