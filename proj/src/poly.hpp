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

// Sparse multivariate polynomials over exact rationals.
//
// Terms live in a map keyed by exponent vector under graded-lex order, so
// iteration (and therefore printing and linear-system row order) is
// deterministic. Coefficients are GMP rationals, always canonical; a stored
// coefficient is never zero.

#ifndef NSATZ_POLY_HPP
#define NSATZ_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsatz {

using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class SizeBudgetError : public Error {
public:
    using Error::Error;
};

// Rational from integer pair, reduced, denominator > 0.
Rat make_rat(const Int& num, const Int& den);

using Exponents = std::vector<unsigned>;

// Graded-lex: total degree first, then lexicographic with the first
// variable most significant. Strict "less than" (ascending).
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned exponents_degree(const Exponents& e);

class Poly {
public:
    using TermMap = std::map<Exponents, Rat, GradedLexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars);

    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int index);
    static Poly monomial(int nvars, Exponents e, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of an exponent vector (zero if absent).
    Rat coeff(const Exponents& e) const;

    // Total degree; nullopt is the zero polynomial's sentinel.
    std::optional<long> total_degree() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    Rat evaluate(const std::vector<Rat>& point) const;

    bool is_integral() const;

    // Mutating builder: adds c * X^e and drops the term if it cancels.
    void add_term(const Exponents& e, const Rat& c);

private:
    void check_same_space(const Poly& rhs) const;

    int nvars_;
    TermMap terms_;
};

Poly pow(const Poly& base, unsigned exp);

// All exponent vectors of total degree <= deg, graded-lex ascending.
std::vector<Exponents> monomials_up_to_degree(int nvars, long deg);

// gcd of all coefficients (positive) and the primitive part.
// Requires a nonzero polynomial with integer coefficients.
std::pair<Int, Poly> content_primitive(const Poly& p);

// --- univariate utilities (nvars == 1) ---

// Dense coefficient vector, ascending degree; empty for the zero polynomial.
std::vector<Rat> univariate_coeffs(const Poly& p);
Poly poly_from_univariate_coeffs(const std::vector<Rat>& coeffs);

// Quotient and remainder in Q[X].
std::pair<Poly, Poly> univariate_divrem(const Poly& num, const Poly& den);

// Monic gcd by the Euclidean algorithm; gcd(p, 0) is the monic scaling of p.
Poly univariate_gcd(const Poly& p, const Poly& q);

// Exact quotient if den divides num in Q[X], otherwise nullopt.
std::optional<Poly> univariate_exact_divide(const Poly& num, const Poly& den);

// --- text form ---
//
// Grammar: sum of terms over the declared variables; integer and fraction
// literals a/b; '^' with a non-negative integer exponent; '*' optional
// between factors; parenthesized subexpressions with +, -, *.
// Canonical print: graded-lex descending, explicit '*', no spaces around '^'.

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);
std::string format_poly(const Poly& p);
std::string format_poly(const Poly& p, const std::vector<std::string>& vars);

}  // namespace nsatz

#endif
