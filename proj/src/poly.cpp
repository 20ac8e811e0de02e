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

#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nsatz {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

unsigned exponents_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned k : e) d += k;
    return d;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = exponents_degree(a), db = exponents_degree(b);
    if (da != db) return da < db;
    // lexicographic, first variable most significant
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw Error("negative variable count");
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw Error("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    Poly p(nvars);
    p.add_term(e, Rat(1));
    return p;
}

Poly Poly::monomial(int nvars, Exponents e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw Error("exponent vector length does not match variable count");
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

Rat Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<long> Poly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // graded order: the last term has maximal degree
    return static_cast<long>(exponents_degree(terms_.rbegin()->first));
}

void Poly::check_same_space(const Poly& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw Error("variable-count mismatch: " + std::to_string(nvars_) +
                    " vs " + std::to_string(rhs.nvars_));
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw Error("exponent vector length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& rhs) const {
    check_same_space(rhs);
    Poly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& rhs) const {
    check_same_space(rhs);
    Poly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& rhs) const {
    check_same_space(rhs);
    Poly r(nvars_);
    Exponents sum(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

bool Poly::operator==(const Poly& rhs) const {
    return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw Error("evaluation point length does not match variable count");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

bool Poly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

Poly pow(const Poly& base, unsigned exp) {
    Poly acc = Poly::constant(base.nvars(), Rat(1));
    for (unsigned i = 0; i < exp; ++i) acc = acc * base;
    return acc;
}

std::vector<Exponents> monomials_up_to_degree(int nvars, long deg) {
    std::vector<Exponents> out;
    if (deg < 0) return out;
    Exponents current(nvars, 0);
    // enumerate recursively, then sort into graded-lex order
    auto rec = [&](auto&& self, int var, long remaining) -> void {
        if (var == nvars) {
            out.push_back(current);
            return;
        }
        for (long k = 0; k <= remaining; ++k) {
            current[var] = static_cast<unsigned>(k);
            self(self, var + 1, remaining - k);
        }
        current[var] = 0;
    };
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::pair<Int, Poly> content_primitive(const Poly& p) {
    if (p.is_zero()) throw Error("content of the zero polynomial");
    if (!p.is_integral()) throw Error("content requires integer coefficients");
    Int g = 0;
    for (const auto& [e, c] : p.terms()) g = gcd(g, c.get_num());
    g = abs(g);
    Poly prim(p.nvars());
    for (const auto& [e, c] : p.terms()) prim.add_term(e, make_rat(c.get_num() / g, 1));
    return {g, prim};
}

std::vector<Rat> univariate_coeffs(const Poly& p) {
    if (p.nvars() != 1) throw Error("univariate operation on multivariate input");
    if (p.is_zero()) return {};
    std::vector<Rat> c(static_cast<std::size_t>(*p.total_degree()) + 1, Rat(0));
    for (const auto& [e, coef] : p.terms()) c[e[0]] = coef;
    return c;
}

Poly poly_from_univariate_coeffs(const std::vector<Rat>& coeffs) {
    Poly p(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.add_term({static_cast<unsigned>(i)}, coeffs[i]);
    return p;
}

std::pair<Poly, Poly> univariate_divrem(const Poly& num, const Poly& den) {
    if (num.nvars() != 1 || den.nvars() != 1)
        throw Error("univariate operation on multivariate input");
    if (den.is_zero()) throw Error("division by the zero polynomial");
    auto r = univariate_coeffs(num);
    auto d = univariate_coeffs(den);
    long dd = static_cast<long>(d.size()) - 1;
    std::vector<Rat> q;
    while (static_cast<long>(r.size()) - 1 >= dd && !r.empty()) {
        long shift = static_cast<long>(r.size()) - 1 - dd;
        Rat factor = r.back() / d.back();
        if (static_cast<long>(q.size()) < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] += factor;
        for (long i = 0; i <= dd; ++i) r[i + shift] -= factor * d[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {poly_from_univariate_coeffs(q), poly_from_univariate_coeffs(r)};
}

Poly univariate_gcd(const Poly& p, const Poly& q) {
    if (p.nvars() != 1 || q.nvars() != 1)
        throw Error("univariate operation on multivariate input");
    if (p.is_zero() && q.is_zero())
        throw Error("gcd of two zero polynomials");
    Poly a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = univariate_divrem(a, b);
        a = b;
        b = rem;
    }
    // monic normalization
    auto c = univariate_coeffs(a);
    Rat lead = c.back();
    for (auto& x : c) x /= lead;
    return poly_from_univariate_coeffs(c);
}

std::optional<Poly> univariate_exact_divide(const Poly& num, const Poly& den) {
    auto [q, r] = univariate_divrem(num, den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*          (adjacency multiplies)
//   factor := atom ('^' uint)?
//   atom   := uint ('/' uint)? | variable | '(' expr ')'
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars), nvars_(static_cast<int>(vars.size())) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Poly expr() {
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            negate = (c == '-');
        }
        Poly acc = term();
        if (negate) acc = -acc;
        while (!at_end()) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Poly t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (!at_end()) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_atom()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            unsigned long k = read_uint("exponent");
            Poly acc = Poly::constant(nvars_, Rat(1));
            for (unsigned long i = 0; i < k; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_int();
            if (peek() == '/') {
                ++pos_;
                std::size_t at = pos_;
                Int den = read_int();
                if (den == 0) throw ParseError("fraction with zero denominator", at);
                return Poly::constant(nvars_, make_rat(num, den));
            }
            return Poly::constant(nvars_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (int i = 0; i < nvars_; ++i)
                if (vars_[i] == name) return Poly::variable(nvars_, i);
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Int read_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", pos_);
        return Int(text_.substr(start, pos_ - start));
    }

    unsigned long read_uint(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        Int v = read_int();
        if (!v.fits_ulong_p())
            throw ParseError(std::string(what) + " too large", start);
        return v.get_ui();
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    int nvars_;
    std::size_t pos_ = 0;
};

std::vector<std::string> default_var_names(int nvars) {
    static const char* short_names[] = {"x", "y", "z"};
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) {
        if (nvars <= 3)
            names.push_back(short_names[i]);
        else
            names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).run();
}

std::string format_poly(const Poly& p) {
    return format_poly(p, default_var_names(p.nvars()));
}

std::string format_poly(const Poly& p, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != p.nvars())
        throw Error("variable name list does not match variable count");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Exponents& e = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Rat mag = neg ? Rat(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] >= 2) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << mono;
        } else {
            out << mag.get_str() << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace nsatz
