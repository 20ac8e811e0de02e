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

#include "mahler.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <limits>

namespace nsatz::heights {

namespace {

using Complex = std::complex<double>;

Complex horner(const std::vector<double>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<double> derivative(const std::vector<double>& coeffs) {
    std::vector<double> d;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d.push_back(static_cast<double>(i) * coeffs[i]);
    return d;
}

}  // namespace

MahlerResult mahler_measure(const Poly& f, double tolerance) {
    if (f.is_zero()) throw Error("Mahler measure of the zero polynomial");
    if (f.nvars() != 1) throw Error("Mahler measure is univariate");
    if (!(tolerance > 0)) throw Error("tolerance must be positive");

    auto rat_coeffs = univariate_coeffs(f);

    // roots at 0 have modulus 0 and never contribute; strip X^k
    std::size_t shift = 0;
    while (shift < rat_coeffs.size() && rat_coeffs[shift] == 0) ++shift;
    rat_coeffs.erase(rat_coeffs.begin(), rat_coeffs.begin() + shift);

    const std::size_t d = rat_coeffs.size() - 1;
    double lead = std::abs(rat_coeffs.back().get_d());

    MahlerResult result;
    if (d == 0) {
        result.value = lead;
        result.error_bound = 0.0;
        return result;
    }

    std::vector<double> coeffs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) coeffs[i] = rat_coeffs[i].get_d();

    // companion matrix of the monic normalization
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) companion(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[i] / coeffs[d];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    if (solver.info() != Eigen::Success)
        throw Error("companion-matrix eigensolver failed");

    auto dcoeffs = derivative(coeffs);

    double value = lead;
    double rel_err = 0.0;
    const double unit_tol = std::min(tolerance, 1e-8);
    for (std::size_t i = 0; i < d; ++i) {
        Complex z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
        // Newton polish; companion eigenvalues of modest-degree polynomials
        // start close enough that a few steps reach the attainable floor
        for (int it = 0; it < 40; ++it) {
            Complex fz = horner(coeffs, z);
            Complex dz = horner(dcoeffs, z);
            if (std::abs(dz) == 0.0) break;
            Complex step = fz / dz;
            z -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
        }
        double modulus = std::abs(z);
        double fz = std::abs(horner(coeffs, z));
        double dz = std::abs(horner(dcoeffs, z));
        double root_err = dz > 0.0 ? 4.0 * fz / dz : std::pow(fz / lead, 1.0 / d);
        root_err += 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + modulus);

        result.root_moduli.push_back(modulus);
        if (std::abs(modulus - 1.0) <= unit_tol) {
            // clamp circle-distance roots to a unit contribution
            rel_err += std::abs(modulus - 1.0) + root_err;
        } else if (modulus > 1.0) {
            value *= modulus;
            rel_err += root_err / modulus;
        } else if (modulus + root_err >= 1.0) {
            rel_err += root_err;
        }
    }

    result.value = value;
    result.error_bound = value * rel_err + 4.0 * std::numeric_limits<double>::epsilon() * value;
    if (result.error_bound > tolerance)
        throw Error("Mahler measure error bound " + std::to_string(result.error_bound) +
                    " exceeds tolerance");
    return result;
}

MahlerBoundsReport check_mahler_bounds(const Poly& f, double tolerance) {
    MahlerResult m = mahler_measure(f, tolerance);
    double height = 0.0;  // |f| = max coefficient magnitude
    for (const auto& [e, c] : f.terms()) {
        Rat a = abs(c);
        height = std::max(height, a.get_d());
    }
    long d = *f.total_degree();
    MahlerBoundsReport report;
    report.measure = m.value;
    report.error_bound = m.error_bound;
    report.lhs = std::ldexp(height, -static_cast<int>(d));
    report.rhs = std::ldexp(height, static_cast<int>(2 * d + 1));
    // both inequalities must hold with margin beyond the root error
    report.holds = report.lhs <= m.value - m.error_bound &&
                   m.value + m.error_bound <= report.rhs;
    return report;
}

}  // namespace nsatz::heights
