// Copyright 2026 minlab contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minlab/min.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace minlab {

namespace {

constexpr double kValueClip = 1e-12;
constexpr double kRealResidueTol = 1e-12;
constexpr double kDiagnosticsWindow = 1e-6;
constexpr double kDegenerateGap = 1e-8;
constexpr double kRefineStep = 1e-7;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double clip_value(double v) { return (v < 0.0 && v >= -kValueClip) ? 0.0 : v; }

std::array<double, 3> normalized(std::array<double, 3> v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / n, v[1] / n, v[2] / n};
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool lex_less(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    for (int i = 0; i < 3; ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

// Quadratic form x^t G x for a real symmetric 3x3 G given as ComplexMatrix.
double quad_form(const ComplexMatrix& g, const std::array<double, 3>& x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) acc += x[i] * g(i, j).real() * x[j];
    return acc;
}

MinResult theorem2_result(const ComplexMatrix& gram, const std::array<double, 3>& x,
                          double epsilon_x) {
    const std::vector<double> ev = herm_eigvals(gram);
    const double tr_g = gram(0, 0).real() + gram(1, 1).real() + gram(2, 2).real();
    const double xn = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);

    MinResult res;
    res.spectrum = {ev[0], ev[1], ev[2]};
    const double value_x0 = tr_g - ev[0];
    if (xn > epsilon_x) {
        res.branch = MinBranch::x_nonzero;
        res.value = clip_value(tr_g - quad_form(gram, x) / (xn * xn));
        if (xn < kDiagnosticsWindow)
            res.near_degenerate = BranchDiagnostics{res.value, clip_value(value_x0)};
    } else {
        res.branch = MinBranch::x_zero;
        res.value = clip_value(value_x0);
    }
    return res;
}

} // namespace

double CorrelationData::x_norm() const {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

ComplexMatrix CorrelationData::gram() const {
    ComplexMatrix g(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < cols; ++k) acc += t_at(i, k) * t_at(j, k);
            g(i, j) = acc;
            g(j, i) = acc;
        }
    return g;
}

const char* branch_name(MinBranch b) {
    switch (b) {
    case MinBranch::pure: return "pure";
    case MinBranch::x_nonzero: return "x_nonzero";
    case MinBranch::x_zero: return "x_zero";
    case MinBranch::oracle: return "oracle";
    }
    return "?";
}

void MeasurementDirection::validate() const {
    const double n = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
    if (std::abs(n - 1.0) > 1e-12)
        throw std::invalid_argument("MeasurementDirection: axis must be a unit vector");
}

Pair3 parse_pair3(const std::string& s) {
    if (s == "AB") return Pair3::AB;
    if (s == "AC") return Pair3::AC;
    throw std::invalid_argument("pair must be AB or AC, got: " + s);
}

Pair4 parse_pair4(const std::string& s) {
    if (s == "AB") return Pair4::AB;
    if (s == "AC") return Pair4::AC;
    if (s == "AD") return Pair4::AD;
    throw std::invalid_argument("pair must be AB, AC or AD, got: " + s);
}

std::vector<ComplexMatrix> gellmann_basis(std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("gellmann_basis: dimension must be >= 2");
    std::vector<ComplexMatrix> basis;
    basis.reserve(dim * dim - 1);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = j + 1; k < dim; ++k) {
            ComplexMatrix sym(dim, dim);
            sym(j, k) = kInvSqrt2;
            sym(k, j) = kInvSqrt2;
            basis.push_back(std::move(sym));
            ComplexMatrix asym(dim, dim);
            asym(j, k) = cxd{0.0, -kInvSqrt2};
            asym(k, j) = cxd{0.0, kInvSqrt2};
            basis.push_back(std::move(asym));
        }
    }
    for (std::size_t l = 1; l < dim; ++l) {
        ComplexMatrix diag(dim, dim);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
        for (std::size_t m = 0; m < l; ++m) diag(m, m) = norm;
        diag(l, l) = -static_cast<double>(l) * norm;
        basis.push_back(std::move(diag));
    }
    return basis;
}

CorrelationData correlation_data(const DensityMatrix& rho) {
    if (rho.num_qubits() < 2)
        throw std::invalid_argument("correlation_data: need at least 2 qubits");
    const std::size_t n = rho.dim() / 2;
    const auto& m = rho.matrix();

    // Partial contraction over party A: D_i[b,b'] = sum_{a,a'} X_i[a',a] rho[(a,b),(a',b')]
    // for X = sigma_x, sigma_y, sigma_z, I (all over sqrt(2)).
    std::array<ComplexMatrix, 4> d{ComplexMatrix(n, n), ComplexMatrix(n, n), ComplexMatrix(n, n),
                                   ComplexMatrix(n, n)};
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t bp = 0; bp < n; ++bp) {
            const cxd b00 = m(b, bp);
            const cxd b01 = m(b, n + bp);
            const cxd b10 = m(n + b, bp);
            const cxd b11 = m(n + b, n + bp);
            d[0](b, bp) = kInvSqrt2 * (b10 + b01);
            d[1](b, bp) = kInvSqrt2 * (cxd{0.0, -1.0} * b10 + cxd{0.0, 1.0} * b01);
            d[2](b, bp) = kInvSqrt2 * (b00 - b11);
            d[3](b, bp) = kInvSqrt2 * (b00 + b11);
        }
    }

    const std::vector<ComplexMatrix> ybasis = gellmann_basis(n);
    CorrelationData data;
    data.cols = n * n - 1;
    data.t.resize(3 * data.cols);
    double worst_imag = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < data.cols; ++j) {
            cxd acc = 0.0;
            const ComplexMatrix& y = ybasis[j];
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t bp = 0; bp < n; ++bp) acc += d[i](b, bp) * y(bp, b);
            worst_imag = std::max(worst_imag, std::abs(acc.imag()));
            data.t[i * data.cols + j] = acc.real();
        }
        cxd xc = 0.0;
        for (std::size_t b = 0; b < n; ++b) xc += d[i](b, b);
        xc /= std::sqrt(static_cast<double>(n));
        worst_imag = std::max(worst_imag, std::abs(xc.imag()));
        data.x[i] = xc.real();
    }
    if (worst_imag > kRealResidueTol)
        throw std::runtime_error("correlation_data: imaginary residue above 1e-12");
    return data;
}

MinResult min_pure(const PureState& psi, const std::vector<int>& cutA) {
    const SchmidtSpectrum spec = schmidt_spectrum(psi, cutA);
    double purity = 0.0;
    for (double s : spec.values) purity += s * s;
    MinResult res;
    res.branch = MinBranch::pure;
    res.value = clip_value(1.0 - purity);
    return res;
}

MinResult min_2xn(const DensityMatrix& rho, double epsilon_x) {
    const CorrelationData data = correlation_data(rho);
    return theorem2_result(data.gram(), data.x, epsilon_x);
}

double measurement_disturbance(const DensityMatrix& rho, const MeasurementDirection& dir) {
    dir.validate();
    const auto& m = rho.matrix();
    const std::size_t n = m.rows() / 2;
    const double ex = dir.e[0], ey = dir.e[1], ez = dir.e[2];
    const cxd off{0.5 * ex, -0.5 * ey};
    // Projectors (I +- e.sigma)/2 as 2x2 blocks over party A.
    const std::array<std::array<cxd, 2>, 2> p0{{{0.5 * (1.0 + ez), off},
                                                {std::conj(off), 0.5 * (1.0 - ez)}}};
    const std::array<std::array<cxd, 2>, 2> p1{{{0.5 * (1.0 - ez), -off},
                                                {-std::conj(off), 0.5 * (1.0 + ez)}}};
    cxd coeff[2][2][2][2];
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                for (int j = 0; j < 2; ++j)
                    coeff[i][k][l][j] = p0[i][k] * p0[l][j] + p1[i][k] * p1[l][j];

    double dist = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t bp = 0; bp < n; ++bp) {
            const cxd blk[2][2] = {{m(b, bp), m(b, n + bp)}, {m(n + b, bp), m(n + b, n + bp)}};
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    cxd proj = 0.0;
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l) proj += coeff[i][k][l][j] * blk[k][l];
                    dist += std::norm(blk[i][j] - proj);
                }
            }
        }
    }
    return dist;
}

MinResult min_bruteforce(const DensityMatrix& rho, int grid_points) {
    if (rho.num_qubits() < 2)
        throw std::invalid_argument("min_bruteforce: need at least 2 qubits");
    if (grid_points < 2) throw std::invalid_argument("min_bruteforce: grid_points must be >= 2");

    const DensityMatrix rho_a = partial_trace(rho, {0});
    const cxd off = rho_a.matrix()(0, 1);
    const std::array<double, 3> bloch{2.0 * off.real(), -2.0 * off.imag(),
                                      rho_a.matrix()(0, 0).real() - rho_a.matrix()(1, 1).real()};
    const double gap =
        std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]);

    MinResult res;
    res.branch = MinBranch::oracle;

    if (gap > kDegenerateGap) {
        // rho_A non-degenerate: the only admissible measurement is its
        // eigenbasis, fixed up to sign.
        MeasurementDirection dir{normalized(bloch)};
        res.value = clip_value(measurement_disturbance(rho, dir));
        return res;
    }

    // Degenerate rho_A: every Bloch direction is admissible. Fibonacci
    // sphere sweep, deterministic tie-breaking, then local ascent.
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::array<double, 3> best_e{0.0, 0.0, 1.0};
    double best_v = -1.0;
    for (int i = 0; i < grid_points; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / grid_points;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * i;
        const std::array<double, 3> e{r * std::cos(phi), r * std::sin(phi), z};
        const double v = measurement_disturbance(rho, MeasurementDirection{normalized(e)});
        if (v > best_v || (v == best_v && lex_less(e, best_e))) {
            best_v = v;
            best_e = normalized(e);
        }
    }

    double step = 2.0 * std::numbers::pi / std::sqrt(static_cast<double>(grid_points));
    int guard = 0;
    while (step >= kRefineStep && ++guard < 20000) {
        const std::size_t axis = static_cast<std::size_t>(
            std::min_element(best_e.begin(), best_e.end(),
                             [](double a, double b) { return std::abs(a) < std::abs(b); }) -
            best_e.begin());
        std::array<double, 3> unit{0.0, 0.0, 0.0};
        unit[axis] = 1.0;
        const std::array<double, 3> u = normalized(cross(best_e, unit));
        const std::array<double, 3> v = cross(best_e, u);
        bool improved = false;
        for (const auto& dirn : {u, v}) {
            for (double sgn : {1.0, -1.0}) {
                const std::array<double, 3> cand = normalized(
                    {best_e[0] + sgn * step * dirn[0], best_e[1] + sgn * step * dirn[1],
                     best_e[2] + sgn * step * dirn[2]});
                const double val = measurement_disturbance(rho, MeasurementDirection{cand});
                if (val > best_v) {
                    best_v = val;
                    best_e = cand;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    res.value = clip_value(best_v);
    return res;
}

std::array<double, 3> acin_coherent_vector(const AcinParams& p) {
    return {p.lambda[0] * p.lambda[1] * std::cos(p.theta),
            -p.lambda[0] * p.lambda[1] * std::sin(p.theta), p.lambda[0] * p.lambda[0] - 0.5};
}

namespace {

// The 3x3 correlation matrix of rho_AB for an Acin-form state; rho_AC
// uses the same expression with lambda2 and lambda3 interchanged. The
// (3,3) entry is 1/2 tr(rho sigma_z sigma_z) = 0.5 - l1^2 - l2^2 under the
// normalization constraint.
ComplexMatrix acin_correlation(double l0, double l1, double l2, double l3, double l4,
                               double theta) {
    const double ct = std::cos(theta), st = std::sin(theta);
    ComplexMatrix t(3, 3);
    t(0, 0) = l0 * l3;
    t(0, 2) = l0 * l1 * ct;
    t(1, 1) = -l0 * l3;
    t(1, 2) = -l0 * l1 * st;
    t(2, 0) = -l1 * l3 * ct - l2 * l4;
    t(2, 1) = -l1 * l3 * st;
    t(2, 2) = 0.5 - l1 * l1 - l2 * l2;
    return t;
}

} // namespace

ClosedFormTerms3 closed_form_terms3(const AcinParams& p) {
    p.validate();
    const double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2], l3 = p.lambda[3],
                 l4 = p.lambda[4];
    const auto x = acin_coherent_vector(p);
    const double xn = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    ClosedFormTerms3 t;
    // The last terms of c and k are the squared (3,3) correlation entries
    // 0.5 - l1^2 - l2^2 (AB) and 0.5 - l1^2 - l3^2 (AC).
    if (xn > 1e-10) {
        const double c2 = std::cos(p.theta) * std::cos(p.theta);
        const double s2 = std::sin(p.theta) * std::sin(p.theta);
        t.a = l0 * l0 * l3 * l3 + l0 * l0 * l1 * l1 * c2;
        t.b = l0 * l0 * l3 * l3 + l0 * l0 * l1 * l1 * s2;
        const double c_cross = l2 * l4 + l1 * l3 * std::cos(p.theta);
        t.c = c_cross * c_cross + l1 * l1 * l3 * l3 * s2 +
              (0.5 - l1 * l1 - l2 * l2) * (0.5 - l1 * l1 - l2 * l2);
        t.g = l0 * l0 * l2 * l2 + l0 * l0 * l1 * l1 * c2;
        t.f = l0 * l0 * l2 * l2 + l0 * l0 * l1 * l1 * s2;
        const double k_cross = l3 * l4 + l1 * l2 * std::cos(p.theta);
        t.k = k_cross * k_cross + l1 * l1 * l2 * l2 * s2 +
              (0.5 - l1 * l1 - l3 * l3) * (0.5 - l1 * l1 - l3 * l3);
    } else {
        t.a = l0 * l0 * l3 * l3;
        t.b = -l0 * l2 * l3 * l4;
        t.c = l2 * l2 * l4 * l4 + (0.5 - l2 * l2) * (0.5 - l2 * l2);
        t.g = l0 * l0 * l2 * l2;
        t.f = 0.0;
        t.k = l3 * l3 * l4 * l4 + (0.5 - l3 * l3) * (0.5 - l3 * l3);
    }
    return t;
}

MinResult min3_closed(const AcinParams& p, Pair3 pair) {
    p.validate();
    double l0 = p.lambda[0], l1 = p.lambda[1], l2 = p.lambda[2], l3 = p.lambda[3],
           l4 = p.lambda[4];
    if (pair == Pair3::AC) std::swap(l2, l3);

    const ComplexMatrix t = acin_correlation(l0, l1, l2, l3, l4, p.theta);

    ComplexMatrix gram(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 3; ++k) acc += t(i, k).real() * t(j, k).real();
            gram(i, j) = acc;
            gram(j, i) = acc;
        }
    const std::vector<double> ev = herm_eigvals(gram);
    const auto x = acin_coherent_vector(p);
    const double xn = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);

    const ClosedFormTerms3 terms = closed_form_terms3(p);
    MinResult res;
    res.spectrum = {ev[0], ev[1], ev[2]};
    const double tr_g = gram(0, 0).real() + gram(1, 1).real() + gram(2, 2).real();
    if (xn > 1e-10) {
        res.branch = MinBranch::x_nonzero;
        const double row_sum = pair == Pair3::AB ? terms.a + terms.b + terms.c
                                                 : terms.g + terms.f + terms.k;
        res.value = clip_value(row_sum - quad_form(gram, x) / (xn * xn));
        if (xn < kDiagnosticsWindow)
            res.near_degenerate = BranchDiagnostics{res.value, clip_value(tr_g - ev[0])};
    } else {
        res.branch = MinBranch::x_zero;
        double first, second;
        if (pair == Pair3::AB) {
            first = terms.a;
            second = terms.c;
        } else {
            first = terms.g;
            second = terms.k;
        }
        const double b = terms.b;
        const double lam_min = std::min(
            first, 0.5 * (first + second -
                          std::sqrt((first - second) * (first - second) + 4.0 * b * b)));
        res.value = clip_value(2.0 * first + second - lam_min);
    }
    return res;
}

XStateParams xstate_params(const GenericCoeffs& c, Pair4 pair) {
    c.validate();
    const cxd a = c.z[0] + c.z[1];
    const cxd b = c.z[0] - c.z[1];
    const cxd cc = c.z[2] + c.z[3];
    const cxd d = c.z[2] - c.z[3];
    XStateParams xp;
    xp.abcd = {a, b, cc, d};
    switch (pair) {
    case Pair4::AB:
        xp.alpha = 2.0 * (std::norm(c.z[0]) + std::norm(c.z[1]));
        xp.beta = 2.0 * (std::norm(c.z[0]) - std::norm(c.z[1]));
        xp.gamma = 2.0 * (std::norm(c.z[2]) + std::norm(c.z[3]));
        xp.delta = 2.0 * (std::norm(c.z[2]) - std::norm(c.z[3]));
        break;
    case Pair4::AC:
        xp.alpha = std::norm(a) + std::norm(cc);
        xp.beta = 2.0 * (std::conj(a) * cc).real();
        xp.gamma = std::norm(b) + std::norm(d);
        xp.delta = 2.0 * (std::conj(b) * d).real();
        break;
    case Pair4::AD:
        xp.alpha = std::norm(a) + std::norm(d);
        xp.beta = 2.0 * (std::conj(a) * d).real();
        xp.gamma = std::norm(b) + std::norm(cc);
        xp.delta = 2.0 * (std::conj(b) * cc).real();
        break;
    }
    if (std::abs(xp.alpha + xp.gamma - 2.0) > 1e-10)
        throw std::runtime_error("xstate_params: alpha + gamma differs from 2 beyond 1e-10");
    return xp;
}

MinResult min4_closed(const GenericCoeffs& c, Pair4 pair) {
    const XStateParams xp = xstate_params(c, pair);
    const double k = xp.kconst;
    std::array<double, 3> lam{k * (xp.beta + xp.delta) * (xp.beta + xp.delta),
                              k * (xp.alpha - xp.gamma) * (xp.alpha - xp.gamma),
                              k * (xp.beta - xp.delta) * (xp.beta - xp.delta)};
    std::sort(lam.begin(), lam.end());
    MinResult res;
    res.branch = MinBranch::x_zero;
    res.spectrum = lam;
    res.value = clip_value(
        k * (2.0 * (xp.beta * xp.beta + xp.delta * xp.delta) +
             (xp.alpha - xp.gamma) * (xp.alpha - xp.gamma)) -
        lam[0]);
    return res;
}

} // namespace minlab
