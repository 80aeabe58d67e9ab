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

#include "minlab/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace minlab {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermConstructTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kHermEigTol = 1e-10;
constexpr double kJacobiOffTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kEigClipTol = 1e-10;
constexpr double kSpectrumSumTol = 1e-10;

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// Places the bits of `value` (MSB-first over `positions.size()` bits) at the
// given index bit positions of a zero word.
std::size_t scatter_bits(std::size_t value, const std::vector<std::size_t>& positions) {
    std::size_t out = 0;
    const std::size_t k = positions.size();
    for (std::size_t j = 0; j < k; ++j) {
        if ((value >> (k - 1 - j)) & 1U) out |= std::size_t{1} << positions[j];
    }
    return out;
}

struct TraceLayout {
    std::vector<std::size_t> keep_bits;   // index bit of each kept qubit, keep order
    std::vector<std::size_t> traced_bits; // index bits of traced-out qubits
};

TraceLayout trace_layout(std::size_t num_qubits, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial trace: keep set is empty");
    std::vector<bool> seen(num_qubits, false);
    TraceLayout layout;
    for (int q : keep) {
        if (q < 0 || static_cast<std::size_t>(q) >= num_qubits)
            throw std::invalid_argument("partial trace: qubit index " + std::to_string(q) +
                                        " out of range");
        if (seen[static_cast<std::size_t>(q)])
            throw std::invalid_argument("partial trace: duplicate qubit index " +
                                        std::to_string(q));
        seen[static_cast<std::size_t>(q)] = true;
        layout.keep_bits.push_back(qubit_bit(num_qubits, static_cast<std::size_t>(q)));
    }
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if (!seen[q]) layout.traced_bits.push_back(qubit_bit(num_qubits, q));
    }
    return layout;
}

std::vector<double> eigvals_2x2(const ComplexMatrix& h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double disc = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return {mean - disc, mean + disc};
}

// Analytic eigenvalues of a 3x3 Hermitian matrix via the trigonometric
// solution of the characteristic cubic (det of the shifted matrix is real).
std::vector<double> eigvals_3x3(const ComplexMatrix& h) {
    const double p1 = std::norm(h(0, 1)) + std::norm(h(0, 2)) + std::norm(h(1, 2));
    const double a00 = h(0, 0).real(), a11 = h(1, 1).real(), a22 = h(2, 2).real();
    if (p1 == 0.0) {
        std::vector<double> ev{a00, a11, a22};
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    const double q = (a00 + a11 + a22) / 3.0;
    const double p2 = (a00 - q) * (a00 - q) + (a11 - q) * (a11 - q) + (a22 - q) * (a22 - q) +
                      2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // B = (H - q I) / p; det(B) is real for Hermitian H.
    const cxd b00 = (h(0, 0) - q) / p, b11 = (h(1, 1) - q) / p, b22 = (h(2, 2) - q) / p;
    const cxd b01 = h(0, 1) / p, b02 = h(0, 2) / p, b12 = h(1, 2) / p;
    const cxd detb = b00 * (b11 * b22 - b12 * std::conj(b12)) -
                     b01 * (std::conj(b01) * b22 - b12 * std::conj(b02)) +
                     b02 * (std::conj(b01) * std::conj(b12) - b11 * std::conj(b02));
    double r = 0.5 * detb.real();
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::vector<double> ev{e1, e2, e3};
    std::sort(ev.begin(), ev.end());
    return ev;
}

double offdiag_norm(const ComplexMatrix& h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

std::vector<double> eigvals_jacobi(ComplexMatrix h) {
    const std::size_t n = h.rows();
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (offdiag_norm(h) < kJacobiOffTol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cxd hpq = h(p, q);
                const double g = std::abs(hpq);
                if (g == 0.0) continue;
                const cxd phase = hpq / g;
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                // Rotation angle from t^2 - 2*tau*t - 1 = 0; smaller-|t| root.
                const double tau = (aqq - app) / (2.0 * g);
                double t;
                if (tau > 0.0)
                    t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else if (tau < 0.0)
                    t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                else
                    t = 1.0;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Unitary J: J(p,p)=c, J(p,q)=-s*phase, J(q,p)=s*conj(phase), J(q,q)=c.
                for (std::size_t k = 0; k < n; ++k) {
                    const cxd hkp = h(k, p);
                    const cxd hkq = h(k, q);
                    h(k, p) = c * hkp + s * std::conj(phase) * hkq;
                    h(k, q) = -s * phase * hkp + c * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cxd hpk = h(p, k);
                    const cxd hqk = h(q, k);
                    h(p, k) = c * hpk + s * phase * hqk;
                    h(q, k) = -s * std::conj(phase) * hpk + c * hqk;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw std::invalid_argument("ComplexMatrix: entries length must be rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cxd ComplexMatrix::trace() const {
    cxd t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sub: shape mismatch");
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cxd aik = a(i, k);
            if (aik == cxd{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(cxd s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = s * a.data_[i];
    return out;
}

PureState::PureState(std::size_t num_qubits, std::vector<cxd> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ == 0) throw std::invalid_argument("PureState: need at least one qubit");
    if (amplitudes_.size() != (std::size_t{1} << num_qubits_))
        throw std::invalid_argument("PureState: amplitude vector must have length 2^n");
    double norm = 0.0;
    for (const cxd& a : amplitudes_) norm += std::norm(a);
    if (std::abs(norm - 1.0) > kNormTol)
        throw std::invalid_argument("PureState: amplitudes not normalized (|sum-1| = " +
                                    std::to_string(std::abs(norm - 1.0)) + ")");
}

DensityMatrix::DensityMatrix(std::size_t num_qubits, ComplexMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
    const std::size_t d = std::size_t{1} << num_qubits_;
    if (!matrix_.is_square() || matrix_.rows() != d || !is_power_of_two(matrix_.rows()))
        throw std::invalid_argument("DensityMatrix: matrix must be square of side 2^n");
    if (matrix_.hermiticity_defect() > kHermConstructTol)
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian within 1e-12");
    if (std::abs(matrix_.trace() - cxd{1.0}) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-12");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const cxd ai = psi.amplitude(i);
        for (std::size_t j = 0; j < d; ++j) m(i, j) = ai * std::conj(psi.amplitude(j));
    }
    // Symmetrize roundoff so the Hermiticity check is exact.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) m(j, i) = std::conj(m(i, j));
    return DensityMatrix(psi.num_qubits(), std::move(m));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cxd aij = a(i, j);
            if (aij == cxd{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

double hs_norm_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cxd& e : a.entries()) s += std::norm(e);
    return s;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const TraceLayout layout = trace_layout(rho.num_qubits(), keep);
    const std::size_t kd = std::size_t{1} << layout.keep_bits.size();
    const std::size_t td = std::size_t{1} << layout.traced_bits.size();
    ComplexMatrix out(kd, kd);
    for (std::size_t a = 0; a < kd; ++a) {
        const std::size_t ra = scatter_bits(a, layout.keep_bits);
        for (std::size_t b = 0; b < kd; ++b) {
            const std::size_t rb = scatter_bits(b, layout.keep_bits);
            cxd acc = 0.0;
            for (std::size_t m = 0; m < td; ++m) {
                const std::size_t tm = scatter_bits(m, layout.traced_bits);
                acc += rho.matrix()(ra | tm, rb | tm);
            }
            out(a, b) = acc;
        }
    }
    for (std::size_t a = 0; a < kd; ++a) {
        out(a, a) = cxd{out(a, a).real(), 0.0};
        for (std::size_t b = a + 1; b < kd; ++b) {
            const cxd sym = 0.5 * (out(a, b) + std::conj(out(b, a)));
            out(a, b) = sym;
            out(b, a) = std::conj(sym);
        }
    }
    return DensityMatrix(layout.keep_bits.size(), std::move(out));
}

DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
    const TraceLayout layout = trace_layout(psi.num_qubits(), keep);
    if (layout.traced_bits.empty()) return DensityMatrix::from_pure(psi);
    const std::size_t kd = std::size_t{1} << layout.keep_bits.size();
    const std::size_t td = std::size_t{1} << layout.traced_bits.size();
    ComplexMatrix out(kd, kd);
    for (std::size_t a = 0; a < kd; ++a) {
        const std::size_t ra = scatter_bits(a, layout.keep_bits);
        for (std::size_t b = a; b < kd; ++b) {
            const std::size_t rb = scatter_bits(b, layout.keep_bits);
            cxd acc = 0.0;
            for (std::size_t m = 0; m < td; ++m) {
                const std::size_t tm = scatter_bits(m, layout.traced_bits);
                acc += psi.amplitude(ra | tm) * std::conj(psi.amplitude(rb | tm));
            }
            if (a == b) acc = cxd{acc.real(), 0.0};
            out(a, b) = acc;
            out(b, a) = std::conj(acc);
        }
    }
    return DensityMatrix(layout.keep_bits.size(), std::move(out));
}

std::vector<double> herm_eigvals(const ComplexMatrix& h) {
    if (!h.is_square()) throw std::invalid_argument("herm_eigvals: matrix must be square");
    if (h.hermiticity_defect() > kHermEigTol)
        throw std::invalid_argument("herm_eigvals: matrix is not Hermitian within 1e-10");
    switch (h.rows()) {
    case 0: return {};
    case 1: return {h(0, 0).real()};
    case 2: return eigvals_2x2(h);
    case 3: return eigvals_3x3(h);
    default: return eigvals_jacobi(h);
    }
}

SchmidtSpectrum schmidt_spectrum(const PureState& psi, const std::vector<int>& cut) {
    if (cut.empty() || cut.size() >= psi.num_qubits())
        throw std::invalid_argument("schmidt_spectrum: cut must be a proper non-empty subset");
    const DensityMatrix reduced = reduced_density(psi, cut);
    std::vector<double> vals = herm_eigvals(reduced.matrix());
    std::sort(vals.begin(), vals.end(), std::greater<>());
    double sum = 0.0;
    for (double& v : vals) {
        if (v < 0.0 && v >= -kEigClipTol) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSpectrumSumTol)
        throw std::runtime_error("schmidt_spectrum: eigenvalues do not sum to 1 within 1e-10");
    return SchmidtSpectrum{std::move(vals)};
}

} // namespace minlab
