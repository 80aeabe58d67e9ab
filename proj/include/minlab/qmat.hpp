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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace minlab {

using cxd = std::complex<double>;

/// Qubit ordering convention, used by every module in this library:
/// qubit 0 (party A) is the MOST significant bit of a basis index.
/// |q0 q1 ... q_{n-1}> has index sum_k q_k * 2^{n-1-k}.
inline std::size_t qubit_bit(std::size_t num_qubits, std::size_t qubit) {
    return num_qubits - 1 - qubit;
}

/// Dense row-major complex matrix. Small by design: registers of up to
/// ~10 qubits, so no sparse formats and no clever blocking.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cxd>& entries() const { return data_; }

    ComplexMatrix adjoint() const;
    cxd trace() const;

    /// Largest entrywise deviation from the Hermitian condition A == A^dagger.
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cxd s, const ComplexMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxd> data_;
};

/// Pure state of a qubit register. Amplitudes are validated to unit norm
/// within 1e-12 on construction.
class PureState {
public:
    PureState(std::size_t num_qubits, std::vector<cxd> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cxd>& amplitudes() const { return amplitudes_; }
    cxd amplitude(std::size_t basis_index) const { return amplitudes_[basis_index]; }

private:
    std::size_t num_qubits_;
    std::vector<cxd> amplitudes_;
};

/// Density operator of a qubit register. Construction checks Hermiticity
/// (1e-12 entrywise) and unit trace (1e-12). Positivity is guaranteed for
/// everything this library produces (outer products, partial traces,
/// convex mixtures) and is asserted spectrally in the test suites, not on
/// every construction.
class DensityMatrix {
public:
    DensityMatrix(std::size_t num_qubits, ComplexMatrix matrix);

    static DensityMatrix from_pure(const PureState& psi);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    std::size_t num_qubits_;
    ComplexMatrix matrix_;
};

/// Descending eigenvalues of a reduced density matrix across a cut,
/// clipped at zero; they sum to one within 1e-10.
struct SchmidtSpectrum {
    std::vector<double> values;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(A^dagger A), i.e. the squared Hilbert-Schmidt norm.
double hs_norm_sq(const ComplexMatrix& a);

/// Partial trace keeping the listed qubits. Output qubit k is input qubit
/// keep[k], so keep order defines the ordering of the reduced register.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Reduced density matrix of a pure state, computed directly from the
/// amplitudes (cheaper than materializing |psi><psi| first). Same keep
/// semantics as partial_trace.
DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep);

/// Eigenvalues of a Hermitian matrix, ascending. Closed forms for sides
/// 1..3; cyclic Jacobi sweeps (off-diagonal Frobenius norm below 1e-12,
/// at most 100 sweeps) for larger sides. Throws std::invalid_argument if
/// the input is not Hermitian within 1e-10.
std::vector<double> herm_eigvals(const ComplexMatrix& h);

/// Schmidt spectrum of psi across cut | complement(cut).
SchmidtSpectrum schmidt_spectrum(const PureState& psi, const std::vector<int>& cut);

} // namespace minlab
