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
#include <optional>
#include <vector>

#include "minlab/qmat.hpp"
#include "minlab/states.hpp"

namespace minlab {

/// Correlation matrix T (3 rows by n^2-1 columns, row-major) and coherent
/// vector x of a 2 x n state, expanded in the orthonormal Hermitian bases
/// X_i = sigma_i/sqrt(2) (X_0 = I/sqrt(2)) on A and generalized Gell-Mann
/// matrices (Y_0 = I/sqrt(n)) on B:
///   t_ij = tr(rho X_i (x) Y_j),   x_i = tr(rho X_i (x) Y_0).
struct CorrelationData {
    std::size_t cols = 0;
    std::vector<double> t; // 3 * cols, row-major
    std::array<double, 3> x{};

    double t_at(std::size_t i, std::size_t j) const { return t[i * cols + j]; }
    double x_norm() const;
    /// T T^t as a 3x3 Hermitian (real symmetric) matrix.
    ComplexMatrix gram() const;
};

enum class MinBranch { pure, x_nonzero, x_zero, oracle };

const char* branch_name(MinBranch b);

/// Values of both two-branch formulas, recorded when ||x|| falls in the
/// numerically delicate window (1e-10, 1e-6): the formula is discontinuous
/// across the degeneracy, so near-degenerate inputs get both readings.
struct BranchDiagnostics {
    double value_x_nonzero;
    double value_x_zero;
};

struct MinResult {
    double value = 0.0;
    MinBranch branch = MinBranch::pure;
    /// Eigenvalues of T T^t, ascending. Populated by the x_nonzero/x_zero
    /// closed forms; left at zero for the pure and oracle branches, which
    /// never build T.
    std::array<double, 3> spectrum{};
    std::optional<BranchDiagnostics> near_degenerate;
};

/// Bloch axis of a von Neumann qubit measurement {(I +- e.sigma)/2}.
struct MeasurementDirection {
    std::array<double, 3> e{};

    void validate() const; // unit norm within 1e-12
};

/// Terms of the three-qubit closed forms. In the ||x|| = 0 branch a, b, c,
/// g, k follow the spectral decomposition of TT^t (f is unused and left 0);
/// in the ||x|| != 0 branch all six are the squared row norms of T for the
/// AB (a, b, c) and AC (g, f, k) reductions.
struct ClosedFormTerms3 {
    double a = 0, b = 0, c = 0, g = 0, f = 0, k = 0;
};

enum class Pair3 { AB, AC };
enum class Pair4 { AB, AC, AD };

Pair3 parse_pair3(const std::string& s);
Pair4 parse_pair4(const std::string& s);

/// X-form parameters of a generic-class two-qubit reduction
/// (1/4)[[alpha,0,0,beta],[0,gamma,delta,0],[0,delta,gamma,0],[beta,0,0,alpha]],
/// together with the derived a = z0+z1, b = z0-z1, c = z2+z3, d = z2-z3.
struct XStateParams {
    double alpha = 0, beta = 0, gamma = 0, delta = 0;
    std::array<cxd, 4> abcd{};
    double kconst = 1.0 / 16.0;
};

/// Expansion data of a 1+m qubit state split after qubit 0.
CorrelationData correlation_data(const DensityMatrix& rho);

/// Theorem-1 value 1 - sum_i s_i^2 across cutA | rest of a pure state.
MinResult min_pure(const PureState& psi, const std::vector<int>& cutA);

/// Theorem-2 two-branch closed form for a 2 x n state (party A = qubit 0).
MinResult min_2xn(const DensityMatrix& rho, double epsilon_x = 1e-10);

/// Direct maximization of ||rho - Pi^A(rho)||^2 over von Neumann
/// measurements on A that leave rho_A invariant. Non-degenerate rho_A
/// (eigenvalue gap > 1e-8) admits only its eigenbasis; a degenerate rho_A
/// admits every Bloch direction, swept on a Fibonacci-sphere grid and
/// refined by local search down to 1e-7 steps. This is the independent
/// oracle for the closed forms and shares none of their machinery.
MinResult min_bruteforce(const DensityMatrix& rho, int grid_points = 20000);

/// ||rho - Pi_e(rho)||^2 for the measurement along e; exposed for tests.
double measurement_disturbance(const DensityMatrix& rho, const MeasurementDirection& e);

/// Coherent vector (l0 l1 cos theta, -l0 l1 sin theta, l0^2 - 1/2) shared
/// by both reductions of an Acin-form state.
std::array<double, 3> acin_coherent_vector(const AcinParams& p);

ClosedFormTerms3 closed_form_terms3(const AcinParams& p);

/// Three-qubit closed form for N(rho_AB) / N(rho_AC); the AC reduction is
/// the AB one with lambda2 and lambda3 interchanged.
MinResult min3_closed(const AcinParams& p, Pair3 pair);

XStateParams xstate_params(const GenericCoeffs& c, Pair4 pair);

/// Four-qubit generic-class closed form
///   N = k [2(beta^2 + delta^2) + (alpha - gamma)^2] - lambda3,
///   lambda3 = k min{(beta+delta)^2, (alpha-gamma)^2, (beta-delta)^2},
/// with k = 1/16; the coherent vector vanishes for all three pairs.
MinResult min4_closed(const GenericCoeffs& c, Pair4 pair);

/// Orthonormal traceless Hermitian basis (generalized Gell-Mann matrices)
/// of the given dimension; tr(Y_i Y_j) = delta_ij, n^2 - 1 elements.
std::vector<ComplexMatrix> gellmann_basis(std::size_t dim);

} // namespace minlab
