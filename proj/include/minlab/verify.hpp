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

#include <cstdint>
#include <string>

#include "minlab/min.hpp"
#include "minlab/montecarlo.hpp"

namespace minlab {

/// Haar-random pure state (normalized complex Gaussian amplitudes),
/// deterministic in (seed, index).
PureState random_pure_state(int num_qubits, std::uint64_t seed, std::uint64_t index);

/// Mixed 2 x 2^b_qubits states for the oracle and consistency suites.
/// `traced` purifies over a same-size environment and traces it out;
/// `symmetrized` additionally averages with the A-side universal-NOT image
/// (sigma_y (x) I) rho* (sigma_y (x) I), which pins rho_A to I/2 and hence
/// exercises the degenerate (x = 0) branch.
enum class MixedKind { traced, symmetrized };

DensityMatrix random_mixed_2xn(int b_qubits, MixedKind kind, std::uint64_t seed,
                               std::uint64_t index);

struct SuiteResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;    // suite-specific worst figure (gap or deviation)
    double threshold = 0.0;
    std::string detail;
};

/// Theorem 1 vs Theorem 2 on random pure 2 x n states, n cycling 2, 4, 8.
SuiteResult suite_thm1_thm2(std::uint64_t samples, std::uint64_t seed,
                            double tol = 1e-9);

/// Closed form vs brute-force oracle on mixed 2x2 and 2x4 states, both
/// branches exercised. Branch tallies are reported in `detail`.
SuiteResult suite_oracle(std::uint64_t samples, std::uint64_t seed, int grid_points = 20000,
                         double tol = 1e-5);

/// |min_2xn(rho) - min_2xn((U_A x U_B) rho (U_A x U_B)^dag)| <= tol.
SuiteResult suite_lu_invariance(std::uint64_t samples, std::uint64_t seed,
                                double tol = 1e-8);

/// Class M gives (tau1, tau2, tau_ABCD) = (1, 4/3, 0) and class tau_min
/// gives (1, 1, 1), each within tol.
SuiteResult suite_tangles(std::uint64_t samples, std::uint64_t seed, double tol = 1e-10);

/// verify_bounds wrapped in the SuiteResult shape.
SuiteResult suite_bound(BoundFamily family, std::uint64_t samples, std::uint64_t seed);

} // namespace minlab
