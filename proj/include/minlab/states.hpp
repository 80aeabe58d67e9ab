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
#include <cstdint>
#include <string>
#include <vector>

#include "minlab/qmat.hpp"
#include "minlab/rng.hpp"

namespace minlab {

/// Canonical five-amplitude form of a pure three-qubit state:
/// l0|000> + l1 e^{i theta}|100> + l2|101> + l3|110> + l4|111>.
struct AcinParams {
    std::array<double, 5> lambda{};
    double theta = 0.0;

    /// Throws std::invalid_argument unless all lambda >= 0, sum of squares
    /// is 1 within 1e-12 and theta lies in [0, pi].
    void validate() const;
};

/// Coefficients of a four-qubit generic-class state sum_j z_j u_j, where
/// u0 = |phi+>|phi+>, u1 = |phi->|phi->, u2 = |psi+>|psi+>,
/// u3 = |psi->|psi-> (Bell pairs on qubits (0,1) and (2,3)).
struct GenericCoeffs {
    std::array<cxd, 4> z{};

    void validate() const; // sum |z|^2 = 1 within 1e-12
};

enum class Family {
    acin_full,
    acin_x0,
    wclass3,
    wclass3_x0,
    generic4,
    class_M,
    class_taumin,
    wn,
};

/// Family names are stable CLI-facing strings.
std::string family_name(Family f);
Family parse_family(const std::string& name);

/// Human-readable description of the sampling measure used for a family.
/// Campaign reports carry this so the measure-dependent percentages stay
/// interpretable.
std::string measure_name(Family f);

struct SamplerSpec {
    Family family;
    std::uint64_t seed = 0;
    int n = 0; // register size, used by Family::wn only (requires n >= 3)

    void validate() const;
    int num_qubits() const;
};

PureState acin_state(const AcinParams& p);

/// alpha|0...0> + beta|1...1> on n >= 2 qubits.
PureState gghz_state(int n, cxd alpha, cxd beta);

/// Generalized W state: amps[i] multiplies the ket with a single 1 at
/// qubit i; the pivot party is index 0. Requires n >= 3.
PureState w_state(const std::vector<cxd>& amps);

PureState generic4_state(const GenericCoeffs& c);

/// Basis vector u_j of the generic class, j in 0..3.
PureState generic_basis_vector(int j);

enum class SpecialState { cluster4, L, M4 };

SpecialState parse_special_state(const std::string& name);

PureState special_state(SpecialState which);

/// |phi+> Bell pair.
PureState bell_state();

/// Deterministic function of (spec, index): same arguments always yield
/// bit-identical amplitudes.
PureState sample(const SamplerSpec& spec, std::uint64_t index);

/// Generic-class coefficients drawn by the generic4 / class_M /
/// class_taumin samplers; exposed so bound-verification reports can name
/// the offending state.
GenericCoeffs sample_generic_coeffs(const SamplerSpec& spec, std::uint64_t index);

/// Acin parameters drawn by the acin_full / acin_x0 / wclass3 /
/// wclass3_x0 samplers.
AcinParams sample_acin_params(const SamplerSpec& spec, std::uint64_t index);

/// Haar-distributed unitary (Gaussian matrix + modified Gram-Schmidt).
ComplexMatrix haar_random_unitary(std::size_t dim, CounterRng& rng);

} // namespace minlab
