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

#include <utility>
#include <vector>

#include "minlab/min.hpp"
#include "minlab/qmat.hpp"

namespace minlab {

/// Monogamy verdict for one pivot party: the global pivot|rest value
/// against the sum of pairwise values on the two-qubit reductions.
/// Equality counts as monogamous (deficit >= -1e-9).
struct MonogamyReport {
    int pivot = 0;
    double global_min = 0.0;
    std::vector<std::pair<int, double>> pairwise; // (partner index, N)
    double pair_sum = 0.0;
    double deficit = 0.0; // global_min - pair_sum
    bool monogamous = false;
};

MonogamyReport monogamy_report(const PureState& psi, int pivot);

/// Tangle 2(1 - tr rho_A^2) across cutA | rest.
double tangle(const PureState& psi, const std::vector<int>& cutA);

struct TangleSummary {
    double tau1 = 0.0;     // mean of the four one-vs-rest tangles
    double tau2 = 0.0;     // mean of the three two-vs-two tangles
    double tau_abcd = 0.0; // 4 tau1 - 3 tau2
};

TangleSummary tangle_summary(const PureState& psi);

} // namespace minlab
