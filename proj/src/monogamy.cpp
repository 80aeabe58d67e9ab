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

#include "minlab/monogamy.hpp"

#include <stdexcept>

namespace minlab {

namespace {
constexpr double kMonogamySlack = 1e-9;
}

MonogamyReport monogamy_report(const PureState& psi, int pivot) {
    const int n = static_cast<int>(psi.num_qubits());
    if (n < 3) throw std::invalid_argument("monogamy_report: need at least 3 qubits");
    if (pivot < 0 || pivot >= n)
        throw std::invalid_argument("monogamy_report: pivot out of range");

    MonogamyReport report;
    report.pivot = pivot;
    report.global_min = min_pure(psi, {pivot}).value;
    for (int partner = 0; partner < n; ++partner) {
        if (partner == pivot) continue;
        const DensityMatrix pair = reduced_density(psi, {pivot, partner});
        report.pairwise.emplace_back(partner, min_2xn(pair).value);
        report.pair_sum += report.pairwise.back().second;
    }
    report.deficit = report.global_min - report.pair_sum;
    report.monogamous = report.deficit >= -kMonogamySlack;
    return report;
}

double tangle(const PureState& psi, const std::vector<int>& cutA) {
    if (cutA.empty() || cutA.size() >= psi.num_qubits())
        throw std::invalid_argument("tangle: cut must be a proper non-empty subset");
    const DensityMatrix reduced = reduced_density(psi, cutA);
    return 2.0 * (1.0 - hs_norm_sq(reduced.matrix()));
}

TangleSummary tangle_summary(const PureState& psi) {
    if (psi.num_qubits() != 4)
        throw std::invalid_argument("tangle_summary: state must have exactly 4 qubits");
    TangleSummary s;
    for (int q = 0; q < 4; ++q) s.tau1 += tangle(psi, {q});
    s.tau1 /= 4.0;
    s.tau2 = (tangle(psi, {0, 1}) + tangle(psi, {2, 0}) + tangle(psi, {3, 0})) / 3.0;
    s.tau_abcd = 4.0 * s.tau1 - 3.0 * s.tau2;
    return s;
}

} // namespace minlab
