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

#include "minlab/verify.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "minlab/rng.hpp"

namespace minlab {

namespace {

PureState gaussian_state(int num_qubits, CounterRng& rng) {
    const std::size_t d = std::size_t{1} << num_qubits;
    std::vector<cxd> amps(d);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (cxd& a : amps) {
            a = cxd{rng.normal(), rng.normal()};
            norm += std::norm(a);
        }
    } while (norm < 1e-24);
    const double scale = 1.0 / std::sqrt(norm);
    for (cxd& a : amps) a *= scale;
    return PureState(static_cast<std::size_t>(num_qubits), std::move(amps));
}

} // namespace

PureState random_pure_state(int num_qubits, std::uint64_t seed, std::uint64_t index) {
    if (num_qubits < 1) throw std::invalid_argument("random_pure_state: need >= 1 qubit");
    CounterRng rng(seed, index);
    return gaussian_state(num_qubits, rng);
}

DensityMatrix random_mixed_2xn(int b_qubits, MixedKind kind, std::uint64_t seed,
                               std::uint64_t index) {
    if (b_qubits < 1) throw std::invalid_argument("random_mixed_2xn: need >= 1 B qubit");
    const int sys = 1 + b_qubits;
    const PureState purification = random_pure_state(2 * sys, seed, index);
    std::vector<int> keep(static_cast<std::size_t>(sys));
    for (int q = 0; q < sys; ++q) keep[static_cast<std::size_t>(q)] = q;
    DensityMatrix rho = reduced_density(purification, keep);
    if (kind == MixedKind::traced) return rho;

    // 1/2 [rho + (sigma_y x I) rho^* (sigma_y x I)], written blockwise over
    // party A: the image has blocks [[conj(B11), -conj(B10)], [-conj(B01), conj(B00)]].
    const std::size_t n = rho.dim() / 2;
    const auto& m = rho.matrix();
    ComplexMatrix out(2 * n, 2 * n);
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t bp = 0; bp < n; ++bp) {
            const cxd b00 = m(b, bp), b01 = m(b, n + bp);
            const cxd b10 = m(n + b, bp), b11 = m(n + b, n + bp);
            out(b, bp) = 0.5 * (b00 + std::conj(b11));
            out(b, n + bp) = 0.5 * (b01 - std::conj(b10));
            out(n + b, bp) = 0.5 * (b10 - std::conj(b01));
            out(n + b, n + bp) = 0.5 * (b11 + std::conj(b00));
        }
    }
    return DensityMatrix(rho.num_qubits(), std::move(out));
}

SuiteResult suite_thm1_thm2(std::uint64_t samples, std::uint64_t seed, double tol) {
    SuiteResult r;
    r.name = "thm1_thm2";
    r.threshold = tol;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const int b_qubits = 1 + static_cast<int>(i % 3); // B dimension 2, 4, 8
        const PureState psi = random_pure_state(1 + b_qubits, seed, i);
        const double pure = min_pure(psi, {0}).value;
        const double closed = min_2xn(DensityMatrix::from_pure(psi)).value;
        worst = std::max(worst, std::abs(pure - closed));
    }
    r.worst = worst;
    r.pass = worst <= tol;
    std::ostringstream os;
    os << "max |min_pure - min_2xn| = " << worst << " over " << samples
       << " random pure 2x{2,4,8} states";
    r.detail = os.str();
    return r;
}

SuiteResult suite_oracle(std::uint64_t samples, std::uint64_t seed, int grid_points,
                         double tol) {
    SuiteResult r;
    r.name = "oracle";
    r.threshold = tol;
    double worst = 0.0;
    std::uint64_t hits_x_zero = 0, hits_x_nonzero = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const int b_qubits = (i % 4 < 2) ? 1 : 2;
        const MixedKind kind = (i % 2 == 0) ? MixedKind::traced : MixedKind::symmetrized;
        const DensityMatrix rho = random_mixed_2xn(b_qubits, kind, seed, i);
        const MinResult closed = min_2xn(rho);
        const MinResult oracle = min_bruteforce(rho, grid_points);
        worst = std::max(worst, std::abs(closed.value - oracle.value));
        if (closed.branch == MinBranch::x_zero)
            ++hits_x_zero;
        else
            ++hits_x_nonzero;
    }
    r.worst = worst;
    r.pass = worst <= tol;
    std::ostringstream os;
    os << "max |min_2xn - min_bruteforce| = " << worst << " over " << samples
       << " mixed states (" << hits_x_nonzero << " x_nonzero, " << hits_x_zero << " x_zero)";
    r.detail = os.str();
    return r;
}

SuiteResult suite_lu_invariance(std::uint64_t samples, std::uint64_t seed, double tol) {
    SuiteResult r;
    r.name = "lu_invariance";
    r.threshold = tol;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const int b_qubits = 1 + static_cast<int>(i % 2);
        const DensityMatrix rho = random_mixed_2xn(b_qubits, MixedKind::traced, seed, i);
        CounterRng rng(mix64(seed) ^ 0x5bf03635ULL, i);
        const ComplexMatrix u = kron(haar_random_unitary(2, rng),
                                     haar_random_unitary(rho.dim() / 2, rng));
        ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
        for (std::size_t a = 0; a < rotated.rows(); ++a) {
            rotated(a, a) = cxd{rotated(a, a).real(), 0.0};
            for (std::size_t b = a + 1; b < rotated.cols(); ++b) {
                const cxd sym = 0.5 * (rotated(a, b) + std::conj(rotated(b, a)));
                rotated(a, b) = sym;
                rotated(b, a) = std::conj(sym);
            }
        }
        const DensityMatrix rho_rot(rho.num_qubits(), std::move(rotated));
        worst = std::max(worst, std::abs(min_2xn(rho).value - min_2xn(rho_rot).value));
    }
    r.worst = worst;
    r.pass = worst <= tol;
    std::ostringstream os;
    os << "max |N(rho) - N(U rho U^dag)| = " << worst << " over " << samples
       << " local-unitary rotations";
    r.detail = os.str();
    return r;
}

SuiteResult suite_tangles(std::uint64_t samples, std::uint64_t seed, double tol) {
    SuiteResult r;
    r.name = "tangles";
    r.threshold = tol;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const TangleSummary m =
            tangle_summary(sample(SamplerSpec{Family::class_M, seed}, i));
        worst = std::max({worst, std::abs(m.tau1 - 1.0), std::abs(m.tau2 - 4.0 / 3.0),
                          std::abs(m.tau_abcd)});
        const TangleSummary t =
            tangle_summary(sample(SamplerSpec{Family::class_taumin, seed}, i));
        worst = std::max({worst, std::abs(t.tau1 - 1.0), std::abs(t.tau2 - 1.0),
                          std::abs(t.tau_abcd - 1.0)});
    }
    r.worst = worst;
    r.pass = worst <= tol;
    std::ostringstream os;
    os << "max deviation from (1,4/3,0) / (1,1,1) = " << worst << " over " << samples
       << " samples per class";
    r.detail = os.str();
    return r;
}

SuiteResult suite_bound(BoundFamily family, std::uint64_t samples, std::uint64_t seed) {
    const BoundReport rep = verify_bounds(family, samples, seed);
    SuiteResult r;
    r.name = rep.family;
    r.pass = rep.pass;
    r.worst = rep.max_observed;
    r.threshold = rep.bound_hi;
    std::ostringstream os;
    os << "observed in [" << rep.min_observed << ", " << rep.max_observed << "], bound ["
       << (rep.bound_lo == -std::numeric_limits<double>::max() ? std::string("-inf")
                                                               : std::to_string(rep.bound_lo))
       << ", " << rep.bound_hi << "], " << rep.violations << " violations over " << rep.samples
       << " samples; extremal state: " << rep.worst_witness;
    r.detail = os.str();
    return r;
}

} // namespace minlab
