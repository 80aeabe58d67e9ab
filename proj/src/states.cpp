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

#include "minlab/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minlab {

namespace {

constexpr double kNormTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Amplitudes of the Bell pairs phi+, phi-, psi+, psi- over |00>,|01>,|10>,|11>.
std::array<std::array<double, 4>, 4> bell_table() {
    const double s = kInvSqrt2;
    return {{{s, 0, 0, s}, {s, 0, 0, -s}, {0, s, s, 0}, {0, s, -s, 0}}};
}

// Draws `count` standard normals; redraws on the (measure-zero) all-zero
// vector so normalization below is always well defined.
std::vector<double> normal_vector(CounterRng& rng, std::size_t count) {
    std::vector<double> v(count);
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (double& x : v) {
            x = rng.normal();
            norm_sq += x * x;
        }
    } while (norm_sq < 1e-24);
    return v;
}

void normalize_to(std::vector<double>& v, double target_norm) {
    double norm_sq = 0.0;
    for (double x : v) norm_sq += x * x;
    const double scale = target_norm / std::sqrt(norm_sq);
    for (double& x : v) x *= scale;
}

} // namespace

void AcinParams::validate() const {
    double sum = 0.0;
    for (double l : lambda) {
        if (!(l >= 0.0)) throw std::invalid_argument("AcinParams: lambda must be nonnegative");
        sum += l * l;
    }
    if (std::abs(sum - 1.0) > kNormTol)
        throw std::invalid_argument("AcinParams: sum of lambda^2 differs from 1 beyond 1e-12");
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::invalid_argument("AcinParams: theta must lie in [0, pi]");
}

void GenericCoeffs::validate() const {
    double sum = 0.0;
    for (const cxd& zj : z) sum += std::norm(zj);
    if (std::abs(sum - 1.0) > kNormTol)
        throw std::invalid_argument("GenericCoeffs: sum of |z|^2 differs from 1 beyond 1e-12");
}

std::string family_name(Family f) {
    switch (f) {
    case Family::acin_full: return "acin_full";
    case Family::acin_x0: return "acin_x0";
    case Family::wclass3: return "wclass3";
    case Family::wclass3_x0: return "wclass3_x0";
    case Family::generic4: return "generic4";
    case Family::class_M: return "class_M";
    case Family::class_taumin: return "class_taumin";
    case Family::wn: return "wn";
    }
    throw std::invalid_argument("family_name: unknown family");
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::acin_full, Family::acin_x0, Family::wclass3, Family::wclass3_x0,
                     Family::generic4, Family::class_M, Family::class_taumin, Family::wn}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown sampler family: " + name);
}

std::string measure_name(Family f) {
    switch (f) {
    case Family::acin_full: return "lambda uniform on positive orthant of S^4, theta uniform on [0,pi]";
    case Family::acin_x0: return "lambda0=1/sqrt2, lambda1=0, (lambda2..4) uniform positive-orthant sphere of radius 1/sqrt2";
    case Family::wclass3: return "lambda uniform on positive orthant of S^3 (lambda4=0), theta uniform on [0,pi]";
    case Family::wclass3_x0: return "lambda0=1/sqrt2, lambda1=lambda4=0, (lambda2,lambda3) uniform positive-orthant circle of radius 1/sqrt2";
    case Family::generic4: return "z uniform on the unit sphere of C^4 (8 standard normals, normalized)";
    case Family::class_M: return "two standard-normal 4-vectors, Gram-Schmidt orthonormalized, scaled to norm 1/sqrt2 each, z = x + iy";
    case Family::class_taumin: return "x uniform on the real sphere S^3";
    case Family::wn: return "amplitudes uniform on the positive orthant of the real sphere S^(n-1)";
    }
    throw std::invalid_argument("measure_name: unknown family");
}

void SamplerSpec::validate() const {
    if (family == Family::wn && n < 3)
        throw std::invalid_argument("SamplerSpec: wn requires n >= 3");
}

int SamplerSpec::num_qubits() const {
    switch (family) {
    case Family::acin_full:
    case Family::acin_x0:
    case Family::wclass3:
    case Family::wclass3_x0: return 3;
    case Family::generic4:
    case Family::class_M:
    case Family::class_taumin: return 4;
    case Family::wn: return n;
    }
    throw std::invalid_argument("SamplerSpec: unknown family");
}

PureState acin_state(const AcinParams& p) {
    p.validate();
    std::vector<cxd> amps(8, cxd{});
    amps[0b000] = p.lambda[0];
    amps[0b100] = p.lambda[1] * cxd{std::cos(p.theta), std::sin(p.theta)};
    amps[0b101] = p.lambda[2];
    amps[0b110] = p.lambda[3];
    amps[0b111] = p.lambda[4];
    return PureState(3, std::move(amps));
}

PureState gghz_state(int n, cxd alpha, cxd beta) {
    if (n < 2) throw std::invalid_argument("gghz_state: n must be >= 2");
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kNormTol)
        throw std::invalid_argument("gghz_state: |alpha|^2 + |beta|^2 must be 1 within 1e-12");
    std::vector<cxd> amps(std::size_t{1} << n, cxd{});
    amps.front() = alpha;
    amps.back() = beta;
    return PureState(static_cast<std::size_t>(n), std::move(amps));
}

PureState w_state(const std::vector<cxd>& amps) {
    const std::size_t n = amps.size();
    if (n < 3) throw std::invalid_argument("w_state: need at least 3 amplitudes");
    std::vector<cxd> full(std::size_t{1} << n, cxd{});
    for (std::size_t i = 0; i < n; ++i) full[std::size_t{1} << qubit_bit(n, i)] = amps[i];
    return PureState(n, std::move(full));
}

PureState generic4_state(const GenericCoeffs& c) {
    c.validate();
    const auto bell = bell_table();
    std::vector<cxd> amps(16, cxd{});
    for (int j = 0; j < 4; ++j) {
        const auto& b = bell[static_cast<std::size_t>(j)];
        for (std::size_t idx = 0; idx < 16; ++idx)
            amps[idx] += c.z[static_cast<std::size_t>(j)] * b[(idx >> 2) & 3] * b[idx & 3];
    }
    return PureState(4, std::move(amps));
}

PureState generic_basis_vector(int j) {
    if (j < 0 || j > 3) throw std::invalid_argument("generic_basis_vector: j must be in 0..3");
    GenericCoeffs c;
    c.z[static_cast<std::size_t>(j)] = 1.0;
    return generic4_state(c);
}

SpecialState parse_special_state(const std::string& name) {
    if (name == "cluster4") return SpecialState::cluster4;
    if (name == "L") return SpecialState::L;
    if (name == "M4") return SpecialState::M4;
    throw std::invalid_argument("unknown special state: " + name);
}

PureState special_state(SpecialState which) {
    switch (which) {
    case SpecialState::cluster4: {
        std::vector<cxd> amps(16, cxd{});
        amps[0b0000] = 0.5;
        amps[0b0011] = 0.5;
        amps[0b1100] = 0.5;
        amps[0b1111] = -0.5;
        return PureState(4, std::move(amps));
    }
    case SpecialState::L: {
        const double s = 1.0 / std::sqrt(3.0);
        const cxd omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
        GenericCoeffs c;
        c.z = {s, s * omega, s * omega * omega, cxd{}};
        return generic4_state(c);
    }
    case SpecialState::M4: {
        GenericCoeffs c;
        const double s6 = 1.0 / std::sqrt(6.0);
        c.z = {cxd{0.0, kInvSqrt2}, s6, s6, s6};
        return generic4_state(c);
    }
    }
    throw std::invalid_argument("special_state: unknown name");
}

PureState bell_state() {
    return PureState(2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

AcinParams sample_acin_params(const SamplerSpec& spec, std::uint64_t index) {
    spec.validate();
    CounterRng rng(spec.seed, index);
    AcinParams p;
    switch (spec.family) {
    case Family::acin_full:
    case Family::wclass3: {
        const std::size_t count = spec.family == Family::acin_full ? 5 : 4;
        std::vector<double> v = normal_vector(rng, count);
        for (double& x : v) x = std::abs(x);
        normalize_to(v, 1.0);
        for (std::size_t i = 0; i < count; ++i) p.lambda[i] = v[i];
        p.theta = rng.uniform(0.0, std::numbers::pi);
        break;
    }
    case Family::acin_x0:
    case Family::wclass3_x0: {
        const std::size_t count = spec.family == Family::acin_x0 ? 3 : 2;
        std::vector<double> v = normal_vector(rng, count);
        for (double& x : v) x = std::abs(x);
        normalize_to(v, kInvSqrt2);
        p.lambda[0] = kInvSqrt2;
        p.lambda[1] = 0.0;
        for (std::size_t i = 0; i < count; ++i) p.lambda[2 + i] = v[i];
        p.theta = 0.0;
        break;
    }
    default:
        throw std::invalid_argument("sample_acin_params: family is not an Acin-form sampler");
    }
    return p;
}

GenericCoeffs sample_generic_coeffs(const SamplerSpec& spec, std::uint64_t index) {
    spec.validate();
    CounterRng rng(spec.seed, index);
    GenericCoeffs c;
    switch (spec.family) {
    case Family::generic4: {
        std::vector<double> v = normal_vector(rng, 8);
        normalize_to(v, 1.0);
        for (int j = 0; j < 4; ++j)
            c.z[static_cast<std::size_t>(j)] = cxd{v[2 * static_cast<std::size_t>(j)],
                                                   v[2 * static_cast<std::size_t>(j) + 1]};
        break;
    }
    case Family::class_M: {
        std::vector<double> x = normal_vector(rng, 4);
        std::vector<double> y;
        double y_norm_sq = 0.0;
        do {
            y = normal_vector(rng, 4);
            normalize_to(x, 1.0);
            double dot = 0.0;
            for (int i = 0; i < 4; ++i) dot += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
            y_norm_sq = 0.0;
            for (int i = 0; i < 4; ++i) {
                y[static_cast<std::size_t>(i)] -= dot * x[static_cast<std::size_t>(i)];
                y_norm_sq += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
            }
        } while (y_norm_sq < 1e-24); // y parallel to x: redraw
        normalize_to(y, kInvSqrt2);
        normalize_to(x, kInvSqrt2);
        for (std::size_t j = 0; j < 4; ++j) c.z[j] = cxd{x[j], y[j]};
        break;
    }
    case Family::class_taumin: {
        std::vector<double> v = normal_vector(rng, 4);
        normalize_to(v, 1.0);
        for (std::size_t j = 0; j < 4; ++j) c.z[j] = v[j];
        break;
    }
    default:
        throw std::invalid_argument("sample_generic_coeffs: family is not a generic-class sampler");
    }
    return c;
}

PureState sample(const SamplerSpec& spec, std::uint64_t index) {
    spec.validate();
    switch (spec.family) {
    case Family::acin_full:
    case Family::acin_x0:
    case Family::wclass3:
    case Family::wclass3_x0: return acin_state(sample_acin_params(spec, index));
    case Family::generic4:
    case Family::class_M:
    case Family::class_taumin: return generic4_state(sample_generic_coeffs(spec, index));
    case Family::wn: {
        CounterRng rng(spec.seed, index);
        std::vector<double> v = normal_vector(rng, static_cast<std::size_t>(spec.n));
        for (double& x : v) x = std::abs(x);
        normalize_to(v, 1.0);
        std::vector<cxd> amps(v.begin(), v.end());
        return w_state(amps);
    }
    }
    throw std::invalid_argument("sample: unknown family");
}

ComplexMatrix haar_random_unitary(std::size_t dim, CounterRng& rng) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = cxd{rng.normal(), rng.normal()};
    // Modified Gram-Schmidt on columns.
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cxd dot = 0.0;
            for (std::size_t i = 0; i < dim; ++i) dot += std::conj(m(i, k)) * m(i, j);
            for (std::size_t i = 0; i < dim; ++i) m(i, j) -= dot * m(i, k);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) norm += std::norm(m(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) /= norm;
    }
    return m;
}

} // namespace minlab
