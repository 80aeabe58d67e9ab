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

#include "minlab/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace minlab {

namespace {

constexpr double kBoundSlack = 1e-9;

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string acin_witness(const AcinParams& p) {
    std::ostringstream os;
    os << "lambda=(";
    for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << format_double(p.lambda[i]);
    os << "), theta=" << format_double(p.theta);
    return os.str();
}

std::string generic_witness(const GenericCoeffs& c) {
    std::ostringstream os;
    os << "z=(";
    for (std::size_t i = 0; i < 4; ++i)
        os << (i ? ", " : "") << format_double(c.z[i].real()) << (c.z[i].imag() < 0 ? "-" : "+")
           << format_double(std::abs(c.z[i].imag())) << "i";
    os << ")";
    return os.str();
}

void run_sharded(std::uint64_t samples, int workers,
                 const std::function<void(std::uint64_t)>& body) {
    if (workers <= 1 || samples < 2) {
        for (std::uint64_t i = 0; i < samples; ++i) body(i);
        return;
    }
    const auto w = static_cast<std::uint64_t>(workers);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::uint64_t t = 0; t < w; ++t) {
        const std::uint64_t lo = samples * t / w;
        const std::uint64_t hi = samples * (t + 1) / w;
        pool.emplace_back([lo, hi, &body] {
            for (std::uint64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

} // namespace

void CampaignConfig::validate() const {
    sampler.validate();
    if (samples < 1) throw std::invalid_argument("CampaignConfig: samples must be >= 1");
    if (histogram_bins < 1)
        throw std::invalid_argument("CampaignConfig: histogram_bins must be >= 1");
    if (workers < 1) throw std::invalid_argument("CampaignConfig: workers must be >= 1");
    const int n = sampler.num_qubits();
    if (pivot < 0 || pivot >= n) throw std::invalid_argument("CampaignConfig: pivot out of range");
}

CampaignStats run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const std::uint64_t n = cfg.samples;
    std::vector<double> pair_sums(n);
    std::vector<double> deficits(n);
    std::vector<unsigned char> monog(n);
    std::vector<unsigned char> flagged(n, 0);

    const SamplerSpec spec = cfg.sampler;
    const int pivot = cfg.pivot;
    run_sharded(n, cfg.workers, [&](std::uint64_t i) {
        try {
            const PureState psi = sample(spec, i);
            const MonogamyReport rep = monogamy_report(psi, pivot);
            pair_sums[i] = rep.pair_sum;
            deficits[i] = rep.deficit;
            monog[i] = rep.monogamous ? 1 : 0;
        } catch (...) {
            flagged[i] = 1;
        }
    });

    CampaignStats stats;
    stats.family = family_name(spec.family);
    stats.measure = measure_name(spec.family);
    stats.seed = spec.seed;
    stats.samples = n;

    const int bins = cfg.histogram_bins;
    const double hist_hi = 0.5 * (spec.num_qubits() - 1);
    stats.histogram.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int b = 0; b <= bins; ++b)
        stats.histogram.edges[static_cast<std::size_t>(b)] = hist_hi * b / bins;
    stats.histogram.counts.assign(static_cast<std::size_t>(bins), 0);

    // Single index-ordered reduction pass: the result is independent of the
    // worker partition by construction.
    std::uint64_t monog_count = 0;
    std::uint64_t good = 0;
    double deficit_sum = 0.0;
    stats.min_deficit = std::numeric_limits<double>::infinity();
    stats.max_deficit = -std::numeric_limits<double>::infinity();
    stats.min_pair_sum = std::numeric_limits<double>::infinity();
    stats.max_pair_sum = -std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < n; ++i) {
        if (flagged[i]) {
            ++stats.numerical_flags;
            continue;
        }
        ++good;
        monog_count += monog[i];
        deficit_sum += deficits[i];
        stats.min_deficit = std::min(stats.min_deficit, deficits[i]);
        stats.max_deficit = std::max(stats.max_deficit, deficits[i]);
        stats.min_pair_sum = std::min(stats.min_pair_sum, pair_sums[i]);
        stats.max_pair_sum = std::max(stats.max_pair_sum, pair_sums[i]);
        auto bin = static_cast<long long>(std::floor(pair_sums[i] / hist_hi * bins));
        bin = std::clamp(bin, 0LL, static_cast<long long>(bins - 1));
        ++stats.histogram.counts[static_cast<std::size_t>(bin)];
    }
    stats.fraction_monogamous =
        static_cast<double>(monog_count) / static_cast<double>(n);
    stats.mean_deficit = good ? deficit_sum / static_cast<double>(good) : 0.0;
    if (good == 0) {
        stats.min_deficit = stats.max_deficit = 0.0;
        stats.min_pair_sum = stats.max_pair_sum = 0.0;
    }
    return stats;
}

std::string bound_family_name(BoundFamily f) {
    switch (f) {
    case BoundFamily::M_thm4: return "M_thm4";
    case BoundFamily::taumin_thm5: return "taumin_thm5";
    case BoundFamily::thm3: return "thm3";
    case BoundFamily::x_nonzero_sum3: return "x_nonzero_sum3";
    }
    throw std::invalid_argument("bound_family_name: unknown family");
}

BoundReport verify_bounds(BoundFamily family, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("verify_bounds: samples must be >= 1");
    BoundReport report;
    report.family = bound_family_name(family);
    report.samples = samples;
    report.min_observed = std::numeric_limits<double>::infinity();
    report.max_observed = -std::numeric_limits<double>::infinity();

    // Distance past [bound_lo, bound_hi]; the sample maximizing it (or, when
    // nothing violates, the one closest to a bound) becomes the witness.
    double worst_excess = -std::numeric_limits<double>::infinity();
    const auto consider = [&](double value, const std::string& witness) {
        report.min_observed = std::min(report.min_observed, value);
        report.max_observed = std::max(report.max_observed, value);
        const double excess = std::max(report.bound_lo - value, value - report.bound_hi);
        if (excess > kBoundSlack) ++report.violations;
        if (excess > worst_excess) {
            worst_excess = excess;
            report.worst_witness = witness;
        }
    };

    switch (family) {
    case BoundFamily::M_thm4: {
        report.bound_lo = 0.0;
        report.bound_hi = 0.25;
        const SamplerSpec spec{Family::class_M, seed};
        for (std::uint64_t i = 0; i < samples; ++i) {
            const GenericCoeffs c = sample_generic_coeffs(spec, i);
            const MonogamyReport rep = monogamy_report(generic4_state(c), 0);
            consider(rep.pair_sum, generic_witness(c));
        }
        break;
    }
    case BoundFamily::taumin_thm5: {
        report.bound_lo = 0.5;
        report.bound_hi = 0.75;
        const SamplerSpec spec{Family::class_taumin, seed};
        for (std::uint64_t i = 0; i < samples; ++i) {
            const GenericCoeffs c = sample_generic_coeffs(spec, i);
            const MonogamyReport rep = monogamy_report(generic4_state(c), 0);
            consider(rep.pair_sum, generic_witness(c));
        }
        break;
    }
    case BoundFamily::thm3: {
        // N(rho_XY) <= sum of the TT^t eigenvalues; tracked as the excess
        // value - sum, which must stay <= 0.
        report.bound_lo = -std::numeric_limits<double>::max();
        report.bound_hi = 0.0;
        const SamplerSpec spec{Family::generic4, seed};
        for (std::uint64_t i = 0; i < samples; ++i) {
            const GenericCoeffs c = sample_generic_coeffs(spec, i);
            const PureState psi = generic4_state(c);
            for (int partner = 1; partner < 4; ++partner) {
                const MinResult res = min_2xn(reduced_density(psi, {0, partner}));
                const double sum = res.spectrum[0] + res.spectrum[1] + res.spectrum[2];
                consider(res.value - sum, generic_witness(c) + " pair A" +
                                              std::string(1, static_cast<char>('A' + partner)));
            }
        }
        break;
    }
    case BoundFamily::x_nonzero_sum3: {
        report.bound_lo = -std::numeric_limits<double>::max();
        report.bound_hi = 0.5;
        const SamplerSpec spec{Family::acin_full, seed};
        for (std::uint64_t i = 0; i < samples; ++i) {
            const AcinParams p = sample_acin_params(spec, i);
            const MinResult ab = min3_closed(p, Pair3::AB);
            const MinResult ac = min3_closed(p, Pair3::AC);
            if (ab.branch != MinBranch::x_nonzero) continue; // claim covers ||x|| != 0 only
            consider(ab.value + ac.value, acin_witness(p));
        }
        break;
    }
    }
    report.pass = report.violations == 0;
    return report;
}

ExportFormat parse_export_format(const std::string& name) {
    if (name == "json") return ExportFormat::json;
    if (name == "csv") return ExportFormat::csv;
    throw std::invalid_argument("unknown export format: " + name);
}

namespace {

nlohmann::ordered_json stats_to_json(const CampaignStats& s) {
    nlohmann::ordered_json j;
    j["family"] = s.family;
    j["measure_name"] = s.measure;
    j["seed"] = s.seed;
    j["samples"] = s.samples;
    j["fraction_monogamous"] = s.fraction_monogamous;
    j["mean_deficit"] = s.mean_deficit;
    j["min_deficit"] = s.min_deficit;
    j["max_deficit"] = s.max_deficit;
    j["min_pair_sum"] = s.min_pair_sum;
    j["max_pair_sum"] = s.max_pair_sum;
    j["histogram"]["edges"] = s.histogram.edges;
    j["histogram"]["counts"] = s.histogram.counts;
    j["numerical_flags"] = s.numerical_flags;
    return j;
}

} // namespace

void export_stats(const CampaignStats& stats, ExportFormat format,
                  const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("export_stats: cannot open " + path.string());
    if (format == ExportFormat::json) {
        out << stats_to_json(stats).dump(2) << '\n';
    } else {
        out << "bin_lo,bin_hi,count\n";
        for (std::size_t b = 0; b < stats.histogram.counts.size(); ++b) {
            out << format_double(stats.histogram.edges[b]) << ','
                << format_double(stats.histogram.edges[b + 1]) << ','
                << stats.histogram.counts[b] << '\n';
        }
        out << "# family=" << stats.family << '\n';
        out << "# measure_name=" << stats.measure << '\n';
        out << "# seed=" << stats.seed << '\n';
        out << "# samples=" << stats.samples << '\n';
        out << "# fraction_monogamous=" << format_double(stats.fraction_monogamous) << '\n';
        out << "# mean_deficit=" << format_double(stats.mean_deficit) << '\n';
        out << "# min_deficit=" << format_double(stats.min_deficit) << '\n';
        out << "# max_deficit=" << format_double(stats.max_deficit) << '\n';
        out << "# min_pair_sum=" << format_double(stats.min_pair_sum) << '\n';
        out << "# max_pair_sum=" << format_double(stats.max_pair_sum) << '\n';
        out << "# numerical_flags=" << stats.numerical_flags << '\n';
    }
    if (!out) throw std::runtime_error("export_stats: write failed for " + path.string());
}

CampaignStats import_stats_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("import_stats_json: cannot open " + path.string());
    nlohmann::json j;
    in >> j;
    CampaignStats s;
    s.family = j.at("family").get<std::string>();
    s.measure = j.at("measure_name").get<std::string>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.samples = j.at("samples").get<std::uint64_t>();
    s.fraction_monogamous = j.at("fraction_monogamous").get<double>();
    s.mean_deficit = j.at("mean_deficit").get<double>();
    s.min_deficit = j.at("min_deficit").get<double>();
    s.max_deficit = j.at("max_deficit").get<double>();
    s.min_pair_sum = j.at("min_pair_sum").get<double>();
    s.max_pair_sum = j.at("max_pair_sum").get<double>();
    s.histogram.edges = j.at("histogram").at("edges").get<std::vector<double>>();
    s.histogram.counts = j.at("histogram").at("counts").get<std::vector<std::uint64_t>>();
    s.numerical_flags = j.at("numerical_flags").get<std::uint64_t>();
    return s;
}

WilsonInterval wilson95(std::uint64_t successes, std::uint64_t total) {
    if (total == 0) throw std::invalid_argument("wilson95: total must be positive");
    const double z = 1.959963984540054;
    const double n = static_cast<double>(total);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

} // namespace minlab
