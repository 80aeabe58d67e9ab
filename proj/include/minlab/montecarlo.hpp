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
#include <filesystem>
#include <string>
#include <vector>

#include "minlab/monogamy.hpp"
#include "minlab/states.hpp"

namespace minlab {

struct CampaignConfig {
    SamplerSpec sampler;
    std::uint64_t samples = 0; // >= 1
    int pivot = 0;
    int histogram_bins = 64;
    int workers = 1;

    void validate() const;
};

struct Histogram {
    std::vector<double> edges;          // bins + 1 entries, fixed by the config
    std::vector<std::uint64_t> counts;  // per-bin pair_sum counts

    bool operator==(const Histogram&) const = default;
};

struct CampaignStats {
    std::string family;
    std::string measure;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    double fraction_monogamous = 0.0;
    double mean_deficit = 0.0;
    double min_deficit = 0.0;
    double max_deficit = 0.0;
    double min_pair_sum = 0.0;
    double max_pair_sum = 0.0;
    Histogram histogram;
    std::uint64_t numerical_flags = 0;

    bool operator==(const CampaignStats&) const = default;
};

/// Runs the sample -> monogamy_report -> accumulate pipeline. Results are
/// identical for any worker count: workers only fill per-sample slots, and
/// every statistic is reduced in one sequential index-ordered pass.
CampaignStats run_campaign(const CampaignConfig& cfg);

enum class BoundFamily { M_thm4, taumin_thm5, thm3, x_nonzero_sum3 };

std::string bound_family_name(BoundFamily f);

struct BoundReport {
    std::string family;
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    double min_observed = 0.0;
    double max_observed = 0.0;
    double bound_lo = 0.0; // -inf encoded as lowest double where unbounded
    double bound_hi = 0.0;
    std::string worst_witness; // parameters of the extremal state
    bool pass = false;
};

/// Samples the family and checks its bound with 1e-9 slack; the report
/// always carries the extremal state's parameters as witness.
BoundReport verify_bounds(BoundFamily family, std::uint64_t samples, std::uint64_t seed);

enum class ExportFormat { json, csv };

ExportFormat parse_export_format(const std::string& name);

/// Writes stats to path. Doubles are serialized as shortest round-trip
/// decimals, so identical stats always produce byte-identical files.
void export_stats(const CampaignStats& stats, ExportFormat format,
                  const std::filesystem::path& path);

CampaignStats import_stats_json(const std::filesystem::path& path);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// 95% Wilson score interval for a binomial fraction.
WilsonInterval wilson95(std::uint64_t successes, std::uint64_t total);

} // namespace minlab
