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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "minlab/montecarlo.hpp"
#include "minlab/verify.hpp"

using namespace minlab;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("campaign stats are identical for 1 and 4 workers") {
    CampaignConfig cfg;
    cfg.sampler = SamplerSpec{Family::wclass3, 42};
    cfg.samples = 2000;
    cfg.workers = 1;
    const CampaignStats one = run_campaign(cfg);
    cfg.workers = 4;
    const CampaignStats four = run_campaign(cfg);
    CHECK(one == four);
}

TEST_CASE("class_M campaign: every sample monogamous, pair sums below 1/4") {
    CampaignConfig cfg;
    cfg.sampler = SamplerSpec{Family::class_M, 7};
    cfg.samples = 1000;
    cfg.workers = 2;
    const CampaignStats stats = run_campaign(cfg);
    CHECK(stats.fraction_monogamous == 1.0);
    CHECK(stats.max_pair_sum <= 0.25 + 1e-9);
    CHECK(stats.numerical_flags == 0);
}

TEST_CASE("class_taumin campaign: pair sums confined to [1/2, 3/4]") {
    CampaignConfig cfg;
    cfg.sampler = SamplerSpec{Family::class_taumin, 8};
    cfg.samples = 1000;
    cfg.workers = 2;
    const CampaignStats stats = run_campaign(cfg);
    CHECK(stats.min_pair_sum >= 0.5 - 1e-9);
    CHECK(stats.max_pair_sum <= 0.75 + 1e-9);
    // Only exact-boundary states count as monogamous here, and those have
    // measure zero under continuous sampling.
    CHECK(stats.fraction_monogamous <= 0.01);
}

TEST_CASE("wn campaigns have vanishing deficit") {
    for (int n : {3, 4, 5}) {
        CampaignConfig cfg;
        cfg.sampler = SamplerSpec{Family::wn, 9};
        cfg.sampler.n = n;
        cfg.samples = 300;
        const CampaignStats stats = run_campaign(cfg);
        CHECK(std::abs(stats.min_deficit) <= 1e-8);
        CHECK(std::abs(stats.max_deficit) <= 1e-8);
        CHECK(stats.fraction_monogamous == 1.0);
    }
}

TEST_CASE("histogram counts sum to samples and bins match the config") {
    CampaignConfig cfg;
    cfg.sampler = SamplerSpec{Family::acin_full, 10};
    cfg.samples = 500;
    cfg.histogram_bins = 32;
    const CampaignStats stats = run_campaign(cfg);
    REQUIRE(stats.histogram.counts.size() == 32);
    REQUIRE(stats.histogram.edges.size() == 33);
    std::uint64_t total = 0;
    for (std::uint64_t c : stats.histogram.counts) total += c;
    CHECK(total == stats.samples);
    const double count_per_fraction = stats.fraction_monogamous * double(stats.samples);
    CHECK(count_per_fraction == doctest::Approx(std::round(count_per_fraction)));
}

TEST_CASE("campaign config validation") {
    CampaignConfig cfg;
    cfg.sampler = SamplerSpec{Family::acin_full, 1};
    cfg.samples = 0;
    CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
    cfg.samples = 10;
    cfg.pivot = 3;
    CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
    cfg.pivot = 0;
    cfg.workers = 0;
    CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
}

TEST_CASE("json export round-trips to an equal CampaignStats") {
    CampaignConfig cfg;
    cfg.sampler = SamplerSpec{Family::generic4, 11};
    cfg.samples = 200;
    const CampaignStats stats = run_campaign(cfg);
    const auto path = temp_file("minlab_stats_roundtrip.json");
    export_stats(stats, ExportFormat::json, path);
    const CampaignStats loaded = import_stats_json(path);
    CHECK(stats == loaded);
    std::filesystem::remove(path);
}

TEST_CASE("exports are byte-stable and csv rows match the bin count") {
    CampaignConfig cfg;
    cfg.sampler = SamplerSpec{Family::wclass3_x0, 12};
    cfg.samples = 150;
    cfg.histogram_bins = 16;

    cfg.workers = 1;
    const CampaignStats a = run_campaign(cfg);
    cfg.workers = 3;
    const CampaignStats b = run_campaign(cfg);

    const auto pa = temp_file("minlab_stats_a.json");
    const auto pb = temp_file("minlab_stats_b.json");
    export_stats(a, ExportFormat::json, pa);
    export_stats(b, ExportFormat::json, pb);
    CHECK(slurp(pa) == slurp(pb));

    const auto pc = temp_file("minlab_stats.csv");
    export_stats(a, ExportFormat::csv, pc);
    const std::string csv = slurp(pc);
    std::size_t data_rows = 0, comment_rows = 0;
    std::istringstream lines(csv);
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
        if (header) {
            CHECK(line == "bin_lo,bin_hi,count");
            header = false;
        } else if (!line.empty() && line[0] == '#') {
            ++comment_rows;
        } else if (!line.empty()) {
            ++data_rows;
        }
    }
    CHECK(data_rows == 16);
    CHECK(comment_rows > 0);
    for (const auto& p : {pa, pb, pc}) std::filesystem::remove(p);
}

TEST_CASE("verify_bounds passes for the theorem families") {
    const BoundReport thm4 = verify_bounds(BoundFamily::M_thm4, 400, 1);
    CHECK(thm4.pass);
    CHECK(thm4.max_observed <= 0.25 + 1e-9);
    CHECK_FALSE(thm4.worst_witness.empty());

    const BoundReport thm5 = verify_bounds(BoundFamily::taumin_thm5, 400, 2);
    CHECK(thm5.pass);
    CHECK(thm5.min_observed >= 0.5 - 1e-9);
    CHECK(thm5.max_observed <= 0.75 + 1e-9);

    const BoundReport thm3 = verify_bounds(BoundFamily::thm3, 300, 3);
    CHECK(thm3.pass);
    CHECK(thm3.max_observed <= 1e-9);

    const BoundReport sum3 = verify_bounds(BoundFamily::x_nonzero_sum3, 400, 4);
    CHECK(sum3.pass);
    CHECK(sum3.max_observed <= 0.5 + 1e-9);
}

TEST_CASE("wilson interval brackets the point estimate") {
    const WilsonInterval ci = wilson95(660, 1000);
    CHECK(ci.lo > 0.6);
    CHECK(ci.hi < 0.7);
    CHECK(ci.lo < 0.66);
    CHECK(ci.hi > 0.66);
    const WilsonInterval zero = wilson95(0, 100);
    CHECK(zero.lo < 1e-15); // analytically 0; roundoff only
    CHECK(zero.hi > 0.0);
    CHECK_THROWS_AS(wilson95(1, 0), std::invalid_argument);
}

TEST_CASE("verification suites pass at unit-test sizes") {
    CHECK(suite_tangles(40, 77).pass);
    CHECK(suite_thm1_thm2(30, 78).pass);
}
