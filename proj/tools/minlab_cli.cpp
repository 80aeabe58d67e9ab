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
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minlab/min.hpp"
#include "minlab/monogamy.hpp"
#include "minlab/montecarlo.hpp"
#include "minlab/qmat.hpp"
#include "minlab/states.hpp"
#include "minlab/verify.hpp"

namespace {

using namespace minlab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

cxd parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return cxd{std::stod(s), 0.0};
        return cxd{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("cannot parse complex value '" + s + "' (expected re or re,im)");
    }
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const std::string tok =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw UsageError("cannot parse real value '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MINLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("MINLAB_SEED is not an integer: ") + env);
        }
    }
    return 1;
}

// Flags shared by `eval` and `check` that describe one explicit state.
struct StateFlags {
    std::string family;
    int n = 3;
    std::string alpha, beta;
    std::string lambda;
    double theta = 0.0;
    std::string amps;
    std::vector<std::string> z;
    std::string special;

    std::optional<AcinParams> acin;      // set when family describes an Acin state
    std::optional<GenericCoeffs> coeffs; // set for generic4

    void add_options(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "state family: bell | ghz | gghz | acin | w | generic4 | special "
                        "(ghz3/ghz4/gghz3/gghz4 accepted)")
            ->required();
        cmd->add_option("--n", n, "register size for ghz/gghz (default 3)");
        cmd->add_option("--alpha", alpha, "gghz amplitude on |0...0>, re or re,im");
        cmd->add_option("--beta", beta, "gghz amplitude on |1...1>, re or re,im");
        cmd->add_option("--lambda", lambda, "acin: l0,l1,l2,l3,l4");
        cmd->add_option("--theta", theta, "acin: phase in [0, pi] (default 0)");
        cmd->add_option("--amps", amps, "w: comma-separated real amplitudes, one per qubit");
        cmd->add_option("--z", z, "generic4: four re,im coefficients")->expected(4);
        cmd->add_option("--name", special, "special: cluster4 | L | M4");
    }

    PureState build() {
        std::string fam = family;
        if (fam == "ghz3" || fam == "ghz4") {
            n = fam.back() - '0';
            fam = "ghz";
        }
        if (fam == "gghz3" || fam == "gghz4") {
            n = fam.back() - '0';
            fam = "gghz";
        }
        const double s2 = 1.0 / std::sqrt(2.0);
        if (fam == "bell") return bell_state();
        if (fam == "ghz") return gghz_state(n, s2, s2);
        if (fam == "gghz") {
            if (alpha.empty() || beta.empty())
                throw UsageError("gghz requires --alpha and --beta");
            return gghz_state(n, parse_complex(alpha), parse_complex(beta));
        }
        if (fam == "acin") {
            const std::vector<double> ls = parse_reals(lambda);
            if (ls.size() != 5) throw UsageError("--lambda needs exactly 5 values");
            AcinParams p;
            std::copy(ls.begin(), ls.end(), p.lambda.begin());
            p.theta = theta;
            acin = p;
            return acin_state(p);
        }
        if (fam == "w") {
            const std::vector<double> as = parse_reals(amps);
            if (as.size() < 3) throw UsageError("--amps needs at least 3 values");
            return w_state(std::vector<cxd>(as.begin(), as.end()));
        }
        if (fam == "generic4") {
            if (z.size() != 4) throw UsageError("generic4 requires --z with 4 coefficients");
            GenericCoeffs c;
            for (int j = 0; j < 4; ++j) c.z[static_cast<std::size_t>(j)] = parse_complex(z[static_cast<std::size_t>(j)]);
            coeffs = c;
            return generic4_state(c);
        }
        if (fam == "special") {
            if (special.empty()) throw UsageError("special requires --name");
            return special_state(parse_special_state(special));
        }
        throw UsageError("unknown state family: " + family);
    }
};

std::vector<int> parse_cut(const std::string& letters, std::size_t num_qubits) {
    std::vector<int> cut;
    for (char ch : letters) {
        const int q = ch - 'A';
        if (q < 0 || static_cast<std::size_t>(q) >= num_qubits)
            throw UsageError(std::string("cut letter '") + ch + "' is out of range");
        cut.push_back(q);
    }
    if (cut.empty()) throw UsageError("--cut needs at least one letter");
    return cut;
}

// Moves qubit q to the front so the 2 x n closed form and the oracle can
// treat it as party A.
PureState move_qubit_front(const PureState& psi, int q) {
    if (q == 0) return psi;
    const std::size_t nq = psi.num_qubits();
    std::vector<cxd> out(psi.dim());
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        const std::size_t qbit = (idx >> qubit_bit(nq, static_cast<std::size_t>(q))) & 1U;
        std::size_t rest = 0;
        std::size_t out_pos = nq - 2;
        for (std::size_t k = nq; k-- > 0;) {
            if (k == qubit_bit(nq, static_cast<std::size_t>(q))) continue;
            rest |= ((idx >> k) & 1U) << out_pos;
            --out_pos;
        }
        out[(qbit << (nq - 1)) | rest] = psi.amplitude(idx);
    }
    return PureState(nq, std::move(out));
}

void print_min_result(const MinResult& r, const char* label = "MIN value") {
    std::cout << label << "     : " << fmt(r.value) << "\n";
    std::cout << "branch        : " << branch_name(r.branch) << "\n";
    if (r.branch == MinBranch::x_nonzero || r.branch == MinBranch::x_zero)
        std::cout << "TT^t spectrum : [" << fmt(r.spectrum[0]) << ", " << fmt(r.spectrum[1])
                  << ", " << fmt(r.spectrum[2]) << "]\n";
    if (r.near_degenerate)
        std::cout << "near-degenerate ||x||: both branches recorded, x_nonzero="
                  << fmt(r.near_degenerate->value_x_nonzero)
                  << " x_zero=" << fmt(r.near_degenerate->value_x_zero) << "\n";
}

int cmd_eval(StateFlags& state, const std::string& cut_letters, const std::string& pair,
             bool oracle, int grid, const std::string& json_out) {
    const PureState psi = state.build();
    MinResult result;
    std::optional<DensityMatrix> oracle_target;

    if (!pair.empty() && !cut_letters.empty())
        throw UsageError("--cut and --pair are mutually exclusive");

    if (!pair.empty()) {
        if (state.acin) {
            result = min3_closed(*state.acin, parse_pair3(pair));
        } else if (state.coeffs) {
            result = min4_closed(*state.coeffs, parse_pair4(pair));
        } else {
            if (pair.size() != 2 || pair[0] != 'A') throw UsageError("--pair must be AB, AC or AD");
            const int partner = pair[1] - 'A';
            if (partner <= 0 || static_cast<std::size_t>(partner) >= psi.num_qubits())
                throw UsageError("pair partner out of range for this state");
            const DensityMatrix red = reduced_density(psi, {0, partner});
            result = min_2xn(red);
            oracle_target = red;
        }
        if (oracle && !oracle_target) {
            const int partner = pair[1] - 'A';
            oracle_target = reduced_density(psi, {0, partner});
        }
    } else {
        const std::vector<int> cut =
            cut_letters.empty() ? std::vector<int>{0} : parse_cut(cut_letters, psi.num_qubits());
        result = min_pure(psi, cut);
        if (oracle) {
            if (cut.size() != 1)
                throw UsageError("--oracle needs a one-qubit cut (2 x n form)");
            oracle_target = DensityMatrix::from_pure(move_qubit_front(psi, cut[0]));
        }
    }

    print_min_result(result);
    double gap = 0.0;
    std::optional<MinResult> oracle_result;
    if (oracle) {
        oracle_result = min_bruteforce(*oracle_target, grid);
        gap = std::abs(oracle_result->value - result.value);
        std::cout << "oracle value  : " << fmt(oracle_result->value) << "\n";
        std::cout << "oracle gap    : " << fmt(gap) << "\n";
    }
    if (!json_out.empty()) {
        nlohmann::ordered_json j;
        j["value"] = result.value;
        j["branch"] = branch_name(result.branch);
        j["spectrum"] = result.spectrum;
        if (oracle_result) {
            j["oracle_value"] = oracle_result->value;
            j["oracle_gap"] = gap;
        }
        std::ofstream out(json_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + json_out);
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_check(StateFlags& state, int pivot) {
    const PureState psi = state.build();
    const MonogamyReport rep = monogamy_report(psi, pivot);
    std::cout << "pivot         : " << static_cast<char>('A' + rep.pivot) << " (qubit "
              << rep.pivot << ")\n";
    std::cout << "global MIN    : " << fmt(rep.global_min) << "\n";
    for (const auto& [partner, value] : rep.pairwise)
        std::cout << "pair " << static_cast<char>('A' + rep.pivot) << "-"
                  << static_cast<char>('A' + partner) << "      : " << fmt(value) << "\n";
    std::cout << "pair sum      : " << fmt(rep.pair_sum) << "\n";
    std::cout << "deficit       : " << fmt(rep.deficit) << "\n";
    std::cout << "verdict       : " << (rep.monogamous ? "MONOGAMOUS" : "POLYGAMOUS") << "\n";
    return kExitOk; // the verdict is data, not an error
}

int cmd_sweep(const std::string& family, int n, std::uint64_t samples, std::uint64_t seed,
              int pivot, int bins, int workers, const std::string& out,
              const std::string& format) {
    CampaignConfig cfg;
    cfg.sampler.family = parse_family(family);
    cfg.sampler.seed = seed;
    cfg.sampler.n = n;
    cfg.samples = samples;
    cfg.pivot = pivot;
    cfg.histogram_bins = bins;
    cfg.workers = workers;
    const CampaignStats stats = run_campaign(cfg);
    export_stats(stats, parse_export_format(format), out);

    const auto monog =
        static_cast<std::uint64_t>(std::llround(stats.fraction_monogamous * double(samples)));
    const WilsonInterval ci = wilson95(monog, samples);
    std::cout << stats.family << ": " << monog << "/" << samples
              << " monogamous = " << fmt(stats.fraction_monogamous) << " (95% CI ["
              << fmt(ci.lo) << ", " << fmt(ci.hi) << "]); mean deficit "
              << fmt(stats.mean_deficit) << "; wrote " << out << "\n";
    return kExitOk;
}

void print_suite(const SuiteResult& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
}

int cmd_verify(const std::string& suite, std::optional<std::uint64_t> samples,
               std::uint64_t seed, int grid) {
    std::vector<SuiteResult> results;
    const auto want = [&](const char* name) { return suite == name || suite == "all"; };
    if (want("thm1_thm2")) results.push_back(suite_thm1_thm2(samples.value_or(300), seed));
    if (want("oracle")) results.push_back(suite_oracle(samples.value_or(100), seed, grid));
    if (want("thm3"))
        results.push_back(suite_bound(BoundFamily::thm3, samples.value_or(10000), seed));
    if (want("thm4"))
        results.push_back(suite_bound(BoundFamily::M_thm4, samples.value_or(10000), seed));
    if (want("thm5"))
        results.push_back(suite_bound(BoundFamily::taumin_thm5, samples.value_or(10000), seed));
    if (want("tangles")) results.push_back(suite_tangles(samples.value_or(100), seed));
    if (want("lu_invariance"))
        results.push_back(suite_lu_invariance(samples.value_or(100), seed));
    if (results.empty()) throw UsageError("unknown suite: " + suite);

    bool all_pass = true;
    for (const SuiteResult& r : results) {
        print_suite(r);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_reproduce(const std::string& claim, std::optional<std::uint64_t> samples,
                  std::uint64_t seed, int n, int workers) {
    const auto campaign = [&](Family fam, std::uint64_t default_samples) {
        CampaignConfig cfg;
        cfg.sampler.family = fam;
        cfg.sampler.seed = seed;
        cfg.sampler.n = n;
        cfg.samples = samples.value_or(default_samples);
        cfg.workers = workers;
        return run_campaign(cfg);
    };
    const auto report = [&](const std::string& what, double computed, const std::string& reference,
                            double lo, double hi, bool measure_dependent,
                            const std::string& measure) {
        const bool within = computed >= lo && computed <= hi;
        std::cout << "claim         : " << what << "\n";
        std::cout << "computed      : " << fmt(computed) << "\n";
        std::cout << "reference     : " << reference << "\n";
        std::cout << "window        : [" << fmt(lo) << ", " << fmt(hi) << "]\n";
        if (measure_dependent)
            std::cout << "note          : measure-dependent; sampling measure: " << measure
                      << "\n";
        std::cout << "status        : " << (within ? "WITHIN" : "OUTSIDE") << "\n";
        return within ? kExitOk : kExitVerifyFail;
    };

    if (claim == "fig1") {
        const CampaignStats s = campaign(Family::generic4, 100000);
        return report("fraction of generic four-qubit states satisfying monogamy",
                      s.fraction_monogamous, "about 66% (34% violation)", 0.56, 0.76, true,
                      s.measure);
    }
    if (claim == "pct3q_generic_x0") {
        const CampaignStats s = campaign(Family::acin_x0, 1000000);
        return report("fraction of ||x||=0 three-qubit generic states satisfying monogamy",
                      s.fraction_monogamous, "around 0.02%", 0.0, 0.005, true, s.measure);
    }
    if (claim == "pct3q_wclass_x0") {
        const CampaignStats s = campaign(Family::wclass3_x0, 100000);
        return report("fraction of ||x||=0 three-qubit W-class states satisfying monogamy",
                      s.fraction_monogamous, "around 20%", 0.05, 0.35, true, s.measure);
    }
    if (claim == "w_equality") {
        SamplerSpec spec{Family::wn, seed};
        spec.n = n;
        const std::uint64_t count = samples.value_or(1000);
        double worst = 0.0;
        for (std::uint64_t i = 0; i < count; ++i)
            worst = std::max(worst, std::abs(monogamy_report(sample(spec, i), 0).deficit));
        return report("max |deficit| over generalized W states (n=" + std::to_string(n) + ")",
                      worst, "monogamy holds with equality (0)", 0.0, 1e-8, false, "");
    }
    if (claim == "ghz4_violation") {
        const double s2 = 1.0 / std::sqrt(2.0);
        const MonogamyReport rep = monogamy_report(gghz_state(4, s2, s2), 0);
        return report("GHZ4 monogamy deficit", rep.deficit,
                      "violation: deficit -0.25 (not monogamous)", -0.25 - 1e-12,
                      -0.25 + 1e-12, false, "");
    }
    throw UsageError("unknown claim: " + claim);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minlab - measurement-induced nonlocality computations and monogamy campaigns"};
    app.require_subcommand(1);

    StateFlags eval_state, check_state;
    std::string eval_cut, eval_pair, eval_json;
    bool eval_oracle = false;
    int eval_grid = 20000;
    CLI::App* eval = app.add_subcommand("eval", "evaluate MIN on a described state");
    eval_state.add_options(eval);
    eval->add_option("--cut", eval_cut, "pivot-side qubits as letters, e.g. A or AB");
    eval->add_option("--pair", eval_pair, "two-qubit reduction: AB, AC or AD");
    eval->add_flag("--oracle", eval_oracle, "compare against the brute-force oracle");
    eval->add_option("--grid", eval_grid, "oracle grid points (default 20000)");
    eval->add_option("--json", eval_json, "also write the result as JSON");

    int check_pivot = 0;
    CLI::App* check = app.add_subcommand("check", "monogamy report for a described state");
    check_state.add_options(check);
    check->add_option("--pivot", check_pivot, "pivot qubit index (default 0)");

    std::string sweep_family, sweep_out, sweep_format = "json";
    int sweep_n = 3, sweep_pivot = 0, sweep_bins = 64, sweep_workers = 1;
    std::uint64_t sweep_samples = 10000;
    std::optional<std::uint64_t> sweep_seed;
    CLI::App* sweep = app.add_subcommand("sweep", "run a seeded sampling campaign");
    sweep->add_option("--family", sweep_family,
                      "sampler family: acin_full | acin_x0 | wclass3 | wclass3_x0 | generic4 "
                      "| class_M | class_taumin | wn")
        ->required();
    sweep->add_option("--n", sweep_n, "register size for wn (default 3)");
    sweep->add_option("--samples", sweep_samples, "number of samples (default 10000)");
    sweep->add_option("--seed", sweep_seed, "campaign seed (default MINLAB_SEED or 1)");
    sweep->add_option("--pivot", sweep_pivot, "pivot qubit (default 0)");
    sweep->add_option("--bins", sweep_bins, "histogram bins (default 64)");
    sweep->add_option("--workers", sweep_workers, "worker threads (default 1)");
    sweep->add_option("--out", sweep_out, "output file")->required();
    sweep->add_option("--format", sweep_format, "json | csv (default json)");

    std::string verify_suite;
    std::optional<std::uint64_t> verify_samples, verify_seed;
    int verify_grid = 20000;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", verify_suite,
                       "thm1_thm2 | oracle | thm3 | thm4 | thm5 | tangles | lu_invariance | all")
        ->required();
    verify->add_option("--samples", verify_samples, "override sample count");
    verify->add_option("--seed", verify_seed, "seed (default MINLAB_SEED or 1)");
    verify->add_option("--grid", verify_grid, "oracle grid points (default 20000)");

    std::string reproduce_claim;
    std::optional<std::uint64_t> reproduce_samples, reproduce_seed;
    int reproduce_n = 3, reproduce_workers = 1;
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "recompute one of the published reference figures");
    reproduce->add_option("--claim", reproduce_claim,
                          "fig1 | pct3q_generic_x0 | pct3q_wclass_x0 | w_equality | "
                          "ghz4_violation")
        ->required();
    reproduce->add_option("--samples", reproduce_samples, "override sample count");
    reproduce->add_option("--seed", reproduce_seed, "seed (default MINLAB_SEED or 1)");
    reproduce->add_option("--n", reproduce_n, "W register size for w_equality (default 3)");
    reproduce->add_option("--workers", reproduce_workers, "worker threads (default 1)");

    try {
        app.parse(argc, argv);
        if (eval->parsed())
            return cmd_eval(eval_state, eval_cut, eval_pair, eval_oracle, eval_grid, eval_json);
        if (check->parsed()) return cmd_check(check_state, check_pivot);
        if (sweep->parsed())
            return cmd_sweep(sweep_family, sweep_n, sweep_samples,
                             sweep_seed ? *sweep_seed : default_seed(), sweep_pivot, sweep_bins,
                             sweep_workers, sweep_out, sweep_format);
        if (verify->parsed())
            return cmd_verify(verify_suite, verify_samples,
                              verify_seed ? *verify_seed : default_seed(), verify_grid);
        if (reproduce->parsed())
            return cmd_reproduce(reproduce_claim, reproduce_samples,
                                 reproduce_seed ? *reproduce_seed : default_seed(), reproduce_n,
                                 reproduce_workers);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
