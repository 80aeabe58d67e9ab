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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>
#include <sstream>

#include "minlab/min.hpp"
#include "minlab/monogamy.hpp"
#include "minlab/montecarlo.hpp"
#include "minlab/qmat.hpp"
#include "minlab/states.hpp"
#include "minlab/verify.hpp"

namespace py = pybind11;
using namespace minlab;

namespace {

py::array_t<cxd> amplitudes_array(const PureState& psi) {
    py::array_t<cxd> out(static_cast<py::ssize_t>(psi.dim()));
    std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), out.mutable_data());
    return out;
}

py::array_t<cxd> matrix_array(const ComplexMatrix& m) {
    py::array_t<cxd> out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

DensityMatrix density_from_array(const py::array_t<cxd, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw py::value_error("density matrix must be a square 2-D array");
    const auto d = static_cast<std::size_t>(arr.shape(0));
    std::size_t nq = 0;
    while ((std::size_t{1} << nq) < d) ++nq;
    if ((std::size_t{1} << nq) != d)
        throw py::value_error("density matrix side must be a power of two");
    ComplexMatrix m(d, d, std::vector<cxd>(arr.data(), arr.data() + d * d));
    return DensityMatrix(nq, std::move(m));
}

AcinParams acin_params(const std::vector<double>& lambdas, double theta) {
    if (lambdas.size() != 5) throw py::value_error("lambda must have 5 entries");
    AcinParams p;
    std::copy(lambdas.begin(), lambdas.end(), p.lambda.begin());
    p.theta = theta;
    return p;
}

GenericCoeffs generic_coeffs(const std::vector<cxd>& z) {
    if (z.size() != 4) throw py::value_error("z must have 4 entries");
    GenericCoeffs c;
    std::copy(z.begin(), z.end(), c.z.begin());
    return c;
}

SamplerSpec sampler_spec(const std::string& family, std::uint64_t seed, int n) {
    SamplerSpec spec;
    spec.family = parse_family(family);
    spec.seed = seed;
    spec.n = n;
    spec.validate();
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Measurement-induced nonlocality: closed forms, brute-force oracle, monogamy "
              "reports and seeded sampling campaigns for qubit registers";

    py::class_<PureState>(m, "PureState")
        .def(py::init<std::size_t, std::vector<cxd>>(), py::arg("num_qubits"),
             py::arg("amplitudes"))
        .def_property_readonly("num_qubits", &PureState::num_qubits)
        .def_property_readonly("amplitudes", &amplitudes_array)
        .def("__repr__", [](const PureState& s) {
            std::ostringstream os;
            os << "PureState(num_qubits=" << s.num_qubits() << ")";
            return os.str();
        });

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init(&density_from_array), py::arg("matrix"))
        .def_static("from_pure", &DensityMatrix::from_pure, py::arg("psi"))
        .def_property_readonly("num_qubits", &DensityMatrix::num_qubits)
        .def_property_readonly("matrix",
                               [](const DensityMatrix& d) { return matrix_array(d.matrix()); })
        .def("__repr__", [](const DensityMatrix& d) {
            std::ostringstream os;
            os << "DensityMatrix(num_qubits=" << d.num_qubits() << ")";
            return os.str();
        });

    py::class_<MinResult>(m, "MinResult")
        .def_readonly("value", &MinResult::value)
        .def_property_readonly("branch",
                               [](const MinResult& r) { return std::string(branch_name(r.branch)); })
        .def_readonly("spectrum", &MinResult::spectrum)
        .def_property_readonly("near_degenerate",
                               [](const MinResult& r) -> py::object {
                                   if (!r.near_degenerate) return py::none();
                                   return py::make_tuple(r.near_degenerate->value_x_nonzero,
                                                         r.near_degenerate->value_x_zero);
                               })
        .def("__repr__", [](const MinResult& r) {
            std::ostringstream os;
            os << "MinResult(value=" << r.value << ", branch=" << branch_name(r.branch) << ")";
            return os.str();
        });

    py::class_<MonogamyReport>(m, "MonogamyReport")
        .def_readonly("pivot", &MonogamyReport::pivot)
        .def_readonly("global_min", &MonogamyReport::global_min)
        .def_readonly("pairwise", &MonogamyReport::pairwise)
        .def_readonly("pair_sum", &MonogamyReport::pair_sum)
        .def_readonly("deficit", &MonogamyReport::deficit)
        .def_readonly("monogamous", &MonogamyReport::monogamous)
        .def("__repr__", [](const MonogamyReport& r) {
            std::ostringstream os;
            os << "MonogamyReport(global=" << r.global_min << ", pair_sum=" << r.pair_sum
               << ", monogamous=" << (r.monogamous ? "True" : "False") << ")";
            return os.str();
        });

    py::class_<TangleSummary>(m, "TangleSummary")
        .def_readonly("tau1", &TangleSummary::tau1)
        .def_readonly("tau2", &TangleSummary::tau2)
        .def_readonly("tau_abcd", &TangleSummary::tau_abcd);

    py::class_<Histogram>(m, "Histogram")
        .def_readonly("edges", &Histogram::edges)
        .def_readonly("counts", &Histogram::counts);

    py::class_<CampaignStats>(m, "CampaignStats")
        .def_readonly("family", &CampaignStats::family)
        .def_readonly("measure_name", &CampaignStats::measure)
        .def_readonly("seed", &CampaignStats::seed)
        .def_readonly("samples", &CampaignStats::samples)
        .def_readonly("fraction_monogamous", &CampaignStats::fraction_monogamous)
        .def_readonly("mean_deficit", &CampaignStats::mean_deficit)
        .def_readonly("min_deficit", &CampaignStats::min_deficit)
        .def_readonly("max_deficit", &CampaignStats::max_deficit)
        .def_readonly("min_pair_sum", &CampaignStats::min_pair_sum)
        .def_readonly("max_pair_sum", &CampaignStats::max_pair_sum)
        .def_readonly("histogram", &CampaignStats::histogram)
        .def_readonly("numerical_flags", &CampaignStats::numerical_flags)
        .def("__eq__", [](const CampaignStats& a, const CampaignStats& b) { return a == b; });

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("family", &BoundReport::family)
        .def_readonly("samples", &BoundReport::samples)
        .def_readonly("violations", &BoundReport::violations)
        .def_readonly("min_observed", &BoundReport::min_observed)
        .def_readonly("max_observed", &BoundReport::max_observed)
        .def_readonly("bound_lo", &BoundReport::bound_lo)
        .def_readonly("bound_hi", &BoundReport::bound_hi)
        .def_readonly("worst_witness", &BoundReport::worst_witness)
        .def_readonly("pass_", &BoundReport::pass);

    // State constructors and samplers.
    m.def("bell_state", &bell_state);
    m.def("gghz_state", &gghz_state, py::arg("n"), py::arg("alpha"), py::arg("beta"));
    m.def("w_state", &w_state, py::arg("amps"));
    m.def(
        "acin_state",
        [](const std::vector<double>& lambdas, double theta) {
            return acin_state(acin_params(lambdas, theta));
        },
        py::arg("lambdas"), py::arg("theta") = 0.0);
    m.def(
        "generic4_state", [](const std::vector<cxd>& z) { return generic4_state(generic_coeffs(z)); },
        py::arg("z"));
    m.def("generic_basis_vector", &generic_basis_vector, py::arg("j"));
    m.def(
        "special_state",
        [](const std::string& name) { return special_state(parse_special_state(name)); },
        py::arg("name"));
    m.def(
        "sample",
        [](const std::string& family, std::uint64_t seed, std::uint64_t index, int n) {
            return sample(sampler_spec(family, seed, n), index);
        },
        py::arg("family"), py::arg("seed"), py::arg("index"), py::arg("n") = 0);

    // Reductions.
    m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("keep"));
    m.def("reduced_density", &reduced_density, py::arg("psi"), py::arg("keep"));
    m.def(
        "schmidt_spectrum",
        [](const PureState& psi, const std::vector<int>& cut) {
            return schmidt_spectrum(psi, cut).values;
        },
        py::arg("psi"), py::arg("cut"));

    // MIN computations.
    m.def("min_pure", &min_pure, py::arg("psi"), py::arg("cut"));
    m.def("min_2xn", &min_2xn, py::arg("rho"), py::arg("epsilon_x") = 1e-10);
    m.def("min_bruteforce", &min_bruteforce, py::arg("rho"), py::arg("grid_points") = 20000,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "min3_closed",
        [](const std::vector<double>& lambdas, double theta, const std::string& pair) {
            return min3_closed(acin_params(lambdas, theta), parse_pair3(pair));
        },
        py::arg("lambdas"), py::arg("theta"), py::arg("pair"));
    m.def(
        "min4_closed",
        [](const std::vector<cxd>& z, const std::string& pair) {
            return min4_closed(generic_coeffs(z), parse_pair4(pair));
        },
        py::arg("z"), py::arg("pair"));

    // Monogamy and tangles.
    m.def("monogamy_report", &monogamy_report, py::arg("psi"), py::arg("pivot") = 0);
    m.def("tangle", &tangle, py::arg("psi"), py::arg("cut"));
    m.def("tangle_summary", &tangle_summary, py::arg("psi"));

    // Campaigns.
    m.def(
        "run_campaign",
        [](const std::string& family, std::uint64_t seed, std::uint64_t samples, int pivot,
           int bins, int workers, int n) {
            CampaignConfig cfg;
            cfg.sampler = sampler_spec(family, seed, n);
            cfg.samples = samples;
            cfg.pivot = pivot;
            cfg.histogram_bins = bins;
            cfg.workers = workers;
            return run_campaign(cfg);
        },
        py::arg("family"), py::arg("seed"), py::arg("samples"), py::arg("pivot") = 0,
        py::arg("bins") = 64, py::arg("workers") = 1, py::arg("n") = 0,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "export_stats",
        [](const CampaignStats& stats, const std::string& format,
           const std::filesystem::path& path) {
            export_stats(stats, parse_export_format(format), path);
        },
        py::arg("stats"), py::arg("format"), py::arg("path"));
    m.def("import_stats_json", &import_stats_json, py::arg("path"));
    m.def(
        "verify_bounds",
        [](const std::string& family, std::uint64_t samples, std::uint64_t seed) {
            BoundFamily f;
            if (family == "M_thm4") f = BoundFamily::M_thm4;
            else if (family == "taumin_thm5") f = BoundFamily::taumin_thm5;
            else if (family == "thm3") f = BoundFamily::thm3;
            else if (family == "x_nonzero_sum3") f = BoundFamily::x_nonzero_sum3;
            else throw py::value_error("unknown bound family: " + family);
            return verify_bounds(f, samples, seed);
        },
        py::arg("family"), py::arg("samples"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "wilson95",
        [](std::uint64_t successes, std::uint64_t total) {
            const WilsonInterval ci = wilson95(successes, total);
            return py::make_tuple(ci.lo, ci.hi);
        },
        py::arg("successes"), py::arg("total"));

#ifdef MINLAB_VERSION
    m.attr("__version__") = MINLAB_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
