/*
   Copyright 2026 The d2dsel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "d2dsel/analytic.hpp"
#include "d2dsel/bessel.hpp"
#include "d2dsel/channel.hpp"
#include "d2dsel/cli.hpp"
#include "d2dsel/config.hpp"
#include "d2dsel/montecarlo.hpp"
#include "d2dsel/protocol.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(d2dsel, m) {
    m.doc() = "D2D relay selection with energy harvesting: Monte Carlo engine and closed forms";

    py::register_exception<d2dsel::ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<d2dsel::SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_static("reference", &d2dsel::SystemConfig::reference)
        .def_static("from_json",
                    [](const std::string& text) {
                        return d2dsel::config_from_json(nlohmann::json::parse(text));
                    })
        .def_static("load", &d2dsel::load_config, "path"_a)
        .def("to_json", [](const d2dsel::SystemConfig& c) { return d2dsel::config_to_json(c).dump(); })
        .def("validate", [](const d2dsel::SystemConfig& c) { d2dsel::validate(c); })
        .def("mean_gain", &d2dsel::SystemConfig::mean_gain, "link"_a)
        .def_readwrite("p_c", &d2dsel::SystemConfig::p_c)
        .def_readwrite("sigma2", &d2dsel::SystemConfig::sigma2)
        .def_readwrite("eta", &d2dsel::SystemConfig::eta)
        .def_readwrite("gamma", &d2dsel::SystemConfig::gamma)
        .def_readwrite("alpha", &d2dsel::SystemConfig::alpha)
        .def_readwrite("rho", &d2dsel::SystemConfig::rho)
        .def_readwrite("n_pairs", &d2dsel::SystemConfig::n_pairs)
        .def_readwrite("d1", &d2dsel::SystemConfig::d1)
        .def_readwrite("d2", &d2dsel::SystemConfig::d2)
        .def_readwrite("d3", &d2dsel::SystemConfig::d3)
        .def_readwrite("d4", &d2dsel::SystemConfig::d4)
        .def_readwrite("v", &d2dsel::SystemConfig::v)
        .def_readwrite("r_ct", &d2dsel::SystemConfig::r_ct)
        .def_readwrite("r_dt", &d2dsel::SystemConfig::r_dt)
        .def_readwrite("t_slot", &d2dsel::SystemConfig::t_slot);

    m.def("dbm_to_watts", &d2dsel::dbm_to_watts);

    // Channels are exchanged as lists of [beta1, beta2, beta3, beta4] rows.
    m.def(
        "draw_channels",
        [](const d2dsel::SystemConfig& cfg, std::uint64_t seed, std::uint64_t stream) {
            d2dsel::CounterRng rng(seed, stream);
            const auto ch = d2dsel::draw_channels(cfg, rng);
            std::vector<std::array<double, 4>> rows(ch.n_pairs());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    rows[i][j] = ch.gain(i, static_cast<d2dsel::Link>(j));
                }
            }
            return rows;
        },
        "cfg"_a, "seed"_a, "stream"_a = 0);
    m.def("harvested_power", &d2dsel::harvested_power, "beta_bs_tx"_a, "cfg"_a);

    py::enum_<d2dsel::OperatingCase>(m, "OperatingCase")
        .value("Case1", d2dsel::OperatingCase::Case1)
        .value("Case2", d2dsel::OperatingCase::Case2)
        .value("Case3", d2dsel::OperatingCase::Case3)
        .value("Case4", d2dsel::OperatingCase::Case4);

    py::class_<d2dsel::SelectionOutcome>(m, "SelectionOutcome")
        .def_readonly("decoding_set", &d2dsel::SelectionOutcome::decoding_set)
        .def_readonly("selected", &d2dsel::SelectionOutcome::selected)
        .def_readonly("operating_case", &d2dsel::SelectionOutcome::operating_case)
        .def_readonly("rate_cu", &d2dsel::SelectionOutcome::rate_cu)
        .def_readonly("rate_d2d", &d2dsel::SelectionOutcome::rate_d2d);

    py::class_<d2dsel::TrialResult>(m, "TrialResult")
        .def_readonly("cellular_outage", &d2dsel::TrialResult::cellular_outage)
        .def_readonly("d2d_outage", &d2dsel::TrialResult::d2d_outage)
        .def_readonly("outcome", &d2dsel::TrialResult::outcome);

    m.def("phase1_rate_du1", &d2dsel::phase1_rate_du1, "beta_bs_tx"_a, "cfg"_a);
    m.def("phase1_rate_du2", &d2dsel::phase1_rate_du2, "beta_bs_rx"_a, "cfg"_a);
    m.def("phase2_rate_cu", &d2dsel::phase2_rate_cu, "beta_bs_tx"_a, "beta_tx_cu"_a, "cfg"_a);
    m.def("phase2_rate_d2d", &d2dsel::phase2_rate_d2d, "case"_a, "beta_bs_tx"_a, "beta_tx_rx"_a,
          "cfg"_a);

    const auto to_channel = [](const std::vector<std::array<double, 4>>& rows) {
        d2dsel::ChannelRealization ch(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                ch.gain(i, static_cast<d2dsel::Link>(j)) = rows[i][j];
            }
        }
        return ch;
    };
    m.def(
        "select_and_classify",
        [to_channel](const std::vector<std::array<double, 4>>& rows, const d2dsel::SystemConfig& cfg) {
            if (rows.empty()) {
                throw py::value_error("channel must have at least one pair");
            }
            return d2dsel::select_and_classify(to_channel(rows), cfg);
        },
        "channels"_a, "cfg"_a);
    m.def(
        "run_trial",
        [to_channel](const std::vector<std::array<double, 4>>& rows, const d2dsel::SystemConfig& cfg) {
            if (rows.empty()) {
                throw py::value_error("channel must have at least one pair");
            }
            return d2dsel::run_trial(to_channel(rows), cfg);
        },
        "channels"_a, "cfg"_a);

    m.def("bessel_k1", &d2dsel::bessel_k1, "x"_a);

    py::enum_<d2dsel::CellularVariant>(m, "CellularVariant")
        .value("Literal", d2dsel::CellularVariant::Literal)
        .value("Corrected", d2dsel::CellularVariant::Corrected);

    m.def("cellular_outage", &d2dsel::cellular_outage, "cfg"_a,
          "variant"_a = d2dsel::CellularVariant::Corrected);
    m.def("d2d_outage", &d2dsel::d2d_outage, "cfg"_a);
    m.def(
        "alpha_bounds",
        [](const d2dsel::SystemConfig& cfg) {
            const auto b = d2dsel::alpha_bounds(cfg);
            return py::make_tuple(b.cellular, b.d2d);
        },
        "cfg"_a);
    m.def(
        "cellular_outage_terms",
        [](const d2dsel::SystemConfig& cfg) {
            const auto t = d2dsel::cellular_outage_terms(cfg);
            return py::dict("p"_a = t.p, "p1"_a = t.p1, "t"_a = t.t, "m"_a = t.m,
                            "a_coef"_a = t.a_coef, "b_coef"_a = t.b_coef, "u"_a = t.u,
                            "w"_a = t.w, "delta"_a = t.delta, "t_term"_a = t.t_term);
        },
        "cfg"_a);
    m.def(
        "d2d_outage_terms",
        [](const d2dsel::SystemConfig& cfg) {
            const auto t = d2dsel::d2d_outage_terms(cfg);
            return py::dict("v_arg"_a = t.v_arg, "c_coef"_a = t.c_coef, "y_arg"_a = t.y_arg,
                            "d_coef"_a = t.d_coef, "z_arg"_a = t.z_arg, "e_coef"_a = t.e_coef,
                            "mu"_a = t.mu, "phi"_a = t.phi, "q_term"_a = t.q_term,
                            "r_term"_a = t.r_term, "z_term"_a = t.z_term, "p21"_a = t.p21,
                            "p22"_a = t.p22);
        },
        "cfg"_a);

    py::class_<d2dsel::EstimateResult>(m, "EstimateResult")
        .def_readonly("trials", &d2dsel::EstimateResult::trials)
        .def_readonly("p_oc_hat", &d2dsel::EstimateResult::p_oc_hat)
        .def_readonly("p_od_hat", &d2dsel::EstimateResult::p_od_hat)
        .def_readonly("ci_halfwidth_oc", &d2dsel::EstimateResult::ci_halfwidth_oc)
        .def_readonly("ci_halfwidth_od", &d2dsel::EstimateResult::ci_halfwidth_od)
        .def_readonly("case_histogram", &d2dsel::EstimateResult::case_histogram)
        .def("__eq__", [](const d2dsel::EstimateResult& a, const d2dsel::EstimateResult& b) {
            return a == b;
        });

    m.def("estimate_outage", &d2dsel::estimate_outage, "cfg"_a, "trials"_a, "master_seed"_a,
          "workers"_a = 0, py::call_guard<py::gil_scoped_release>());

    py::class_<d2dsel::CurvePoint>(m, "CurvePoint")
        .def_readonly("value", &d2dsel::CurvePoint::value)
        .def_readonly("seed", &d2dsel::CurvePoint::seed)
        .def_readonly("ok", &d2dsel::CurvePoint::ok)
        .def_readonly("error", &d2dsel::CurvePoint::error)
        .def_readonly("estimate", &d2dsel::CurvePoint::estimate)
        .def_readonly("p_oc_literal", &d2dsel::CurvePoint::p_oc_literal)
        .def_readonly("p_oc_corrected", &d2dsel::CurvePoint::p_oc_corrected)
        .def_readonly("p_od_analytic", &d2dsel::CurvePoint::p_od_analytic);

    m.def(
        "sweep",
        [](const d2dsel::SystemConfig& base, const std::string& axis,
           const std::vector<double>& values, std::uint64_t trials, std::uint64_t seed,
           unsigned workers) {
            const auto parsed = d2dsel::parse_axis(axis);
            if (!parsed) {
                throw py::value_error("axis must be alpha, rho or n_pairs");
            }
            py::gil_scoped_release release;
            return d2dsel::sweep(base, *parsed, values, trials, seed, workers).points;
        },
        "base"_a, "axis"_a, "values"_a, "trials"_a, "seed"_a, "workers"_a = 0);
    m.def("point_seed", &d2dsel::point_seed, "seed"_a, "index"_a);
}
