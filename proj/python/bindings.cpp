// Copyright 2026 The fermisched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "fermisched/cover.hpp"
#include "fermisched/fock.hpp"
#include "fermisched/lp_export.hpp"
#include "fermisched/reference_settings.hpp"
#include "fermisched/schedule_io.hpp"
#include "fermisched/tiling.hpp"
#include "fermisched/two_point.hpp"

namespace py = pybind11;
using namespace fermisched;

namespace {

std::string two_point_json(std::optional<int> modes, std::optional<std::vector<std::pair<int, int>>> edges,
                           std::optional<int> vertices) {
    Graph g;
    if (modes && !edges) {
        g = complete_graph(*modes);
    } else if (edges && !modes) {
        int n = vertices.value_or(0);
        for (auto [u, v] : *edges) {
            n = std::max({n, u, v});
        }
        g = Graph(n);
        for (auto [u, v] : *edges) {
            g.add_edge(u - 1, v - 1);
        }
    } else {
        throw std::invalid_argument("give exactly one of modes or edges");
    }
    return schedule_to_json(two_point_schedule(g));
}

std::string four_point_json(int modes, const std::string &method, int restarts, std::uint64_t seed,
                            std::optional<double> budget) {
    FourPointOptions o;
    if (method == "exact") {
        o.method = FourPointOptions::Method::Exact;
    } else if (method == "heuristic") {
        o.method = FourPointOptions::Method::Heuristic;
    } else {
        throw std::invalid_argument("method must be 'exact' or 'heuristic'");
    }
    o.time_budget_seconds = budget;
    o.heuristic = {restarts, seed, 1};
    py::gil_scoped_release release;
    return schedule_to_json(four_point_schedule(modes, o));
}

std::string lattice_json(const std::string &kind, int rows, int cols, const std::string &method, int restarts,
                         std::uint64_t seed) {
    TileCover cover = tile_lattice({parse_lattice_kind(kind), rows, cols});
    if (method == "tiling") {
        return schedule_to_json(compose_tiled_schedule(cover, default_tile_settings()));
    }
    if (method == "heuristic") {
        return schedule_to_json(heuristic_lattice_schedule(cover, {restarts, seed, 1}));
    }
    throw std::invalid_argument("method must be 'tiling' or 'heuristic'");
}

py::dict verify_json(const std::string &text, int trials, std::uint64_t seed, std::optional<long long> shots,
                     double tol) {
    Schedule s = schedule_from_json(text);
    std::mt19937_64 rng(seed);
    std::vector<FockState> states;
    for (int t = 0; t < trials; t++) {
        states.push_back(random_state(s.n_modes, std::nullopt, rng()));
    }
    VerifyReport r = shots ? verify_schedule_sampled(s, states, *shots, seed) : verify_schedule(s, states, tol);
    py::dict out;
    out["passed"] = r.passed();
    out["max_error"] = r.max_error;
    out["states"] = r.states;
    out["correlators"] = r.correlators;
    out["failures"] = r.failures;
    return out;
}

py::dict cover_stats(int n) {
    MeasurementGraph gm(n);
    auto specs = enumerate_canonical_fourpoint(n);
    TargetGraph gt = build_target_graph(n, specs);
    py::dict out;
    out["vertices"] = gm.vertex_count();
    out["measurement_edges"] = gm.edge_count();
    out["target_edges"] = gt.graph.edge_count();
    out["maximal_cliques"] = enumerate_settings(gm).size();
    out["lower_bound"] = lower_bound(gm, gt);
    out["correlators"] = specs.size();
    return out;
}

std::string ilp_text(int modes, const std::string &model, std::optional<int> n_c) {
    MeasurementGraph gm(modes);
    auto specs = enumerate_canonical_fourpoint(modes);
    return export_ilp(gm, build_target_graph(modes, specs), parse_ilp_model(model), n_c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Measurement schedules for fermionic correlators";
    m.def("schedule_two_point", &two_point_json, py::arg("modes") = py::none(), py::arg("edges") = py::none(),
          py::arg("vertices") = py::none(), "Two-point schedule as JSON; edges are 1-based pairs");
    m.def("schedule_four_point", &four_point_json, py::arg("modes"), py::arg("method") = "exact",
          py::arg("restarts") = 20, py::arg("seed") = 0, py::arg("budget") = py::none(),
          "Four-point schedule as JSON");
    m.def("schedule_lattice", &lattice_json, py::arg("kind"), py::arg("rows"), py::arg("cols"),
          py::arg("method") = "tiling", py::arg("restarts") = 20, py::arg("seed") = 0, "Lattice schedule as JSON");
    m.def("reference_schedule", [](int n) { return schedule_to_json(reference_schedule(n)); }, py::arg("modes"),
          "Published 3/4/6-mode setting list with its reconstruction map, as JSON");
    m.def("verify", &verify_json, py::arg("schedule"), py::arg("trials") = 20, py::arg("seed") = 0,
          py::arg("shots") = py::none(), py::arg("tol") = 1e-9, "Check a JSON schedule against the simulator");
    m.def("cover_stats", &cover_stats, py::arg("modes"), "Sizes of the four-point covering problem");
    m.def("export_ilp", &ilp_text, py::arg("modes"), py::arg("model") = "given-cliques", py::arg("nc") = py::none(),
          "Four-point covering problem in LP format");
    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
}
