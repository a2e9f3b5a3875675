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

#include "fermisched/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace fermisched {

// ---------------------------------------------------------------------------
// Measurement graph

MeasurementGraph::MeasurementGraph(int n_modes) : n_(n_modes) {
    if (n_modes < 2) {
        throw std::invalid_argument("the measurement graph needs at least 2 modes");
    }
    const int size = vertex_count();
    adj_.assign(size, Bits(size));
    std::vector<Observable> labels(size);
    for (int v = 0; v < size; v++) {
        labels[v] = observable_at(v);
    }
    for (int u = 0; u < size; u++) {
        for (int v = u + 1; v < size; v++) {
            if (compatible(labels[u], labels[v])) {
                adj_[u].set(v);
                adj_[v].set(u);
            }
        }
    }
}

int MeasurementGraph::index_of(const Observable &o) const {
    if (o.i < 0 || o.i >= n_ || (o.is_pair() && (o.j <= o.i || o.j >= n_))) {
        throw std::out_of_range("label " + to_label(o) + " is outside the measurement graph");
    }
    if (!o.is_pair()) {
        return o.i;
    }
    int rank = o.i * (2 * n_ - o.i - 1) / 2 + (o.j - o.i - 1);
    return n_ + 2 * rank + (o.kind == ObsKind::Y ? 1 : 0);
}

Observable MeasurementGraph::observable_at(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::out_of_range("vertex outside the measurement graph");
    }
    if (v < n_) {
        return Observable::number(v);
    }
    int rank = (v - n_) / 2;
    ObsKind kind = (v - n_) % 2 == 0 ? ObsKind::X : ObsKind::Y;
    int i = 0;
    while (rank >= n_ - i - 1) {
        rank -= n_ - i - 1;
        i++;
    }
    return Observable::pair(kind, i, i + 1 + rank);
}

std::size_t MeasurementGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto &row : adj_) {
        total += row.count();
    }
    return total / 2;
}

Graph MeasurementGraph::as_graph() const {
    Graph g(vertex_count());
    for (int u = 0; u < vertex_count(); u++) {
        for (auto v = adj_[u].find_next(u); v != Bits::npos; v = adj_[u].find_next(v)) {
            g.add_edge(u, static_cast<int>(v));
        }
    }
    return g;
}

bool MeasurementGraph::is_clique(std::span<const int> vertices) const {
    for (std::size_t a = 0; a < vertices.size(); a++) {
        for (std::size_t b = a + 1; b < vertices.size(); b++) {
            if (!adjacent(vertices[a], vertices[b])) {
                return false;
            }
        }
    }
    return true;
}

Bits MeasurementGraph::vertex_set(const Setting &setting) const {
    Bits out(vertex_count());
    for (const auto &o : setting_observables(setting, n_)) {
        out.set(index_of(o));
    }
    return out;
}

MeasurementGraph build_measurement_graph(int n) {
    return MeasurementGraph(n);
}

// ---------------------------------------------------------------------------
// Target graph

TargetGraph build_target_graph(int n, std::span<const CorrelatorSpec> specs) {
    MeasurementGraph gm(n);
    TargetGraph gt{n, Graph(gm.vertex_count()), {specs.begin(), specs.end()}};
    for (const auto &spec : specs) {
        if (!is_canonical(spec)) {
            throw std::invalid_argument("correlator " + std::string(correlator_kind_name(spec.kind)) +
                                        " is not in canonical form");
        }
        if (spec.max_mode() >= n) {
            throw std::invalid_argument("correlator references mode " + std::to_string(spec.max_mode() + 1) +
                                        " but only " + std::to_string(n) + " modes exist");
        }
        for (const auto &[a, b] : required_edges(spec)) {
            int u = gm.index_of(a);
            int v = gm.index_of(b);
            if (!gm.adjacent(u, v)) {
                throw std::invalid_argument("infeasible target: " + to_label(a) + " and " + to_label(b) +
                                            " cannot be measured together");
            }
            gt.graph.add_edge(u, v);
        }
    }
    return gt;
}

TargetGraph target_from_pairs(int n, std::span<const ObservablePair> pairs) {
    MeasurementGraph gm(n);
    TargetGraph gt{n, Graph(gm.vertex_count()), {}};
    for (const auto &[a, b] : pairs) {
        int u = gm.index_of(a);
        int v = gm.index_of(b);
        if (!gm.adjacent(u, v)) {
            throw std::invalid_argument("infeasible target: " + to_label(a) + " and " + to_label(b) +
                                        " cannot be measured together");
        }
        gt.graph.add_edge(u, v);
    }
    return gt;
}

// ---------------------------------------------------------------------------
// Clique enumeration

namespace {

void extend_matchings(int n, int mode, std::vector<char> &used, std::vector<Rotation> &current,
                      std::vector<std::vector<Rotation>> &out) {
    while (mode < n && used[mode]) {
        mode++;
    }
    if (mode >= n) {
        out.push_back(current);
        return;
    }
    used[mode] = 1;
    extend_matchings(n, mode + 1, used, current, out);
    for (int partner = mode + 1; partner < n; partner++) {
        if (used[partner]) {
            continue;
        }
        used[partner] = 1;
        for (Basis b : {Basis::X, Basis::Y}) {
            current.push_back({mode, partner, b});
            extend_matchings(n, mode + 1, used, current, out);
            current.pop_back();
        }
        used[partner] = 0;
    }
    used[mode] = 0;
}

void bron_kerbosch_step(std::span<const Bits> adj, Bits &r, Bits p, Bits x, std::vector<Bits> &out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    Bits px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = (p & adj[pivot]).count();
    for (auto u = px.find_next(pivot); u != Bits::npos; u = px.find_next(u)) {
        std::size_t c = (p & adj[u]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    Bits candidates = p - adj[pivot];
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
        r.set(v);
        bron_kerbosch_step(adj, r, p & adj[v], x & adj[v], out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

Setting setting_from_clique(const MeasurementGraph &gm, const Bits &clique) {
    Setting s;
    for (auto v = clique.find_next(gm.n_modes() - 1); v != Bits::npos; v = clique.find_next(v)) {
        Observable o = gm.observable_at(static_cast<int>(v));
        s.rotations.push_back({o.i, o.j, o.kind == ObsKind::X ? Basis::X : Basis::Y});
    }
    std::sort(s.rotations.begin(), s.rotations.end());
    return s;
}

void number_settings(std::vector<Setting> &settings) {
    for (std::size_t k = 0; k < settings.size(); k++) {
        settings[k].id = static_cast<int>(k) + 1;
    }
}

std::vector<int> assign_edges(const MeasurementGraph &gm, const TargetGraph &gt, std::span<const Setting> settings) {
    std::vector<Bits> sets;
    for (const auto &s : settings) {
        sets.push_back(gm.vertex_set(s));
    }
    std::vector<int> out;
    for (const Edge &e : gt.graph.edges()) {
        int found = -1;
        for (std::size_t k = 0; k < sets.size() && found < 0; k++) {
            if (sets[k].test(e.u) && sets[k].test(e.v)) {
                found = static_cast<int>(k);
            }
        }
        if (found < 0) {
            throw std::logic_error("cover leaves a target edge uncovered");
        }
        out.push_back(found);
    }
    return out;
}

}  // namespace

std::vector<Setting> enumerate_settings(const MeasurementGraph &gm) {
    const int n = gm.n_modes();
    std::vector<std::vector<Rotation>> matchings;
    std::vector<char> used(n, 0);
    std::vector<Rotation> current;
    extend_matchings(n, 0, used, current, matchings);
    std::sort(matchings.begin(), matchings.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Setting> out;
    out.reserve(matchings.size());
    for (auto &m : matchings) {
        out.push_back({0, std::move(m)});
    }
    number_settings(out);
    return out;
}

std::vector<Bits> bron_kerbosch(std::span<const Bits> adjacency) {
    const std::size_t size = adjacency.size();
    std::vector<Bits> out;
    Bits r(size);
    Bits p(size);
    p.set();
    bron_kerbosch_step(adjacency, r, p, Bits(size), out);
    return out;
}

std::string_view cover_status_name(CoverStatus status) {
    switch (status) {
        case CoverStatus::Optimal:
            return "optimal";
        case CoverStatus::FeasibleWithGap:
            return "feasible_with_gap";
        case CoverStatus::Heuristic:
            return "heuristic";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Lower bound

int lower_bound(const MeasurementGraph &gm, const TargetGraph &gt) {
    auto edges = gt.graph.edges();
    const std::size_t count = edges.size();
    if (count == 0) {
        return 0;
    }
    // co[a] holds the target edges that fit in one clique together with a.
    std::vector<Bits> co(count, Bits(count));
    for (std::size_t a = 0; a < count; a++) {
        const Bits together = gm.neighbours(edges[a].u) & gm.neighbours(edges[a].v);
        co[a].set(a);
        for (std::size_t b = a + 1; b < count; b++) {
            auto fits = [&](int w) {
                return w == edges[a].u || w == edges[a].v || together.test(w);
            };
            if (fits(edges[b].u) && fits(edges[b].v)) {
                co[a].set(b);
                co[b].set(a);
            }
        }
    }

    auto greedy = [&](const std::vector<int> &order) {
        Bits open(count);
        open.set();
        int picked = 0;
        for (int e : order) {
            if (open.test(e)) {
                picked++;
                open -= co[e];
            }
        }
        return picked;
    };

    std::vector<int> natural(count);
    std::iota(natural.begin(), natural.end(), 0);
    std::vector<std::size_t> weight(count);
    for (std::size_t e = 0; e < count; e++) {
        weight[e] = co[e].count();
    }
    std::vector<int> sparse_first = natural;
    std::stable_sort(sparse_first.begin(), sparse_first.end(), [&](int a, int b) {
        return weight[a] < weight[b];
    });
    const int n = gm.n_modes();
    auto pair_pair = [&](int e) {
        return edges[e].u >= n && edges[e].v >= n;
    };
    std::vector<int> pairs_first = sparse_first;
    std::stable_partition(pairs_first.begin(), pairs_first.end(), pair_pair);

    return std::max({greedy(natural), greedy(sparse_first), greedy(pairs_first)});
}

// ---------------------------------------------------------------------------
// Exact cover

CoverSolution exact_cover(const MeasurementGraph &gm, const TargetGraph &gt, const ExactOptions &options) {
    CoverSolution solution;
    solution.status = CoverStatus::Optimal;
    auto edges = gt.graph.edges();
    if (edges.empty()) {
        return solution;
    }
    std::vector<Setting> candidates = options.candidates ? *options.candidates : enumerate_settings(gm);

    SetCoverInstance instance{edges.size(), {}};
    std::vector<int> origin;
    for (std::size_t k = 0; k < candidates.size(); k++) {
        Bits vs = gm.vertex_set(candidates[k]);
        Bits covers(edges.size());
        for (std::size_t e = 0; e < edges.size(); e++) {
            if (vs.test(edges[e].u) && vs.test(edges[e].v)) {
                covers.set(e);
            }
        }
        if (covers.any()) {
            instance.sets.push_back(std::move(covers));
            origin.push_back(static_cast<int>(k));
        }
    }
    Bits reachable(edges.size());
    for (const auto &s : instance.sets) {
        reachable |= s;
    }
    if (reachable.count() != edges.size()) {
        const Edge &e = edges[(~reachable).find_first()];
        throw std::invalid_argument("no candidate clique covers " + to_label(gm.observable_at(e.u)) + " -- " +
                                    to_label(gm.observable_at(e.v)));
    }

    SetCoverResult result = solve_set_cover(instance, options.time_budget_seconds);
    for (int k : result.chosen) {
        solution.settings.push_back(candidates[origin[k]]);
    }
    number_settings(solution.settings);
    solution.edge_assignment = assign_edges(gm, gt, solution.settings);
    solution.nodes = result.nodes;
    if (result.optimal) {
        solution.lower_bound = static_cast<int>(solution.settings.size());
    } else {
        solution.status = CoverStatus::FeasibleWithGap;
        solution.lower_bound = std::max(result.lower_bound, lower_bound(gm, gt));
    }
    return solution;
}

// ---------------------------------------------------------------------------
// Heuristic cover

namespace {

struct HeuristicRun {
    std::vector<Bits> cliques;
};

HeuristicRun heuristic_restart(const MeasurementGraph &gm, const TargetGraph &gt, std::uint64_t seed, int restart) {
    const int size = gm.vertex_count();
    auto edges = gt.graph.edges();

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);

    // Uncovered target edges: adjacency bitsets plus a swap-remove list for uniform picks.
    std::vector<Bits> open(size, Bits(size));
    std::vector<int> open_list(edges.size());
    std::vector<int> position(edges.size());
    std::map<std::pair<int, int>, int> edge_id;
    for (std::size_t e = 0; e < edges.size(); e++) {
        open[edges[e].u].set(edges[e].v);
        open[edges[e].v].set(edges[e].u);
        open_list[e] = static_cast<int>(e);
        position[e] = static_cast<int>(e);
        edge_id[{edges[e].u, edges[e].v}] = static_cast<int>(e);
    }
    auto close = [&](int u, int v) {
        open[u].reset(v);
        open[v].reset(u);
        int e = edge_id.at({std::min(u, v), std::max(u, v)});
        int last = open_list.back();
        open_list[position[e]] = last;
        position[last] = position[e];
        open_list.pop_back();
    };

    HeuristicRun run;
    while (!open_list.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, open_list.size() - 1);
        const Edge &seed_edge = edges[open_list[pick(rng)]];
        Bits clique(size);
        clique.set(seed_edge.u);
        clique.set(seed_edge.v);
        Bits candidates = gm.neighbours(seed_edge.u) & gm.neighbours(seed_edge.v);
        while (candidates.any()) {
            std::size_t best = Bits::npos;
            std::size_t best_gain = 0;
            std::size_t best_reach = 0;
            for (auto w = candidates.find_first(); w != Bits::npos; w = candidates.find_next(w)) {
                std::size_t gain = (open[w] & clique).count();
                std::size_t reach = (open[w] & candidates).count();
                if (best == Bits::npos || gain > best_gain || (gain == best_gain && reach > best_reach)) {
                    best = w;
                    best_gain = gain;
                    best_reach = reach;
                }
            }
            clique.set(best);
            candidates &= gm.neighbours(static_cast<int>(best));
        }
        for (auto u = clique.find_first(); u != Bits::npos; u = clique.find_next(u)) {
            Bits inside = open[u] & clique;
            for (auto v = inside.find_next(u); v != Bits::npos; v = inside.find_next(v)) {
                close(static_cast<int>(u), static_cast<int>(v));
            }
        }
        run.cliques.push_back(std::move(clique));
    }

    // Drop cliques whose target edges are all covered elsewhere, latest first.
    std::vector<int> multiplicity(edges.size(), 0);
    auto covered_by = [&](const Bits &clique) {
        std::vector<int> ids;
        for (std::size_t e = 0; e < edges.size(); e++) {
            if (clique.test(edges[e].u) && clique.test(edges[e].v)) {
                ids.push_back(static_cast<int>(e));
            }
        }
        return ids;
    };
    std::vector<std::vector<int>> covers;
    for (const auto &c : run.cliques) {
        covers.push_back(covered_by(c));
        for (int e : covers.back()) {
            multiplicity[e]++;
        }
    }
    std::vector<char> keep(run.cliques.size(), 1);
    for (std::size_t k = run.cliques.size(); k-- > 0;) {
        bool redundant = std::all_of(covers[k].begin(), covers[k].end(), [&](int e) {
            return multiplicity[e] >= 2;
        });
        if (redundant) {
            keep[k] = 0;
            for (int e : covers[k]) {
                multiplicity[e]--;
            }
        }
    }
    std::vector<Bits> kept;
    for (std::size_t k = 0; k < run.cliques.size(); k++) {
        if (keep[k]) {
            kept.push_back(std::move(run.cliques[k]));
        }
    }
    run.cliques = std::move(kept);
    return run;
}

}  // namespace

CoverSolution heuristic_cover(const MeasurementGraph &gm, const TargetGraph &gt, const HeuristicOptions &options) {
    if (options.restarts < 1) {
        throw std::invalid_argument("the heuristic needs at least one restart");
    }
    for (const Edge &e : gt.graph.edges()) {
        if (e.v >= gm.vertex_count() || !gm.adjacent(e.u, e.v)) {
            throw std::invalid_argument("infeasible target edge");
        }
    }
    std::vector<HeuristicRun> runs(options.restarts);
    const int threads = std::clamp(options.threads, 1, options.restarts);
    if (threads == 1) {
        for (int r = 0; r < options.restarts; r++) {
            runs[r] = heuristic_restart(gm, gt, options.seed, r);
        }
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; t++) {
            pool.emplace_back([&, t] {
                for (int r = t; r < options.restarts; r += threads) {
                    runs[r] = heuristic_restart(gm, gt, options.seed, r);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); r++) {
        if (runs[r].cliques.size() < runs[best].cliques.size()) {
            best = r;
        }
    }

    CoverSolution solution;
    solution.status = CoverStatus::Heuristic;
    for (const auto &c : runs[best].cliques) {
        solution.settings.push_back(setting_from_clique(gm, c));
    }
    number_settings(solution.settings);
    solution.edge_assignment = assign_edges(gm, gt, solution.settings);
    solution.lower_bound = lower_bound(gm, gt);
    return solution;
}

// ---------------------------------------------------------------------------
// Validation

std::string CoverReport::summary() const {
    if (valid()) {
        return "valid";
    }
    std::string out;
    for (const auto &s : non_cliques) {
        out += "not a clique: " + s + "\n";
    }
    for (const auto &[a, b] : uncovered) {
        out += "uncovered: " + to_label(a) + " -- " + to_label(b) + "\n";
    }
    return out;
}

namespace {

CoverReport check_coverage(const MeasurementGraph &gm, const TargetGraph &gt, const std::vector<Bits> &sets,
                           std::vector<std::string> problems) {
    CoverReport report;
    report.non_cliques = std::move(problems);
    for (const Edge &e : gt.graph.edges()) {
        bool hit = std::any_of(sets.begin(), sets.end(), [&](const Bits &s) {
            return s.test(e.u) && s.test(e.v);
        });
        if (!hit) {
            report.uncovered.emplace_back(gm.observable_at(e.u), gm.observable_at(e.v));
        }
    }
    return report;
}

}  // namespace

CoverReport validate_cover(const MeasurementGraph &gm, const TargetGraph &gt, std::span<const Setting> settings) {
    if (gt.n_modes != gm.n_modes()) {
        throw std::invalid_argument("target and measurement graphs differ in mode count");
    }
    std::vector<Bits> sets;
    std::vector<std::string> problems;
    for (const auto &s : settings) {
        std::set<int> used;
        bool ok = true;
        for (const auto &r : s.rotations) {
            if (r.i < 0 || r.i >= r.j || r.j >= gm.n_modes() || !used.insert(r.i).second ||
                !used.insert(r.j).second) {
                ok = false;
            }
        }
        if (ok) {
            sets.push_back(gm.vertex_set(s));
        } else {
            problems.push_back("setting " + std::to_string(s.id) + " {" + describe(s) + "}");
        }
    }
    return check_coverage(gm, gt, sets, std::move(problems));
}

CoverReport validate_cover(const MeasurementGraph &gm, const TargetGraph &gt,
                           std::span<const std::vector<Observable>> cliques) {
    if (gt.n_modes != gm.n_modes()) {
        throw std::invalid_argument("target and measurement graphs differ in mode count");
    }
    std::vector<Bits> sets;
    std::vector<std::string> problems;
    for (std::size_t k = 0; k < cliques.size(); k++) {
        std::vector<int> ids;
        for (const auto &o : cliques[k]) {
            ids.push_back(gm.index_of(o));
        }
        if (gm.is_clique(ids)) {
            Bits s(gm.vertex_count());
            for (int v : ids) {
                s.set(v);
            }
            sets.push_back(std::move(s));
        } else {
            std::string text;
            for (const auto &o : cliques[k]) {
                text += (text.empty() ? "" : " ") + to_label(o);
            }
            problems.push_back("set " + std::to_string(k + 1) + " {" + text + "}");
        }
    }
    return check_coverage(gm, gt, sets, std::move(problems));
}

// ---------------------------------------------------------------------------
// Schedules

std::vector<ReconstructionEntry> build_reconstruction(std::span<const Setting> settings,
                                                      std::span<const CorrelatorSpec> specs) {
    FactorAssignment assignment;
    std::vector<ReconstructionEntry> out;
    for (const auto &spec : specs) {
        for (const auto &factors : requirements(spec.canonical())) {
            if (assignment.count(factors)) {
                continue;
            }
            auto it = std::find_if(settings.begin(), settings.end(), [&](const Setting &s) {
                return std::all_of(factors.begin(), factors.end(), [&](const Observable &o) {
                    return s.realises(o);
                });
            });
            if (it != settings.end()) {
                assignment[factors] = it->id;
            }
        }
        out.push_back({spec, reconstruction_terms(spec, assignment)});
    }
    return out;
}

Schedule schedule_from_settings(int n, std::vector<Setting> settings, std::span<const CorrelatorSpec> specs) {
    Schedule s;
    s.n_modes = n;
    number_settings(settings);
    s.settings = std::move(settings);
    s.reconstruction = build_reconstruction(s.settings, specs);
    s.metadata.set_count("settings", static_cast<long long>(s.settings.size()));
    s.metadata.set_count("correlators", static_cast<long long>(s.reconstruction.size()));
    return s;
}

Schedule four_point_schedule(int n, const FourPointOptions &options) {
    MeasurementGraph gm(n);
    auto specs = enumerate_canonical_fourpoint(n);
    TargetGraph gt = build_target_graph(n, specs);
    CoverSolution solution;
    const bool exact = options.method == FourPointOptions::Method::Exact;
    if (exact) {
        solution = exact_cover(gm, gt, {options.time_budget_seconds, std::nullopt});
    } else {
        solution = heuristic_cover(gm, gt, options.heuristic);
    }
    Schedule s = schedule_from_settings(n, std::move(solution.settings), specs);
    s.metadata.method = exact ? "exact" : "heuristic";
    s.metadata.status = std::string(cover_status_name(solution.status));
    if (!exact) {
        s.metadata.seed = options.heuristic.seed;
        s.metadata.set_count("restarts", options.heuristic.restarts);
    } else {
        s.metadata.set_count("nodes", static_cast<long long>(solution.nodes));
    }
    s.metadata.set_count("target_edges", static_cast<long long>(gt.graph.edge_count()));
    s.metadata.set_count("lower_bound", solution.lower_bound);
    return s;
}

}  // namespace fermisched
