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

#include "fermisched/two_point.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fermisched {

int EdgeColouring::colour_of(int u, int v) const {
    if (u > v) {
        std::swap(u, v);
    }
    auto edges = graph.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
    if (it == edges.end() || *it != Edge{u, v}) {
        throw std::out_of_range("edge is not in the coloured graph");
    }
    return colour[it - edges.begin()];
}

std::vector<std::vector<Edge>> EdgeColouring::classes() const {
    std::vector<std::vector<Edge>> out(colour_count);
    auto edges = graph.edges();
    for (std::size_t e = 0; e < edges.size(); e++) {
        out.at(colour[e]).push_back(edges[e]);
    }
    return out;
}

bool is_proper(const EdgeColouring &c) {
    auto edges = c.graph.edges();
    if (c.colour.size() != edges.size()) {
        return false;
    }
    std::vector<std::vector<char>> seen(c.graph.vertex_count(), std::vector<char>(c.colour_count, 0));
    for (std::size_t e = 0; e < edges.size(); e++) {
        int col = c.colour[e];
        if (col < 0 || col >= c.colour_count) {
            return false;
        }
        for (int x : {edges[e].u, edges[e].v}) {
            if (seen[x][col]) {
                return false;
            }
            seen[x][col] = 1;
        }
    }
    return true;
}

namespace {

// at[v][c] is the neighbour joined to v by an edge of colour c, or -1.
class ColourTable {
   public:
    ColourTable(int vertices, int colours) : at_(vertices, std::vector<int>(colours, -1)) {
    }

    int colours() const {
        return at_.empty() ? 0 : static_cast<int>(at_[0].size());
    }
    int via(int v, int c) const {
        return at_[v][c];
    }
    bool is_free(int v, int c) const {
        return at_[v][c] < 0;
    }
    int first_free(int v) const {
        for (int c = 0; c < colours(); c++) {
            if (at_[v][c] < 0) {
                return c;
            }
        }
        throw std::logic_error("no free colour at vertex");
    }
    int colour_of(int u, int v) const {
        for (int c = 0; c < colours(); c++) {
            if (at_[u][c] == v) {
                return c;
            }
        }
        return -1;
    }
    void set(int u, int v, int c) {
        at_[u][c] = v;
        at_[v][c] = u;
    }
    void clear(int u, int v, int c) {
        at_[u][c] = -1;
        at_[v][c] = -1;
    }

    // Swaps colours a and b along the maximal path leaving `start` on colour a.
    void invert_path(int start, int a, int b) {
        std::vector<std::tuple<int, int, int>> path;
        int x = start;
        int col = a;
        while (true) {
            int y = via(x, col);
            if (y < 0) {
                break;
            }
            path.emplace_back(x, y, col);
            x = y;
            col = col == a ? b : a;
        }
        for (auto [p, q, c] : path) {
            clear(p, q, c);
        }
        for (auto [p, q, c] : path) {
            set(p, q, c == a ? b : a);
        }
    }

    EdgeColouring finish(const Graph &g) const {
        EdgeColouring out{g, {}, colours()};
        for (const Edge &e : g.edges()) {
            out.colour.push_back(colour_of(e.u, e.v));
        }
        return out;
    }

   private:
    std::vector<std::vector<int>> at_;
};

// Drops unused colours and renumbers the rest in order of first use.
EdgeColouring compact(EdgeColouring c) {
    std::vector<int> remap(c.colour_count, -1);
    int next = 0;
    for (int &col : c.colour) {
        if (remap[col] < 0) {
            remap[col] = next++;
        }
        col = remap[col];
    }
    c.colour_count = next;
    return c;
}

}  // namespace

EdgeColouring colour_complete(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("round-robin colouring needs an even number of vertices >= 2");
    }
    const int m = n - 1;
    auto wrap = [m](int x) {
        int r = ((x % m) + m) % m;
        return r == 0 ? m : r;
    };
    Graph g = complete_graph(n);
    EdgeColouring out{g, std::vector<int>(g.edge_count(), -1), m};
    auto assign = [&](int a, int b, int colour) {
        // 1-based labels from the construction.
        int u = std::min(a, b) - 1;
        int v = std::max(a, b) - 1;
        auto edges = out.graph.edges();
        auto idx = std::lower_bound(edges.begin(), edges.end(), Edge{u, v}) - edges.begin();
        if (out.colour[idx] != -1) {
            throw std::logic_error("round-robin construction coloured an edge twice");
        }
        out.colour[idx] = colour;
    };
    for (int v = 1; v <= m; v++) {
        assign(v, n, v - 1);
        for (int l = 1; l <= n / 2 - 1; l++) {
            assign(wrap(v + l), wrap(v - l), v - 1);
        }
    }
    return out;
}

EdgeColouring colour_general(const Graph &g) {
    const int n = g.vertex_count();
    ColourTable table(n, max_degree(g) + 1);
    std::vector<char> in_fan(n, 0);
    for (const Edge &edge : g.edges()) {
        const int u = edge.u;
        std::vector<int> fan{edge.v};
        in_fan[edge.v] = 1;
        bool extended = true;
        while (extended) {
            extended = false;
            int last = fan.back();
            for (int c = 0; c < table.colours(); c++) {
                if (!table.is_free(last, c)) {
                    continue;
                }
                int w = table.via(u, c);
                if (w >= 0 && !in_fan[w]) {
                    fan.push_back(w);
                    in_fan[w] = 1;
                    extended = true;
                    break;
                }
            }
        }
        for (int f : fan) {
            in_fan[f] = 0;
        }

        int c = table.first_free(u);
        int d = table.first_free(fan.back());
        if (c != d) {
            table.invert_path(u, d, c);
        }

        // First fan vertex on which d is free; the prefix up to it is still a fan.
        std::size_t w = 0;
        while (w < fan.size() && !table.is_free(fan[w], d)) {
            w++;
        }
        if (w == fan.size()) {
            throw std::logic_error("Misra-Gries: no fan vertex with the free colour");
        }
        for (std::size_t i = 0; i < w; i++) {
            int col = table.colour_of(u, fan[i + 1]);
            table.clear(u, fan[i + 1], col);
            table.set(u, fan[i], col);
        }
        table.set(u, fan[w], d);
    }
    EdgeColouring out = table.finish(g);
    if (!is_proper(out)) {
        throw std::logic_error("Misra-Gries produced an improper colouring");
    }
    return out;
}

EdgeColouring colour_bipartite(const Graph &g) {
    if (!is_bipartite(g)) {
        throw std::invalid_argument("graph is not bipartite");
    }
    ColourTable table(g.vertex_count(), max_degree(g));
    for (const Edge &e : g.edges()) {
        int a = table.first_free(e.u);
        int b = table.first_free(e.v);
        if (!table.is_free(e.v, a)) {
            // The a/b path from v cannot reach u in a bipartite graph.
            table.invert_path(e.v, a, b);
        }
        table.set(e.u, e.v, a);
    }
    return table.finish(g);
}

EdgeColouring colour_for_schedule(const Graph &g, std::string *method) {
    auto report = [&](const char *name) {
        if (method != nullptr) {
            *method = name;
        }
    };
    const int n = g.vertex_count();
    if (n >= 1 && is_complete(g)) {
        report("round-robin");
        if (n % 2 == 0) {
            return colour_complete(n);
        }
        // Colour K_{n+1} and delete the extra vertex with its edges.
        EdgeColouring big = colour_complete(n + 1);
        EdgeColouring out{g, {}, big.colour_count};
        for (const Edge &e : g.edges()) {
            out.colour.push_back(big.colour_of(e.u, e.v));
        }
        return compact(std::move(out));
    }
    if (is_bipartite(g)) {
        report("bipartite");
        return compact(colour_bipartite(g));
    }
    report("misra-gries");
    return compact(colour_general(g));
}

Schedule two_point_schedule(const Graph &g) {
    std::string method;
    EdgeColouring colouring = colour_for_schedule(g, &method);
    auto classes = colouring.classes();

    Schedule s;
    s.n_modes = g.vertex_count();
    s.settings.push_back({1, {}});
    FactorAssignment assignment;
    for (int m = 0; m < s.n_modes; m++) {
        assignment[{Observable::number(m)}] = 1;
    }
    int next_id = 2;
    for (const auto &cls : classes) {
        Setting sx{next_id++, {}};
        Setting sy{next_id++, {}};
        for (const Edge &e : cls) {
            sx.rotations.push_back({e.u, e.v, Basis::X});
            sy.rotations.push_back({e.u, e.v, Basis::Y});
            assignment[{Observable::pair(ObsKind::X, e.u, e.v)}] = sx.id;
            assignment[{Observable::pair(ObsKind::Y, e.u, e.v)}] = sy.id;
        }
        std::sort(sx.rotations.begin(), sx.rotations.end());
        std::sort(sy.rotations.begin(), sy.rotations.end());
        s.settings.push_back(std::move(sx));
        s.settings.push_back(std::move(sy));
    }

    for (int m = 0; m < s.n_modes; m++) {
        auto spec = number_correlator(m);
        s.reconstruction.push_back({spec, reconstruction_terms(spec, assignment)});
    }
    for (const Edge &e : g.edges()) {
        auto spec = two_point(e.u, e.v);
        s.reconstruction.push_back({spec, reconstruction_terms(spec, assignment)});
    }

    s.metadata.method = method;
    s.metadata.set_count("settings", static_cast<long long>(s.settings.size()));
    s.metadata.set_count("colours", colouring.colour_count);
    s.metadata.set_count("max_degree", max_degree(g));
    s.metadata.set_count("correlators", static_cast<long long>(s.reconstruction.size()));
    return s;
}

}  // namespace fermisched
