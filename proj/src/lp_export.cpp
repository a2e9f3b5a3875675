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

#include "fermisched/lp_export.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace fermisched {

namespace {

// Writes "name: t1 + t2 + ... <rhs>" with at most eight terms per line.
void write_row(std::ostream &out, const std::string &name, const std::vector<std::string> &terms,
               const std::string &rhs) {
    out << ' ' << name << ':';
    for (std::size_t k = 0; k < terms.size(); k++) {
        if (k > 0 && k % 8 == 0) {
            out << "\n   ";
        }
        out << (k == 0 ? " " : " + ") << terms[k];
    }
    out << rhs << '\n';
}

void write_binaries(std::ostream &out, const std::vector<std::string> &names) {
    out << "Binary\n";
    for (const auto &n : names) {
        out << ' ' << n << '\n';
    }
}

std::string edge_name(const MeasurementGraph &gm, const Edge &e) {
    return lp_name(gm.observable_at(e.u)) + "__" + lp_name(gm.observable_at(e.v));
}

}  // namespace

IlpModel parse_ilp_model(std::string_view name) {
    if (name == "given-cliques" || name == "given_cliques") {
        return IlpModel::GivenCliques;
    }
    if (name == "clique-search" || name == "clique_search") {
        return IlpModel::CliqueSearch;
    }
    throw std::invalid_argument("unknown ILP model '" + std::string(name) + "'");
}

std::string lp_name(const Observable &o) {
    switch (o.kind) {
        case ObsKind::N:
            return "N" + std::to_string(o.i + 1);
        case ObsKind::X:
            return "X" + std::to_string(o.i + 1) + "_" + std::to_string(o.j + 1);
        case ObsKind::Y:
            return "Y" + std::to_string(o.i + 1) + "_" + std::to_string(o.j + 1);
    }
    return "?";
}

std::string export_ilp(const MeasurementGraph &gm, const TargetGraph &gt, IlpModel model, std::optional<int> n_c,
                       IlpStats *stats) {
    std::ostringstream out;
    IlpStats st;
    auto targets = gt.graph.edges();

    if (model == IlpModel::GivenCliques) {
        auto cliques = enumerate_settings(gm);
        std::vector<std::string> z;
        out << "\\ edge clique cover over given maximal cliques: " << gm.n_modes() << " modes, " << cliques.size()
            << " cliques, " << targets.size() << " target edges\n";
        for (const auto &c : cliques) {
            z.push_back("z_" + std::to_string(c.id));
            out << "\\ " << z.back() << " = {" << describe(c) << "}\n";
        }
        out << "Minimize\n";
        write_row(out, "obj", z, "");
        if (!targets.empty()) {
            out << "Subject To\n";
        }
        std::vector<Bits> sets;
        for (const auto &c : cliques) {
            sets.push_back(gm.vertex_set(c));
        }
        for (const Edge &e : targets) {
            std::vector<std::string> terms;
            for (std::size_t k = 0; k < cliques.size(); k++) {
                if (sets[k].test(e.u) && sets[k].test(e.v)) {
                    terms.push_back(z[k]);
                }
            }
            if (terms.empty()) {
                throw std::invalid_argument("target edge " + edge_name(gm, e) + " lies in no clique");
            }
            write_row(out, "cover_" + edge_name(gm, e), terms, " >= 1");
            st.constraints++;
        }
        write_binaries(out, z);
        st.variables = z.size();
    } else {
        if (!n_c) {
            throw std::invalid_argument("the clique-search model needs a slot count n_c");
        }
        const int bound = lower_bound(gm, gt);
        if (*n_c < bound) {
            throw std::invalid_argument("n_c = " + std::to_string(*n_c) + " is below the lower bound " +
                                        std::to_string(bound) + "; the model would be infeasible");
        }
        const int slots = *n_c;
        const int size = gm.vertex_count();
        std::vector<Edge> gm_edges;
        std::vector<Edge> non_edges;
        for (int u = 0; u < size; u++) {
            for (int v = u + 1; v < size; v++) {
                (gm.adjacent(u, v) ? gm_edges : non_edges).push_back({u, v});
            }
        }
        auto slot = [](int c) {
            return "_c" + std::to_string(c);
        };
        auto x = [&](int v, int c) {
            return "x_" + lp_name(gm.observable_at(v)) + slot(c);
        };
        auto y = [&](const Edge &e, int c) {
            return "y_" + edge_name(gm, e) + slot(c);
        };
        auto z = [&](int c) {
            return "z" + slot(c);
        };

        out << "\\ edge clique cover with clique search: " << gm.n_modes() << " modes, " << slots << " slots, "
            << targets.size() << " target edges\n";
        std::vector<std::string> objective;
        for (int c = 1; c <= slots; c++) {
            objective.push_back(z(c));
        }
        out << "Minimize\n";
        write_row(out, "obj", objective, "");
        out << "Subject To\n";
        for (int c = 1; c <= slots; c++) {
            for (int v = 0; v < size; v++) {
                out << " slot_" << x(v, c) << ": " << x(v, c) << " - " << z(c) << " <= 0\n";
                st.constraints++;
            }
            for (const Edge &e : gm_edges) {
                out << " in_u_" << y(e, c) << ": " << y(e, c) << " - " << x(e.u, c) << " <= 0\n";
                out << " in_v_" << y(e, c) << ": " << y(e, c) << " - " << x(e.v, c) << " <= 0\n";
                out << " both_" << y(e, c) << ": " << x(e.u, c) << " + " << x(e.v, c) << " - " << y(e, c)
                    << " <= 1\n";
                st.constraints += 3;
            }
            for (const Edge &e : non_edges) {
                out << " apart_" << edge_name(gm, e) << slot(c) << ": " << x(e.u, c) << " + " << x(e.v, c)
                    << " <= 1\n";
                st.constraints++;
            }
        }
        for (const Edge &e : targets) {
            std::vector<std::string> terms;
            for (int c = 1; c <= slots; c++) {
                terms.push_back(y(e, c));
            }
            write_row(out, "cover_" + edge_name(gm, e), terms, " >= 1");
            st.constraints++;
        }
        std::vector<std::string> binaries;
        for (int c = 1; c <= slots; c++) {
            binaries.push_back(z(c));
            for (int v = 0; v < size; v++) {
                binaries.push_back(x(v, c));
            }
            for (const Edge &e : gm_edges) {
                binaries.push_back(y(e, c));
            }
        }
        write_binaries(out, binaries);
        st.variables = binaries.size();
    }
    out << "End\n";
    if (stats != nullptr) {
        *stats = st;
    }
    return out.str();
}

}  // namespace fermisched
