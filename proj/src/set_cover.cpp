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

#include "fermisched/set_cover.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fermisched {

namespace {

using Clock = std::chrono::steady_clock;

void check_instance(const SetCoverInstance &instance) {
    Bits all(instance.universe);
    for (const auto &s : instance.sets) {
        if (s.size() != instance.universe) {
            throw std::invalid_argument("set size does not match the universe");
        }
        all |= s;
    }
    if (all.count() != instance.universe) {
        throw std::invalid_argument("infeasible cover: element " + std::to_string((~all).find_first()) +
                                    " lies in no set");
    }
}

// Per-element data shared by the bound and the search.
struct ElementIndex {
    std::vector<std::vector<int>> sets_of;
    std::vector<Bits> co_cover;  // elements sharing at least one set with e (e included)
    std::vector<int> order;      // elements by ascending number of containing sets

    ElementIndex(std::size_t universe, const std::vector<Bits> &sets) : sets_of(universe), co_cover(universe) {
        for (std::size_t e = 0; e < universe; e++) {
            co_cover[e].resize(universe);
        }
        for (std::size_t s = 0; s < sets.size(); s++) {
            for (auto e = sets[s].find_first(); e != Bits::npos; e = sets[s].find_next(e)) {
                sets_of[e].push_back(static_cast<int>(s));
                co_cover[e] |= sets[s];
            }
        }
        order.resize(universe);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return sets_of[a].size() < sets_of[b].size();
        });
    }

    int bound(const Bits &uncovered) const {
        Bits allowed = uncovered;
        int k = 0;
        for (int e : order) {
            if (allowed.test(e)) {
                k++;
                allowed -= co_cover[e];
            }
        }
        return k;
    }
};

class BranchAndBound {
   public:
    BranchAndBound(std::size_t universe, std::vector<Bits> sets, std::optional<double> budget)
        : universe_(universe), sets_(std::move(sets)), index_(universe, sets_) {
        if (budget) {
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*budget));
        }
    }

    void seed_incumbent(std::vector<int> cover) {
        best_ = std::move(cover);
    }
    int root_bound() const {
        Bits all(universe_);
        all.set();
        return index_.bound(all);
    }

    void run() {
        Bits covered(universe_);
        Bits excluded(sets_.size());
        std::vector<int> chosen;
        dfs(covered, chosen, excluded);
    }

    const std::vector<int> &best() const {
        return best_;
    }
    bool timed_out() const {
        return timed_out_;
    }
    std::uint64_t nodes() const {
        return nodes_;
    }

   private:
    bool out_of_time() {
        if (timed_out_) {
            return true;
        }
        if (deadline_ && (nodes_ & 255) == 0 && Clock::now() > *deadline_) {
            timed_out_ = true;
        }
        return timed_out_;
    }

    void dfs(const Bits &covered, std::vector<int> &chosen, const Bits &excluded) {
        if (out_of_time()) {
            return;
        }
        nodes_++;
        Bits uncovered = ~covered;
        if (uncovered.none()) {
            if (chosen.size() < best_.size()) {
                best_ = chosen;
            }
            return;
        }
        const std::size_t depth = chosen.size();
        if (depth + 1 >= best_.size()) {
            return;
        }
        if (depth + static_cast<std::size_t>(index_.bound(uncovered)) >= best_.size()) {
            return;
        }

        int pick = -1;
        std::size_t pick_count = std::numeric_limits<std::size_t>::max();
        for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
            std::size_t count = 0;
            for (int s : index_.sets_of[e]) {
                count += excluded.test(s) ? 0 : 1;
            }
            if (count == 0) {
                return;
            }
            if (count < pick_count) {
                pick_count = count;
                pick = static_cast<int>(e);
                if (count == 1) {
                    break;
                }
            }
        }

        std::vector<std::pair<std::size_t, int>> candidates;
        for (int s : index_.sets_of[pick]) {
            if (!excluded.test(s)) {
                candidates.emplace_back((sets_[s] & uncovered).count(), s);
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const auto &a, const auto &b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });

        Bits local_excluded = excluded;
        for (auto [gain, s] : candidates) {
            chosen.push_back(s);
            dfs(covered | sets_[s], chosen, local_excluded);
            chosen.pop_back();
            if (timed_out_) {
                return;
            }
            local_excluded.set(s);
        }
    }

    std::size_t universe_;
    std::vector<Bits> sets_;
    ElementIndex index_;
    std::vector<int> best_;
    std::optional<Clock::time_point> deadline_;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<int> greedy_set_cover(const SetCoverInstance &instance) {
    check_instance(instance);
    Bits covered(instance.universe);
    std::vector<int> chosen;
    while (covered.count() < instance.universe) {
        int best = -1;
        std::size_t best_gain = 0;
        for (std::size_t s = 0; s < instance.sets.size(); s++) {
            std::size_t gain = (instance.sets[s] - covered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(s);
            }
        }
        chosen.push_back(best);
        covered |= instance.sets[best];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

int conflict_lower_bound(const SetCoverInstance &instance) {
    check_instance(instance);
    ElementIndex index(instance.universe, instance.sets);
    Bits all(instance.universe);
    all.set();
    return index.bound(all);
}

SetCoverResult solve_set_cover(const SetCoverInstance &instance, std::optional<double> time_budget_seconds) {
    check_instance(instance);
    SetCoverResult result;
    if (instance.universe == 0) {
        result.optimal = true;
        return result;
    }

    // Drop empty and dominated sets; equal sets keep the lowest index.
    std::vector<int> by_size(instance.sets.size());
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
        return instance.sets[a].count() > instance.sets[b].count();
    });
    std::vector<int> kept;
    for (int s : by_size) {
        const Bits &cand = instance.sets[s];
        if (cand.none()) {
            continue;
        }
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](int k) {
            return cand.is_subset_of(instance.sets[k]);
        });
        if (!dominated) {
            kept.push_back(s);
        }
    }
    std::sort(kept.begin(), kept.end());
    std::vector<Bits> reduced;
    for (int s : kept) {
        reduced.push_back(instance.sets[s]);
    }

    SetCoverInstance reduced_instance{instance.universe, reduced};
    BranchAndBound bb(instance.universe, reduced, time_budget_seconds);
    bb.seed_incumbent(greedy_set_cover(reduced_instance));
    int root = bb.root_bound();
    if (static_cast<int>(bb.best().size()) > root) {
        bb.run();
    }

    for (int s : bb.best()) {
        result.chosen.push_back(kept[s]);
    }
    std::sort(result.chosen.begin(), result.chosen.end());
    result.optimal = !bb.timed_out();
    result.lower_bound = result.optimal ? static_cast<int>(result.chosen.size()) : root;
    result.nodes = bb.nodes();
    return result;
}

}  // namespace fermisched
