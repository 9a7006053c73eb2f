/* Copyright 2026 gss authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#include "schedule.hpp"

#include <algorithm>

namespace gss {

void Schedule::validate() const {
    if (ops.empty()) throw std::invalid_argument("Schedule: empty");
    if (ops.front().kind != StreamOpKind::Load)
        throw std::invalid_argument("Schedule: first op must be Load");
    for (std::size_t i = 1; i < ops.size(); ++i) {
        if (ops[i].kind == StreamOpKind::Load)
            throw std::invalid_argument("Schedule: duplicate Load");
        if (ops[i].kind == StreamOpKind::MeasureParent && i + 1 != ops.size())
            throw std::invalid_argument("Schedule: MeasureParent must be last");
    }
}

bool Schedule::has_measure_parent() const {
    return !ops.empty() && ops.back().kind == StreamOpKind::MeasureParent;
}

int Schedule::emitted_qubit_count() const {
    int n = 0;
    for (const auto& op : ops)
        if (op.kind != StreamOpKind::MeasureParent) ++n;
    return n;
}

namespace detail {

ScheduleWalk walk_schedule(const Schedule& s) {
    s.validate();

    // Positions are graph slots created in order; each holds either an
    // emitted qubit (by emission index) or the parent. PullOut relabels the
    // parent's old position to the newly emitted qubit.
    constexpr int kParentLabel = -1;
    std::vector<int> label;                    // position -> emitted index or parent
    std::vector<std::pair<int, int>> edges;    // over positions
    int parent_pos = -1;
    int emitted = 0;
    bool measured = false;
    std::vector<int> measure_neighbors;

    auto new_position = [&](int lab) {
        label.push_back(lab);
        return static_cast<int>(label.size()) - 1;
    };

    for (const auto& op : s.ops) {
        switch (op.kind) {
            case StreamOpKind::Load: {
                parent_pos = new_position(kParentLabel);
                int q = new_position(emitted++);
                edges.emplace_back(q, parent_pos);
                break;
            }
            case StreamOpKind::Branch: {
                int q = new_position(emitted++);
                edges.emplace_back(q, parent_pos);
                break;
            }
            case StreamOpKind::PullOut: {
                int fresh = new_position(kParentLabel);
                edges.emplace_back(fresh, parent_pos);
                label[parent_pos] = emitted++;
                parent_pos = fresh;
                break;
            }
            case StreamOpKind::MeasureParent: {
                for (const auto& [a, b] : edges) {
                    if (a == parent_pos) measure_neighbors.push_back(label[b]);
                    else if (b == parent_pos) measure_neighbors.push_back(label[a]);
                }
                measured = true;
                break;
            }
        }
    }

    ScheduleWalk out;
    out.emitted_count = emitted;
    out.parent_present = !measured;
    out.parent_neighbors = measure_neighbors;
    std::sort(out.parent_neighbors.begin(), out.parent_neighbors.end());

    out.graph = Graph(emitted + (measured ? 0 : 1));
    auto vertex_of = [&](int pos) {
        return label[pos] == kParentLabel ? emitted : label[pos];
    };
    for (const auto& [a, b] : edges) {
        if (measured && (a == parent_pos || b == parent_pos)) continue;
        out.graph.add_edge(vertex_of(a), vertex_of(b));
    }
    return out;
}

}  // namespace detail

Graph graph_of_schedule(const Schedule& s) { return detail::walk_schedule(s).graph; }

StarChain load_adjusted_chain(const StarChain& chain) {
    chain.validate();
    StarChain adjusted = chain;
    adjusted.branch_counts[0] += 1;
    return adjusted;
}

CompiledSchedule compile_schedule(const StarChain& chain, bool keep_parent) {
    chain.validate();
    const int k = chain.spine_length();

    Schedule sched;
    sched.ops.push_back({StreamOpKind::Load});
    for (int j = 0; j < chain.branch_counts[0]; ++j) sched.ops.push_back({StreamOpKind::Branch});
    for (int i = 1; i < k; ++i) {
        sched.ops.push_back({StreamOpKind::PullOut});
        for (int j = 0; j < chain.branch_counts[i]; ++j) sched.ops.push_back({StreamOpKind::Branch});
    }
    if (!keep_parent) {
        sched.ops.push_back({StreamOpKind::PullOut});
        sched.ops.push_back({StreamOpKind::MeasureParent});
    }

    // The ideal branching and pulling-out maps are the exact graph-extension
    // isometries, so no per-qubit corrections accrue; only the measurement
    // outcome needs fixing up (outcome 1: Z on every neighbor of the removed
    // parent vertex).
    PauliFrame frame;
    frame.qubit_tags.assign(sched.emitted_qubit_count(), {});
    if (!keep_parent) {
        frame.has_measurement = true;
        auto walk = detail::walk_schedule(sched);
        for (int q : walk.parent_neighbors)
            frame.outcome_corrections[1].emplace_back(q, FrameTag::Z);
    }
    return {std::move(sched), std::move(frame)};
}

std::vector<int> emission_to_spine_major(const StarChain& chain, bool keep_parent) {
    chain.validate();
    const int k = chain.spine_length();
    const StarChain adjusted = load_adjusted_chain(chain);

    std::vector<int> map;
    int next_leaf = k;  // leaves of the adjusted chain start after the spine
    for (int i = 0; i < k; ++i) {
        const int leaves_here = adjusted.branch_counts[i];
        for (int j = 0; j < leaves_here; ++j) map.push_back(next_leaf++);
        const bool parent_stays = keep_parent && i == k - 1;
        if (!parent_stays) map.push_back(i);  // pulled-out qubit takes spine vertex i
    }
    if (keep_parent) map.push_back(k - 1);  // parent entry, last
    return map;
}

}  // namespace gss
