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

#ifndef GSS_SCHEDULE_HPP
#define GSS_SCHEDULE_HPP

#include <array>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace gss {

/// Stream operations emitted by the schedule compiler.
///
/// Load    -- the first mobile qubit is created entangled with the parent.
/// Branch  -- a new mobile qubit is attached as a leaf of the parent's vertex.
/// PullOut -- the parent moves to a fresh vertex; the new mobile qubit takes
///            the parent's previous vertex (branch followed by a swap).
/// MeasureParent -- computational-basis measurement removes the parent vertex.
enum class StreamOpKind { Load, Branch, PullOut, MeasureParent };

struct StreamOp {
    StreamOpKind kind;
};

/// Ordered stream-operation list. A valid schedule has exactly one Load as
/// its first element and, if MeasureParent is present, it is last.
struct Schedule {
    std::vector<StreamOp> ops;

    void validate() const;
    bool has_measure_parent() const;
    /// 1 (for Load) plus the number of Branch and PullOut ops.
    int emitted_qubit_count() const;
};

/// Deferred single-qubit corrections. Tags are applied left to right.
enum class FrameTag { I, X, Z, H };

struct PauliFrame {
    /// Per emitted qubit, in emission order.
    std::vector<std::vector<FrameTag>> qubit_tags;
    /// Corrections for the parent qubit when it is kept.
    std::vector<FrameTag> parent_tags;
    /// True when the schedule ends with MeasureParent. outcome_corrections[m]
    /// lists (emitted qubit, tag) pairs to apply after outcome m.
    bool has_measurement = false;
    std::array<std::vector<std::pair<int, FrameTag>>, 2> outcome_corrections;
};

struct CompiledSchedule {
    Schedule schedule;
    PauliFrame frame;
};

/// Compiles a star chain into a stream schedule.
///
/// The load step always contributes one extra leaf on the first spine vertex,
/// so the generated graph is star_chain_to_graph(load_adjusted_chain(chain)).
/// With keep_parent the parent occupies the final spine vertex; otherwise the
/// parent is pulled out once more onto a pendant scratch vertex and measured
/// away, leaving the graph over emitted qubits only. The frame carries the
/// outcome-conditioned corrections for both measurement branches.
CompiledSchedule compile_schedule(const StarChain& chain, bool keep_parent);

/// The chain actually realized by a compiled schedule: the load qubit counts
/// as one additional leaf on the first spine vertex.
StarChain load_adjusted_chain(const StarChain& chain);

/// Semantic graph generated by a schedule. Vertices are numbered by emission
/// order; the parent, when not measured away, is the last vertex.
Graph graph_of_schedule(const Schedule& s);

/// Map from emission-order qubit index to the spine-major vertex numbering of
/// star_chain_to_graph(load_adjusted_chain(chain)). With keep_parent the last
/// entry is the parent's vertex (the final spine vertex).
std::vector<int> emission_to_spine_major(const StarChain& chain, bool keep_parent);

namespace detail {
/// Shared schedule interpreter used by graph_of_schedule and the compilers.
struct ScheduleWalk {
    Graph graph;                       // emission numbering, parent last when kept
    bool parent_present = true;        // false once MeasureParent ran
    int emitted_count = 0;
    std::vector<int> parent_neighbors; // at measurement time (emitted indices)
};
ScheduleWalk walk_schedule(const Schedule& s);
}  // namespace detail

}  // namespace gss

#endif
