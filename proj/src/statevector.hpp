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

#ifndef GSS_STATEVECTOR_HPP
#define GSS_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "schedule.hpp"

namespace gss {

using cplx = std::complex<double>;

/// Qubit designator: an emission-order index, or the parent qubit. The
/// register convention is emission order with the parent as the last factor,
/// so the parent resolves to qubit_count - 1.
struct QubitId {
    static constexpr int kParentSentinel = -1;
    int value = kParentSentinel;

    QubitId() = default;
    QubitId(int index) : value(index) {}
    static QubitId parent() { return QubitId(kParentSentinel); }
    bool is_parent() const { return value == kParentSentinel; }

    int resolve(int qubit_count) const {
        int idx = is_parent() ? qubit_count - 1 : value;
        if (idx < 0 || idx >= qubit_count)
            throw std::invalid_argument("QubitId: index out of range");
        return idx;
    }
};

/// Dense normalized amplitude vector over an ordered qubit register.
/// Qubit 0 is the most significant bit of the amplitude index.
class StateVector {
public:
    StateVector() : qubit_count_(0), amps_(1, cplx(1.0, 0.0)) {}
    StateVector(int qubit_count, std::vector<cplx> amplitudes);

    static StateVector computational_basis(int qubit_count, std::uint64_t bits);
    /// Single-qubit |+> state, the default parent initialization.
    static StateVector plus();

    int qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::uint64_t idx) const { return amps_[idx]; }

    double norm_squared() const;

private:
    int qubit_count_;
    std::vector<cplx> amps_;
};

enum class Gate { H, X, Z, CPhase, Swap };

/// Standard unitary action on the designated tensor factors.
StateVector apply_gate(const StateVector& s, Gate gate, const std::vector<QubitId>& targets);

/// H^n|0..0> followed by a CPHASE across every edge.
StateVector canonical_graph_state(const Graph& g);

/// Grows the register by one qubit placed immediately before the parent:
/// append |+>, then CPHASE(parent, new).
StateVector branch(const StateVector& s, QubitId parent = QubitId::parent());

/// Branch followed by SWAP(parent, new): the new qubit takes the parent's
/// place and the parent moves to the fresh slot. Equals branch followed by
/// Hadamards on both participating qubits. The same linear map realizes the
/// polarization-encoded photon emission when the mobile basis is relabeled
/// to |sigma+>, |sigma->.
StateVector pull_out(const StateVector& s, QubitId parent = QubitId::parent());

struct MeasureResult {
    StateVector state;   // measured qubit removed from the register
    double probability;  // of the requested outcome
};

/// Projects qubit q onto |outcome>, renormalizes, drops the qubit.
MeasureResult measure_z(const StateVector& s, QubitId q, int outcome);

/// Squared magnitude of the inner product of two normalized states.
double fidelity(const StateVector& a, const StateVector& b);
cplx inner_product(const StateVector& a, const StateVector& b);

/// Relabels qubits: qubit i of the input becomes qubit perm[i] of the output.
StateVector permute_qubits(const StateVector& s, const std::vector<int>& perm);

struct IdealRunResult {
    StateVector state;
    std::optional<int> parent_outcome;   // set when the schedule measured the parent
    double outcome_probability = 1.0;
};

/// Executes a schedule with the ideal maps: Load/Branch are branching steps,
/// PullOut is the pulling-out isometry, MeasureParent measures the parent in
/// the computational basis (outcome selected by `measure_outcome`).
IdealRunResult run_schedule_ideal(const Schedule& sched,
                                  const StateVector& parent_init = StateVector::plus(),
                                  int measure_outcome = 0);

/// Applies a Pauli frame to a raw schedule output. `measurement_outcome` must
/// be supplied iff the frame records outcome-conditioned corrections.
StateVector apply_frame(const StateVector& s, const PauliFrame& frame,
                        std::optional<int> measurement_outcome = std::nullopt);

}  // namespace gss

#endif
