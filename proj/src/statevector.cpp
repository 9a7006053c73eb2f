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

#include "statevector.hpp"

#include <cmath>
#include <numeric>

namespace gss {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr int kMaxQubits = 26;

int bit_shift(int qubit_count, int position) { return qubit_count - 1 - position; }

}  // namespace

StateVector::StateVector(int qubit_count, std::vector<cplx> amplitudes)
    : qubit_count_(qubit_count), amps_(std::move(amplitudes)) {
    if (qubit_count < 0 || qubit_count > kMaxQubits)
        throw std::invalid_argument("StateVector: unsupported qubit count");
    if (amps_.size() != (std::size_t{1} << qubit_count))
        throw std::invalid_argument("StateVector: amplitude count != 2^qubits");
    double n2 = 0.0;
    for (const cplx& a : amps_) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-6)
        throw std::invalid_argument("StateVector: amplitudes not normalized");
}

StateVector StateVector::computational_basis(int qubit_count, std::uint64_t bits) {
    if (qubit_count < 0 || qubit_count > kMaxQubits)
        throw std::invalid_argument("StateVector: unsupported qubit count");
    std::vector<cplx> amps(std::size_t{1} << qubit_count, cplx(0.0));
    if (bits >= amps.size()) throw std::invalid_argument("StateVector: basis index out of range");
    amps[bits] = cplx(1.0);
    return StateVector(qubit_count, std::move(amps));
}

StateVector StateVector::plus() {
    return StateVector(1, {cplx(kInvSqrt2), cplx(kInvSqrt2)});
}

double StateVector::norm_squared() const {
    double n2 = 0.0;
    for (const cplx& a : amps_) n2 += std::norm(a);
    return n2;
}

StateVector apply_gate(const StateVector& s, Gate gate, const std::vector<QubitId>& targets) {
    const int n = s.qubit_count();
    const bool two_qubit = gate == Gate::CPhase || gate == Gate::Swap;
    if (targets.size() != (two_qubit ? 2u : 1u))
        throw std::invalid_argument("apply_gate: wrong target count for gate");

    std::vector<cplx> amps = s.amplitudes();
    if (!two_qubit) {
        const int t = targets[0].resolve(n);
        const std::uint64_t mask = std::uint64_t{1} << bit_shift(n, t);
        for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
            if (idx & mask) continue;
            cplx a0 = amps[idx], a1 = amps[idx | mask];
            switch (gate) {
                case Gate::H:
                    amps[idx] = (a0 + a1) * kInvSqrt2;
                    amps[idx | mask] = (a0 - a1) * kInvSqrt2;
                    break;
                case Gate::X:
                    amps[idx] = a1;
                    amps[idx | mask] = a0;
                    break;
                case Gate::Z:
                    amps[idx | mask] = -a1;
                    break;
                default: break;
            }
        }
    } else {
        const int a = targets[0].resolve(n);
        const int b = targets[1].resolve(n);
        if (a == b) throw std::invalid_argument("apply_gate: duplicate targets");
        const std::uint64_t ma = std::uint64_t{1} << bit_shift(n, a);
        const std::uint64_t mb = std::uint64_t{1} << bit_shift(n, b);
        for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
            const bool ba = idx & ma, bb = idx & mb;
            if (gate == Gate::CPhase) {
                if (ba && bb) amps[idx] = -amps[idx];
            } else {  // Swap: visit each pair once
                if (ba && !bb) std::swap(amps[idx], amps[(idx & ~ma) | mb]);
            }
        }
    }
    return StateVector(n, std::move(amps));
}

StateVector canonical_graph_state(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("canonical_graph_state: empty graph");
    const double scale = std::pow(2.0, -0.5 * n);
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        int parity = 0;
        for (const auto& [u, v] : g.edges()) {
            const std::uint64_t mu = std::uint64_t{1} << bit_shift(n, u);
            const std::uint64_t mv = std::uint64_t{1} << bit_shift(n, v);
            if ((idx & mu) && (idx & mv)) parity ^= 1;
        }
        amps[idx] = cplx(parity ? -scale : scale);
    }
    return StateVector(n, std::move(amps));
}

namespace {

// Shared register-growth kernel. The new amplitude at (bit_hi @ pp,
// bit_lo @ pp+1) picks up the old amplitude whose parent bit is
// `parent_from_hi ? bit_hi : bit_lo`, times (-1)^(bit_hi & bit_lo)/sqrt(2).
StateVector grow_register(const StateVector& s, QubitId parent, bool parent_keeps_last) {
    const int n = s.qubit_count();
    const int pp = parent.resolve(n);
    const std::uint64_t lo_mask = (std::uint64_t{1} << bit_shift(n, pp)) - 1;

    std::vector<cplx> amps(std::size_t{1} << (n + 1), cplx(0.0));
    for (std::uint64_t idx = 0; idx < s.dim(); ++idx) {
        const std::uint64_t hi = idx >> (n - pp);
        const std::uint64_t pb = (idx >> bit_shift(n, pp)) & 1;
        const std::uint64_t lo = idx & lo_mask;
        const cplx a = s.amplitude(idx) * kInvSqrt2;
        for (std::uint64_t nb = 0; nb < 2; ++nb) {
            // parent_keeps_last: parent bit stays at position pp+1 (branch);
            // otherwise the emitted qubit inherits it at position pp (pull-out).
            const std::uint64_t at_pp = parent_keeps_last ? nb : pb;
            const std::uint64_t at_pp1 = parent_keeps_last ? pb : nb;
            const std::uint64_t out = (hi << (n + 1 - pp)) | (at_pp << (n - pp)) |
                                      (at_pp1 << bit_shift(n, pp)) | lo;
            amps[out] = ((at_pp & at_pp1) ? -a : a);
        }
    }
    return StateVector(n + 1, std::move(amps));
}

}  // namespace

StateVector branch(const StateVector& s, QubitId parent) {
    return grow_register(s, parent, /*parent_keeps_last=*/true);
}

StateVector pull_out(const StateVector& s, QubitId parent) {
    return grow_register(s, parent, /*parent_keeps_last=*/false);
}

MeasureResult measure_z(const StateVector& s, QubitId q, int outcome) {
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("measure_z: outcome not a bit");
    const int n = s.qubit_count();
    const int pos = q.resolve(n);
    const int shift = bit_shift(n, pos);
    const std::uint64_t mask = std::uint64_t{1} << shift;

    double prob = 0.0;
    for (std::uint64_t idx = 0; idx < s.dim(); ++idx)
        if (((idx >> shift) & 1) == static_cast<std::uint64_t>(outcome))
            prob += std::norm(s.amplitude(idx));
    if (prob < 1e-14)
        throw ZeroProbabilityError("measure_z: branch probability below 1e-14");

    const double scale = 1.0 / std::sqrt(prob);
    std::vector<cplx> amps(std::size_t{1} << (n - 1));
    for (std::uint64_t idx = 0; idx < s.dim(); ++idx) {
        if (((idx >> shift) & 1) != static_cast<std::uint64_t>(outcome)) continue;
        const std::uint64_t out = ((idx >> (shift + 1)) << shift) | (idx & (mask - 1));
        amps[out] = s.amplitude(idx) * scale;
    }
    return {StateVector(n - 1, std::move(amps)), prob};
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.qubit_count() != b.qubit_count())
        throw std::invalid_argument("inner_product: dimension mismatch");
    cplx acc(0.0);
    for (std::uint64_t idx = 0; idx < a.dim(); ++idx)
        acc += std::conj(a.amplitude(idx)) * b.amplitude(idx);
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

StateVector permute_qubits(const StateVector& s, const std::vector<int>& perm) {
    const int n = s.qubit_count();
    if (perm.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("permute_qubits: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("permute_qubits: not a permutation");
        seen[p] = true;
    }
    std::vector<cplx> amps(s.dim());
    for (std::uint64_t idx = 0; idx < s.dim(); ++idx) {
        std::uint64_t out = 0;
        for (int i = 0; i < n; ++i)
            if ((idx >> bit_shift(n, i)) & 1) out |= std::uint64_t{1} << bit_shift(n, perm[i]);
        amps[out] = s.amplitude(idx);
    }
    return StateVector(n, std::move(amps));
}

IdealRunResult run_schedule_ideal(const Schedule& sched, const StateVector& parent_init,
                                  int measure_outcome) {
    sched.validate();
    if (parent_init.qubit_count() != 1)
        throw std::invalid_argument("run_schedule_ideal: parent_init must be a single qubit");

    IdealRunResult result{parent_init, std::nullopt, 1.0};
    for (const auto& op : sched.ops) {
        switch (op.kind) {
            case StreamOpKind::Load:
            case StreamOpKind::Branch:
                result.state = branch(result.state);
                break;
            case StreamOpKind::PullOut:
                result.state = pull_out(result.state);
                break;
            case StreamOpKind::MeasureParent: {
                auto m = measure_z(result.state, QubitId::parent(), measure_outcome);
                result.state = std::move(m.state);
                result.parent_outcome = measure_outcome;
                result.outcome_probability = m.probability;
                break;
            }
        }
    }
    return result;
}

namespace {

StateVector apply_tags(StateVector s, const std::vector<FrameTag>& tags, QubitId q) {
    for (FrameTag tag : tags) {
        switch (tag) {
            case FrameTag::I: break;
            case FrameTag::X: s = apply_gate(s, Gate::X, {q}); break;
            case FrameTag::Z: s = apply_gate(s, Gate::Z, {q}); break;
            case FrameTag::H: s = apply_gate(s, Gate::H, {q}); break;
        }
    }
    return s;
}

}  // namespace

StateVector apply_frame(const StateVector& s, const PauliFrame& frame,
                        std::optional<int> measurement_outcome) {
    if (frame.has_measurement != measurement_outcome.has_value())
        throw std::invalid_argument("apply_frame: measurement outcome required iff frame has one");

    StateVector out = s;
    for (std::size_t q = 0; q < frame.qubit_tags.size(); ++q)
        out = apply_tags(std::move(out), frame.qubit_tags[q], QubitId(static_cast<int>(q)));
    if (!frame.has_measurement && !frame.parent_tags.empty())
        out = apply_tags(std::move(out), frame.parent_tags, QubitId::parent());
    if (frame.has_measurement) {
        for (const auto& [q, tag] : frame.outcome_corrections[*measurement_outcome])
            out = apply_tags(std::move(out), {tag}, QubitId(q));
    }
    return out;
}

}  // namespace gss
