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

#ifndef GSS_NOISY_HPP
#define GSS_NOISY_HPP

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cavity.hpp"
#include "errors.hpp"
#include "schedule.hpp"
#include "statevector.hpp"

namespace gss {

using Matrix5 = Eigen::Matrix<std::complex<double>, 5, 5>;
using Matrix4 = Eigen::Matrix<std::complex<double>, 4, 4>;

/// Unnormalized amplitudes over the excitation-carrying states
/// {l10, l01, r10, r01, e00}; the squared norm is the accumulated no-loss
/// survival probability.
using NoJumpState = Eigen::Matrix<std::complex<double>, 5, 1>;

/// Ordered pulse segments, idle included.
using SegmentPlan = std::vector<PulseSpec>;

struct SolverOptions {
    double step = 1e-3;             // RK4 step, units of 1/g
    double tolerance = 1e-8;        // step-halving comparison tolerance
    bool check_convergence = true;  // verify each segment against half steps
};

/// Right-hand side of the master equation over Basis7:
/// -i[H,rho] - sum_mu kappa_mu (a+a rho + rho a+a - 2 a rho a+)
///           - sum_mu gamma_mu (s+s rho + rho s+s - 2 s rho s+).
Matrix7 lindblad_rhs(const Matrix7& rho, DetuningConfig cfg, const CavityParams& params);

/// Optional per-run diagnostics collected at sampled integrator steps.
struct MasterDiagnostics {
    int sample_interval = 25;
    double max_trace_drift = 0.0;
    double max_hermiticity_violation = 0.0;
    double min_eigenvalue = 0.0;
    double max_excitation_increase = 0.0;  // positive = monotonicity violated
    long samples = 0;
};

/// Fixed-step RK4 integration of the master equation, segment by segment.
/// With check_convergence, each segment is re-integrated at half step and a
/// ToleranceError is thrown when any entry moves by more than the tolerance.
Matrix7 integrate_master(const Matrix7& rho0, const SegmentPlan& plan, const CavityParams& params,
                         const SolverOptions& opts, MasterDiagnostics* diag = nullptr);

/// Non-Hermitian no-jump generator restricted to the excitation-carrying
/// states: H - i sum kappa a+a - i sum gamma s+s.
Matrix5 effective_hamiltonian(DetuningConfig cfg, const CavityParams& params);

/// Integrates dpsi/dt = -i H_eff psi across the plan. The norm never grows;
/// the outer product of the result equals the one-excitation block of the
/// master-equation solution started from the same pure state.
NoJumpState evolve_nojump(const NoJumpState& psi, const SegmentPlan& plan,
                          const CavityParams& params, const SolverOptions& opts);

struct HeraldBlockResult {
    Matrix4 block;       // renormalized {l10,l01,r10,r01} block
    double probability;  // trace of the unnormalized block
    double purity;       // tr(sigma^2) of the renormalized block
};

/// Extracts the photon-present block of a 7x7 density matrix.
HeraldBlockResult herald_block(const Matrix7& rho);

struct AtomStepResult {
    std::array<std::complex<double>, 4> amps;  // (atom x photon), unnormalized
    double residual_excited;                   // |e00| at the end of the plan
};

/// One atom crossing the cavity: lifts (alpha|10> + beta|01>) (x) atom_in
/// into the one-excitation space, runs the no-jump evolution over the pulse
/// plan (trailing idle included in `pulses`), and returns the photon-present
/// component. A residual |e00| amplitude above 1e-8 marks invalid gate
/// timing and is surfaced through `residual_excited` on the cascade result.
AtomStepResult atom_step(std::complex<double> alpha, std::complex<double> beta,
                         const Eigen::Vector2cd& atom_in, const SegmentPlan& pulses,
                         const CavityParams& params, const SolverOptions& opts);

struct CascadeResult {
    int emitted_qubits = 0;
    /// Joint unnormalized pure state over emitted atoms (emission order)
    /// with the photon as the last register factor.
    std::vector<std::complex<double>> joint;
    double success_prob = 0.0;
    /// Squared-norm weight of photon outcome 0 (|10>) and 1 (|01>).
    std::array<double, 2> herald_probs{0.0, 0.0};
    bool measured_parent = false;
    PauliFrame frame;  // System II corrections for this schedule
    double max_residual_excited = 0.0;
    bool residual_warning = false;
};

/// Per-atom pulse plan realizing one stream operation: Load -> [loading,
/// idle]; Branch -> [CPHASE, idle]; PullOut -> [CPHASE, SWAP, idle]. Every
/// atom is followed by the idle g*tau = pi. Atoms enter in (|l>+|r>)/sqrt(2),
/// except the first which enters excited.
SegmentPlan atom_plan(StreamOpKind kind, double g = 1.0);

/// Plans for every op of a schedule, in order (empty for MeasureParent).
std::vector<SegmentPlan> default_plans(const Schedule& sched, double g = 1.0);

/// Total wall time of a schedule in units of 1/g (all pulses and idles).
double schedule_duration(const Schedule& sched);

/// Deferred corrections that map the raw cascade output onto the canonical
/// graph state of the schedule: H on the load atom, ZX bookkeeping per
/// pulled-out atom, and the outcome-conditioned measurement corrections.
PauliFrame cascade_frame(const Schedule& sched);

/// Heralded cascade: threads the photon amplitude pair through per-atom
/// no-jump maps. No renormalization until the end; success_prob is the
/// squared norm after the final atom's idle.
CascadeResult cascade_simulate(const Schedule& sched, const CavityParams& params,
                               const SolverOptions& opts = {});

/// Same, with explicit per-op pulse plans (used for timing-jitter studies).
CascadeResult cascade_simulate(const Schedule& sched, const std::vector<SegmentPlan>& plans,
                               const CavityParams& params, const SolverOptions& opts = {});

struct FullSimResult {
    int emitted_qubits = 0;
    /// Unnormalized photon-present block over emitted atoms (x) photon,
    /// indexed like CascadeResult::joint.
    Eigen::MatrixXcd heralded_block;
    double success_prob = 0.0;   // trace of the block
    double final_trace = 0.0;    // tracked trace + lost weight, should be 1
    double lost_weight = 0.0;    // excitation left in departed atoms
    double min_eigenvalue = 0.0; // of the final tracked density matrix
};

/// Density-matrix oracle: evolves the full register under the master
/// equation, enlarging it per atom, and extracts the photon-present block.
/// Exists to validate the cascade; capped at 4 emitted qubits.
FullSimResult full_simulate(const Schedule& sched, const CavityParams& params,
                            const SolverOptions& opts = {});

struct HeraldedState {
    StateVector atoms;       // photon projected out, renormalized
    double probability;      // unnormalized branch weight
    /// Outcome-conditioned corrections from the schedule's cascade frame.
    std::vector<std::pair<int, FrameTag>> corrections;
};

/// Projects the photon register of a cascade result onto |10> (outcome 0)
/// or |01> (outcome 1). Branch probabilities sum to success_prob.
HeraldedState herald_measure_photon(const CascadeResult& result, int outcome);

}  // namespace gss

#endif
