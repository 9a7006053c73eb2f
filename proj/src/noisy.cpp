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

#include "noisy.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace gss {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI(0.0, 1.0);
constexpr double kResidualThreshold = 1e-8;
constexpr double kInvSqrt2 = 0.70710678118654752440;

struct CouplingPair {
    int i, j;
    double g;
};

// Nonzero Hamiltonian entries (upper triangle) for a detuning configuration.
std::array<CouplingPair, 2> coupling_pairs(DetuningConfig cfg, double g, int* count) {
    std::array<CouplingPair, 2> pairs{};
    int n = 0;
    if (cfg == DetuningConfig::ResonantBoth) pairs[n++] = {kL10, kE00, g};
    if (cfg != DetuningConfig::Off) pairs[n++] = {kR01, kE00, g};
    *count = n;
    return pairs;
}

// Amplitude decay rate per basis state: kappa for photon-carrying states,
// gamma_L + gamma_R for the excited atom, zero in the vacuum sector.
std::array<double, 7> decay_rates(const CavityParams& p) {
    return {p.kappa_l, p.kappa_r, p.kappa_l, p.kappa_r, p.gamma_l + p.gamma_r, 0.0, 0.0};
}

struct JumpChannel {
    int from[2];
    int to[2];
    int arms;
    double rate;
};

std::array<JumpChannel, 4> jump_channels(const CavityParams& p) {
    return {{
        {{kL10, kR10}, {kL00, kR00}, 2, p.kappa_l},  // a_L
        {{kL01, kR01}, {kL00, kR00}, 2, p.kappa_r},  // a_R
        {{kE00, 0}, {kL00, 0}, 1, p.gamma_l},        // sigma_L
        {{kE00, 0}, {kR00, 0}, 1, p.gamma_r},        // sigma_R
    }};
}

// Master-equation RHS for a register of `blocks` spectator factors times the
// 7-dimensional atom-cavity factor. All operators act as I (x) op.
void master_rhs(const Eigen::MatrixXcd& rho, DetuningConfig cfg, const CavityParams& p,
                Eigen::MatrixXcd& out) {
    const int blocks = static_cast<int>(rho.rows()) / 7;
    out.setZero();

    int n_pairs = 0;
    const auto pairs = coupling_pairs(cfg, p.g, &n_pairs);
    for (int k = 0; k < n_pairs; ++k) {
        const auto& [i, j, g] = pairs[k];
        for (int b = 0; b < blocks; ++b) {
            const int bi = b * 7 + i, bj = b * 7 + j;
            out.row(bi) -= kI * g * rho.row(bj);  // -i H rho
            out.row(bj) -= kI * g * rho.row(bi);
            out.col(bi) += kI * g * rho.col(bj);  // +i rho H
            out.col(bj) += kI * g * rho.col(bi);
        }
    }

    const auto d = decay_rates(p);
    for (int r = 0; r < rho.rows(); ++r)
        for (int c = 0; c < rho.cols(); ++c) {
            const double dr = d[r % 7] + d[c % 7];
            if (dr != 0.0) out(r, c) -= dr * rho(r, c);
        }

    for (const auto& ch : jump_channels(p)) {
        if (ch.rate == 0.0) continue;
        for (int a = 0; a < ch.arms; ++a)
            for (int b = 0; b < ch.arms; ++b)
                for (int qa = 0; qa < blocks; ++qa)
                    for (int qb = 0; qb < blocks; ++qb)
                        out(qa * 7 + ch.to[a], qb * 7 + ch.to[b]) +=
                            2.0 * ch.rate * rho(qa * 7 + ch.from[a], qb * 7 + ch.from[b]);
    }
}

double excitation_expectation(const Eigen::MatrixXcd& rho) {
    const int blocks = static_cast<int>(rho.rows()) / 7;
    double n = 0.0;
    for (int b = 0; b < blocks; ++b)
        for (int i = kL10; i <= kE00; ++i) n += rho(b * 7 + i, b * 7 + i).real();
    return n;
}

void sample_diagnostics(const Eigen::MatrixXcd& rho, MasterDiagnostics* diag,
                        double* last_excitation) {
    diag->samples++;
    diag->max_trace_drift =
        std::max(diag->max_trace_drift, std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag()));
    diag->max_hermiticity_violation =
        std::max(diag->max_hermiticity_violation, (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((rho + rho.adjoint().eval()) * 0.5);
    diag->min_eigenvalue = std::min(diag->min_eigenvalue, es.eigenvalues().minCoeff());
    const double n = excitation_expectation(rho);
    if (*last_excitation >= 0.0)
        diag->max_excitation_increase = std::max(diag->max_excitation_increase, n - *last_excitation);
    *last_excitation = n;
}

// One segment at fixed step; steps chosen so the duration is covered exactly.
Eigen::MatrixXcd run_segment(Eigen::MatrixXcd rho, DetuningConfig cfg, double duration,
                             const CavityParams& p, double step, MasterDiagnostics* diag,
                             double* last_excitation) {
    if (duration <= 0.0) return rho;
    const long steps = std::max(1L, std::lround(std::ceil(duration / step)));
    const double dt = duration / static_cast<double>(steps);
    Eigen::MatrixXcd k1(rho.rows(), rho.cols()), k2(rho.rows(), rho.cols());
    Eigen::MatrixXcd k3(rho.rows(), rho.cols()), k4(rho.rows(), rho.cols());
    Eigen::MatrixXcd tmp(rho.rows(), rho.cols());
    for (long s = 0; s < steps; ++s) {
        master_rhs(rho, cfg, p, k1);
        tmp = rho + (0.5 * dt) * k1;
        master_rhs(tmp, cfg, p, k2);
        tmp = rho + (0.5 * dt) * k2;
        master_rhs(tmp, cfg, p, k3);
        tmp = rho + dt * k3;
        master_rhs(tmp, cfg, p, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (diag && (s % diag->sample_interval == 0 || s + 1 == steps))
            sample_diagnostics(rho, diag, last_excitation);
    }
    return rho;
}

Eigen::MatrixXcd integrate_blocks(const Eigen::MatrixXcd& rho0, const SegmentPlan& plan,
                                  const CavityParams& p, const SolverOptions& opts,
                                  MasterDiagnostics* diag) {
    if (opts.step <= 0.0) throw std::invalid_argument("SolverOptions: step must be positive");
    Eigen::MatrixXcd rho = rho0;
    double last_excitation = -1.0;
    if (diag) sample_diagnostics(rho, diag, &last_excitation);
    for (const PulseSpec& seg : plan) {
        if (seg.duration < 0.0) throw std::invalid_argument("SegmentPlan: negative duration");
        Eigen::MatrixXcd next =
            run_segment(rho, seg.config, seg.duration, p, opts.step, diag, &last_excitation);
        if (opts.check_convergence) {
            double ignore = -1.0;
            Eigen::MatrixXcd halved =
                run_segment(rho, seg.config, seg.duration, p, 0.5 * opts.step, nullptr, &ignore);
            const double diff = (next - halved).cwiseAbs().maxCoeff();
            const double scale = std::max(1.0, next.cwiseAbs().maxCoeff());
            if (diff > opts.tolerance * scale)
                throw ToleranceError("integrate_master: step-halving check failed");
        }
        rho = std::move(next);
    }
    return rho;
}

// ---- no-jump propagation ------------------------------------------------

struct NoJumpGenerator {
    double gl = 0.0, gr = 0.0;
    std::array<double, 5> decay{};

    NoJumpGenerator(DetuningConfig cfg, const CavityParams& p) {
        if (cfg == DetuningConfig::ResonantBoth) gl = p.g;
        if (cfg != DetuningConfig::Off) gr = p.g;
        decay = {p.kappa_l, p.kappa_r, p.kappa_l, p.kappa_r, p.gamma_l + p.gamma_r};
    }

    inline void rhs(const std::array<cplx, 5>& v, std::array<cplx, 5>& o) const {
        o[0] = -kI * gl * v[4] - decay[0] * v[0];
        o[1] = -decay[1] * v[1];
        o[2] = -decay[2] * v[2];
        o[3] = -kI * gr * v[4] - decay[3] * v[3];
        o[4] = -kI * gl * v[0] - kI * gr * v[3] - decay[4] * v[4];
    }
};

std::array<cplx, 5> run_segment_nojump(std::array<cplx, 5> v, const NoJumpGenerator& gen,
                                       double duration, double step) {
    if (duration <= 0.0) return v;
    const long steps = std::max(1L, std::lround(std::ceil(duration / step)));
    const double dt = duration / static_cast<double>(steps);
    std::array<cplx, 5> k1, k2, k3, k4, tmp;
    for (long s = 0; s < steps; ++s) {
        gen.rhs(v, k1);
        for (int i = 0; i < 5; ++i) tmp[i] = v[i] + 0.5 * dt * k1[i];
        gen.rhs(tmp, k2);
        for (int i = 0; i < 5; ++i) tmp[i] = v[i] + 0.5 * dt * k2[i];
        gen.rhs(tmp, k3);
        for (int i = 0; i < 5; ++i) tmp[i] = v[i] + dt * k3[i];
        gen.rhs(tmp, k4);
        for (int i = 0; i < 5; ++i) v[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return v;
}

std::array<cplx, 5> nojump_over_plan(std::array<cplx, 5> v, const SegmentPlan& plan,
                                     const CavityParams& p, const SolverOptions& opts) {
    if (opts.step <= 0.0) throw std::invalid_argument("SolverOptions: step must be positive");
    for (const PulseSpec& seg : plan) {
        if (seg.duration < 0.0) throw std::invalid_argument("SegmentPlan: negative duration");
        const NoJumpGenerator gen(seg.config, p);
        auto next = run_segment_nojump(v, gen, seg.duration, opts.step);
        if (opts.check_convergence) {
            auto halved = run_segment_nojump(v, gen, seg.duration, 0.5 * opts.step);
            double diff = 0.0, scale = 1.0;
            for (int i = 0; i < 5; ++i) {
                diff = std::max(diff, std::abs(next[i] - halved[i]));
                scale = std::max(scale, std::abs(next[i]));
            }
            if (diff > opts.tolerance * scale)
                throw ToleranceError("evolve_nojump: step-halving check failed");
        }
        v = next;
    }
    return v;
}

}  // namespace

Matrix7 lindblad_rhs(const Matrix7& rho, DetuningConfig cfg, const CavityParams& params) {
    Eigen::MatrixXcd out(7, 7);
    master_rhs(rho, cfg, params, out);
    return out;
}

Matrix7 integrate_master(const Matrix7& rho0, const SegmentPlan& plan, const CavityParams& params,
                         const SolverOptions& opts, MasterDiagnostics* diag) {
    return integrate_blocks(rho0, plan, params, opts, diag);
}

Matrix5 effective_hamiltonian(DetuningConfig cfg, const CavityParams& params) {
    Matrix5 h = Matrix5::Zero();
    if (cfg == DetuningConfig::ResonantBoth) {
        h(kL10, kE00) = params.g;
        h(kE00, kL10) = params.g;
    }
    if (cfg != DetuningConfig::Off) {
        h(kR01, kE00) = params.g;
        h(kE00, kR01) = params.g;
    }
    const std::array<double, 5> d = {params.kappa_l, params.kappa_r, params.kappa_l,
                                     params.kappa_r, params.gamma_l + params.gamma_r};
    for (int i = 0; i < 5; ++i) h(i, i) -= kI * d[i];
    return h;
}

NoJumpState evolve_nojump(const NoJumpState& psi, const SegmentPlan& plan,
                          const CavityParams& params, const SolverOptions& opts) {
    std::array<cplx, 5> v;
    for (int i = 0; i < 5; ++i) v[i] = psi(i);
    v = nojump_over_plan(v, plan, params, opts);
    NoJumpState out;
    for (int i = 0; i < 5; ++i) out(i) = v[i];
    return out;
}

HeraldBlockResult herald_block(const Matrix7& rho) {
    const double prob = rho.block<4, 4>(0, 0).trace().real();
    if (prob < 1e-12) throw HeraldImpossibleError("herald_block: photon-present weight below 1e-12");
    HeraldBlockResult out;
    out.probability = prob;
    out.block = rho.block<4, 4>(0, 0) / prob;
    out.purity = (out.block * out.block).trace().real();
    return out;
}

AtomStepResult atom_step(cplx alpha, cplx beta, const Eigen::Vector2cd& atom_in,
                         const SegmentPlan& pulses, const CavityParams& params,
                         const SolverOptions& opts) {
    std::array<cplx, 5> v{alpha * atom_in(0), beta * atom_in(0), alpha * atom_in(1),
                          beta * atom_in(1), cplx(0.0)};
    v = nojump_over_plan(v, pulses, params, opts);
    return {{v[0], v[1], v[2], v[3]}, std::abs(v[4])};
}

SegmentPlan atom_plan(StreamOpKind kind, double g) {
    switch (kind) {
        case StreamOpKind::Load:
            return {{DetuningConfig::ResonantBoth, kLoadTau / g}, {DetuningConfig::Off, kIdleTau / g}};
        case StreamOpKind::Branch:
            return {{DetuningConfig::ResonantR, kCphaseTau / g}, {DetuningConfig::Off, kIdleTau / g}};
        case StreamOpKind::PullOut:
            return {{DetuningConfig::ResonantR, kCphaseTau / g},
                    {DetuningConfig::ResonantBoth, kSwapTau / g},
                    {DetuningConfig::Off, kIdleTau / g}};
        case StreamOpKind::MeasureParent:
            return {};
    }
    return {};
}

std::vector<SegmentPlan> default_plans(const Schedule& sched, double g) {
    std::vector<SegmentPlan> plans;
    plans.reserve(sched.ops.size());
    for (const auto& op : sched.ops) plans.push_back(atom_plan(op.kind, g));
    return plans;
}

double schedule_duration(const Schedule& sched) {
    double t = 0.0;
    for (const auto& plan : default_plans(sched, 1.0))
        for (const auto& seg : plan) t += seg.duration;
    return t;
}

PauliFrame cascade_frame(const Schedule& sched) {
    sched.validate();
    PauliFrame frame;
    frame.qubit_tags.assign(sched.emitted_qubit_count(), {});
    // The loading pulse leaves the pair in the Bell form, a Hadamard away
    // from the canonical two-qubit graph state; the symmetric state lets the
    // correction sit on the emitted atom instead of the parent.
    frame.qubit_tags[0] = {FrameTag::H};

    auto tags_of = [](int x, int z) {
        std::vector<FrameTag> t;
        if (x) t.push_back(FrameTag::X);
        if (z) t.push_back(FrameTag::Z);
        return t;
    };

    int px = 0, pz = 0;  // pending parent Pauli, X^px Z^pz up to phase
    int emitted = 1;
    for (std::size_t i = 1; i < sched.ops.size(); ++i) {
        switch (sched.ops[i].kind) {
            case StreamOpKind::Branch:
                // CZ propagates the pending X onto the fresh leaf as a Z.
                if (px) frame.qubit_tags[emitted] = {FrameTag::Z};
                ++emitted;
                break;
            case StreamOpKind::PullOut: {
                // Gate correction ZX on both qubits, composed with the
                // pending Pauli which the swap hands to the emitted atom.
                frame.qubit_tags[emitted] = tags_of(px ^ 1, pz ^ 1);
                pz = px ^ 1;
                px = 1;
                ++emitted;
                break;
            }
            case StreamOpKind::MeasureParent: {
                frame.has_measurement = true;
                // A pending X flips the reported outcome relative to the
                // ideal one; outcome 1 of the ideal measurement applies Z on
                // every neighbor of the removed vertex.
                const auto walk = detail::walk_schedule(sched);
                for (int q : walk.parent_neighbors)
                    frame.outcome_corrections[1 ^ px].emplace_back(q, FrameTag::Z);
                break;
            }
            case StreamOpKind::Load:
                break;  // unreachable, validate() rejects it
        }
    }
    if (!sched.has_measure_parent()) frame.parent_tags = tags_of(px, pz);
    return frame;
}

CascadeResult cascade_simulate(const Schedule& sched, const CavityParams& params,
                               const SolverOptions& opts) {
    return cascade_simulate(sched, default_plans(sched, params.g), params, opts);
}

CascadeResult cascade_simulate(const Schedule& sched, const std::vector<SegmentPlan>& plans,
                               const CavityParams& params, const SolverOptions& opts) {
    sched.validate();
    if (plans.size() != sched.ops.size())
        throw std::invalid_argument("cascade_simulate: one plan per op required");
    if (sched.emitted_qubit_count() > 20)
        throw RegisterTooLargeError("cascade_simulate: too many emitted qubits");

    CascadeResult result;
    const Eigen::Vector2cd plus(kInvSqrt2, kInvSqrt2);
    std::vector<cplx> joint;

    for (std::size_t i = 0; i < sched.ops.size(); ++i) {
        switch (sched.ops[i].kind) {
            case StreamOpKind::Load: {
                std::array<cplx, 5> v{0.0, 0.0, 0.0, 0.0, 1.0};  // atom enters excited
                v = nojump_over_plan(v, plans[i], params, opts);
                joint = {v[0], v[1], v[2], v[3]};
                result.max_residual_excited = std::max(result.max_residual_excited, std::abs(v[4]));
                result.emitted_qubits = 1;
                break;
            }
            case StreamOpKind::Branch:
            case StreamOpKind::PullOut: {
                const AtomStepResult t0 = atom_step(1.0, 0.0, plus, plans[i], params, opts);
                const AtomStepResult t1 = atom_step(0.0, 1.0, plus, plans[i], params, opts);
                result.max_residual_excited = std::max(
                    {result.max_residual_excited, t0.residual_excited, t1.residual_excited});
                std::vector<cplx> next(joint.size() * 2);
                for (std::size_t prefix = 0; prefix < joint.size() / 2; ++prefix) {
                    const cplx in0 = joint[prefix * 2 + 0];
                    const cplx in1 = joint[prefix * 2 + 1];
                    for (int a = 0; a < 2; ++a)
                        for (int ph = 0; ph < 2; ++ph)
                            next[(prefix * 4) + (a * 2) + ph] =
                                t0.amps[a * 2 + ph] * in0 + t1.amps[a * 2 + ph] * in1;
                }
                joint = std::move(next);
                result.emitted_qubits += 1;
                break;
            }
            case StreamOpKind::MeasureParent:
                result.measured_parent = true;
                break;
        }
    }

    result.joint = std::move(joint);
    for (std::size_t idx = 0; idx < result.joint.size(); ++idx)
        result.herald_probs[idx & 1] += std::norm(result.joint[idx]);
    result.success_prob = result.herald_probs[0] + result.herald_probs[1];
    if (result.success_prob < 1e-12)
        throw HeraldImpossibleError("cascade_simulate: success probability below 1e-12");
    result.frame = cascade_frame(sched);
    result.residual_warning = result.max_residual_excited > kResidualThreshold;
    return result;
}

namespace {

// Basis7 index of atom level a (0=l, 1=r) with cavity state c (0=|10>,
// 1=|01>, 2=|00>).
constexpr int kIdx7[2][3] = {{kL10, kL01, kL00}, {kR10, kR01, kR00}};

}  // namespace

FullSimResult full_simulate(const Schedule& sched, const CavityParams& params,
                            const SolverOptions& opts) {
    sched.validate();
    const int n = sched.emitted_qubit_count();
    if (n > 4)
        throw RegisterTooLargeError("full_simulate: more than 4 emitted qubits");

    // Between atoms the register is (emitted atoms) x cavity{10,01,00};
    // during a transit the last factor is the 7-dimensional Basis7 space.
    Eigen::MatrixXcd rho;  // dim 2^m * 3 between atoms (after the first)
    double lost = 0.0;
    int m = 0;

    for (std::size_t i = 0; i < sched.ops.size(); ++i) {
        const StreamOpKind kind = sched.ops[i].kind;
        if (kind == StreamOpKind::MeasureParent) break;

        const int blocks = 1 << m;
        Eigen::MatrixXcd transit = Eigen::MatrixXcd::Zero(blocks * 7, blocks * 7);
        if (kind == StreamOpKind::Load) {
            transit(kE00, kE00) = 1.0;  // first atom enters excited, empty cavity
        } else {
            const cplx amp[2] = {kInvSqrt2, kInvSqrt2};  // atom enters in |+>
            for (int qa = 0; qa < blocks; ++qa)
                for (int qb = 0; qb < blocks; ++qb)
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            for (int ca = 0; ca < 3; ++ca)
                                for (int cb = 0; cb < 3; ++cb)
                                    transit(qa * 7 + kIdx7[a][ca], qb * 7 + kIdx7[b][cb]) =
                                        rho(qa * 3 + ca, qb * 3 + cb) * amp[a] * std::conj(amp[b]);
        }

        transit = integrate_blocks(transit, atom_plan(kind, params.g), params, opts, nullptr);

        // Atom leaves: reshape the 7-factor into atom (x) cavity. The e00
        // component departs as a lost excitation; its coherences cannot feed
        // the photon-present block again and are dropped.
        const int out_blocks = blocks * 2;
        Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(out_blocks * 3, out_blocks * 3);
        for (int qa = 0; qa < blocks; ++qa) {
            lost += transit(qa * 7 + kE00, qa * 7 + kE00).real();
            for (int qb = 0; qb < blocks; ++qb)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int ca = 0; ca < 3; ++ca)
                            for (int cb = 0; cb < 3; ++cb)
                                next((qa * 2 + a) * 3 + ca, (qb * 2 + b) * 3 + cb) =
                                    transit(qa * 7 + kIdx7[a][ca], qb * 7 + kIdx7[b][cb]);
        }
        rho = std::move(next);
        ++m;
    }

    FullSimResult out;
    out.emitted_qubits = m;
    out.lost_weight = lost;
    out.final_trace = rho.trace().real() + lost;

    const int blocks = 1 << m;
    out.heralded_block = Eigen::MatrixXcd::Zero(blocks * 2, blocks * 2);
    for (int qa = 0; qa < blocks; ++qa)
        for (int qb = 0; qb < blocks; ++qb)
            for (int ca = 0; ca < 2; ++ca)
                for (int cb = 0; cb < 2; ++cb)
                    out.heralded_block(qa * 2 + ca, qb * 2 + cb) = rho(qa * 3 + ca, qb * 3 + cb);
    out.success_prob = out.heralded_block.trace().real();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((rho + rho.adjoint().eval()) * 0.5);
    out.min_eigenvalue = es.eigenvalues().minCoeff();
    return out;
}

HeraldedState herald_measure_photon(const CascadeResult& result, int outcome) {
    if (outcome != 0 && outcome != 1)
        throw std::invalid_argument("herald_measure_photon: outcome not a bit");
    if (result.success_prob <= 0.0)
        throw HeraldImpossibleError("herald_measure_photon: nothing to herald");
    const double branch = result.herald_probs[outcome];
    if (branch < 1e-14)
        throw ZeroProbabilityError("herald_measure_photon: branch probability below 1e-14");

    std::vector<cplx> amps(result.joint.size() / 2);
    double n2 = 0.0;
    for (std::size_t prefix = 0; prefix < amps.size(); ++prefix) {
        amps[prefix] = result.joint[prefix * 2 + outcome];
        n2 += std::norm(amps[prefix]);
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& a : amps) a *= scale;

    HeraldedState out{StateVector(result.emitted_qubits, std::move(amps)), branch, {}};
    if (result.frame.has_measurement)
        out.corrections = result.frame.outcome_corrections[outcome];
    return out;
}

}  // namespace gss
