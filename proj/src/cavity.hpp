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

#ifndef GSS_CAVITY_HPP
#define GSS_CAVITY_HPP

#include <Eigen/Dense>
#include <complex>

namespace gss {

/// Atom-cavity basis for the one-excitation-or-less subspace, one atom plus
/// the two polarized cavity modes. |a nL nR>: atom level l/r/e, then photon
/// numbers of the L and R mode. This order is the contract for every 7x7
/// matrix in the project.
enum Basis7 : int {
    kL10 = 0,  // |l>|10>
    kL01 = 1,  // |l>|01>
    kR10 = 2,  // |r>|10>
    kR01 = 3,  // |r>|01>
    kE00 = 4,  // |e>|00>
    kL00 = 5,  // |l>|00>
    kR00 = 6,  // |r>|00>
};

using Matrix7 = Eigen::Matrix<std::complex<double>, 7, 7>;
using Vector7 = Eigen::Matrix<std::complex<double>, 7, 1>;

/// Which atomic transitions are tuned into resonance with their cavity mode.
/// Detuned transitions couple with strength zero.
enum class DetuningConfig { Off, ResonantR, ResonantBoth };

/// One square pulse: a detuning configuration held for a duration in units
/// of 1/g.
struct PulseSpec {
    DetuningConfig config = DetuningConfig::Off;
    double duration = 0.0;
};

/// Open-system rates in units of the coupling g (g itself sets the scale and
/// defaults to 1). kappa: cavity damping per polarized mode; gamma:
/// spontaneous emission per transition. These are the rates appearing
/// literally in the master equation, so a photon population decays at
/// 2*kappa.
struct CavityParams {
    double g = 1.0;
    double kappa_l = 0.0;
    double kappa_r = 0.0;
    double gamma_l = 0.0;
    double gamma_r = 0.0;
};

/// Interaction Hamiltonian over Basis7: coupling g between (l10, e00) when
/// the L transition is resonant and between (r01, e00) when R is resonant.
Matrix7 hamiltonian7(DetuningConfig cfg, double g);

/// exp(-i H(cfg) * duration), in closed form. Off returns the identity.
Matrix7 pulse_unitary(const PulseSpec& pulse, double g = 1.0);

struct PulseGate {
    PulseSpec spec;
    Matrix7 unitary;
};

/// Loading pulse, g*tau = pi/(2 sqrt(2)): takes |e00> to
/// -i(|l10> + |r01>)/sqrt(2). The -i is a global phase of the Rabi solution;
/// it is kept, not corrected.
PulseGate gate_load(double g = 1.0);

/// CPHASE pulse, g*tau = pi with only the R transition resonant:
/// |r01> -> -|r01>, the other photon-present states unchanged.
PulseGate gate_cphase(double g = 1.0);

/// SWAP pulse, g*tau = pi/sqrt(2) with both transitions resonant:
/// |l10> -> -|r01>, |r01> -> -|l10|, |l01> and |r10> unchanged. On the
/// atom (x) polarization qubit block this equals (ZX x ZX) . SWAP up to a
/// global -1, so the deferred correction is a ZX on both qubits.
PulseGate gate_swap(double g = 1.0);

/// Pulse durations in units of 1/g.
inline constexpr double kLoadTau = 1.1107207345395915617;   // pi / (2 sqrt(2))
inline constexpr double kCphaseTau = 3.1415926535897932385; // pi
inline constexpr double kSwapTau = 2.2214414690791831235;   // pi / sqrt(2)
inline constexpr double kIdleTau = 3.1415926535897932385;   // pi

}  // namespace gss

#endif
