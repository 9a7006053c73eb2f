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

#include "cavity.hpp"

#include <cmath>
#include <stdexcept>

namespace gss {

namespace {
using cplx = std::complex<double>;
constexpr double kSqrt2 = 1.4142135623730950488;
}  // namespace

Matrix7 hamiltonian7(DetuningConfig cfg, double g) {
    if (g <= 0.0) throw std::invalid_argument("hamiltonian7: g must be positive");
    Matrix7 h = Matrix7::Zero();
    const bool l_on = cfg == DetuningConfig::ResonantBoth;
    const bool r_on = cfg != DetuningConfig::Off;
    if (l_on) {
        h(kL10, kE00) = g;
        h(kE00, kL10) = g;
    }
    if (r_on) {
        h(kR01, kE00) = g;
        h(kE00, kR01) = g;
    }
    return h;
}

Matrix7 pulse_unitary(const PulseSpec& pulse, double g) {
    if (pulse.duration < 0.0) throw std::invalid_argument("pulse_unitary: negative duration");
    Matrix7 u = Matrix7::Identity();
    switch (pulse.config) {
        case DetuningConfig::Off:
            break;
        case DetuningConfig::ResonantR: {
            // Two-level Rabi rotation in {r01, e00}.
            const double theta = g * pulse.duration;
            const double c = std::cos(theta), s = std::sin(theta);
            u(kR01, kR01) = c;
            u(kE00, kE00) = c;
            u(kR01, kE00) = cplx(0.0, -s);
            u(kE00, kR01) = cplx(0.0, -s);
            break;
        }
        case DetuningConfig::ResonantBoth: {
            // The bright state (|l10> + |r01>)/sqrt(2) couples to |e00> with
            // strength sqrt(2) g; the dark combination is stationary.
            const double theta = kSqrt2 * g * pulse.duration;
            const double c = std::cos(theta), s = std::sin(theta);
            u(kL10, kL10) = 0.5 * (1.0 + c);
            u(kR01, kR01) = 0.5 * (1.0 + c);
            u(kL10, kR01) = 0.5 * (c - 1.0);
            u(kR01, kL10) = 0.5 * (c - 1.0);
            u(kE00, kE00) = c;
            u(kL10, kE00) = cplx(0.0, -s / kSqrt2);
            u(kE00, kL10) = cplx(0.0, -s / kSqrt2);
            u(kR01, kE00) = cplx(0.0, -s / kSqrt2);
            u(kE00, kR01) = cplx(0.0, -s / kSqrt2);
            break;
        }
    }
    return u;
}

PulseGate gate_load(double g) {
    PulseSpec spec{DetuningConfig::ResonantBoth, kLoadTau / g};
    return {spec, pulse_unitary(spec, g)};
}

PulseGate gate_cphase(double g) {
    PulseSpec spec{DetuningConfig::ResonantR, kCphaseTau / g};
    return {spec, pulse_unitary(spec, g)};
}

PulseGate gate_swap(double g) {
    PulseSpec spec{DetuningConfig::ResonantBoth, kSwapTau / g};
    return {spec, pulse_unitary(spec, g)};
}

}  // namespace gss
