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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>
#include <vector>

#include "statevector.hpp"

using namespace gss;

namespace {

StateVector random_state(int n, std::mt19937& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n);
    double n2 = 0.0;
    for (auto& a : amps) {
        a = cplx(dist(rng), dist(rng));
        n2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& a : amps) a *= scale;
    return StateVector(n, std::move(amps));
}

// Independent oracle: builds the full 2^n x 2^n operator by Kronecker
// products and multiplies it out. Deliberately naive.
using Matrix = std::vector<std::vector<cplx>>;

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t ra = a.size(), ca = a[0].size();
    const std::size_t rb = b.size(), cb = b[0].size();
    Matrix out(ra * rb, std::vector<cplx>(ca * cb));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l) out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return out;
}

Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<cplx>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

StateVector matrix_apply(const Matrix& m, const StateVector& s) {
    std::vector<cplx> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) out[i] += m[i][j] * s.amplitude(j);
    return StateVector(s.qubit_count(), std::move(out));
}

const double r = 0.70710678118654752440;
const Matrix kH = {{r, r}, {r, -r}};
const Matrix kX = {{0, 1}, {1, 0}};
const Matrix kZ = {{1, 0}, {0, -1}};

Matrix single_qubit_operator(const Matrix& gate, int target, int n) {
    Matrix out = identity(1);
    for (int q = 0; q < n; ++q) out = kron(out, q == target ? gate : identity(2));
    return out;
}

Matrix two_qubit_operator_cphase(int a, int b, int n) {
    Matrix out = identity(std::size_t{1} << n);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        const bool ba = (idx >> (n - 1 - a)) & 1;
        const bool bb = (idx >> (n - 1 - b)) & 1;
        if (ba && bb) out[idx][idx] = -1.0;
    }
    return out;
}

}  // namespace

TEST_CASE("canonical graph states") {
    SUBCASE("single vertex is |+>") {
        Graph g(1);
        StateVector s = canonical_graph_state(g);
        CHECK(s.amplitude(0).real() == doctest::Approx(r));
        CHECK(s.amplitude(1).real() == doctest::Approx(r));
    }
    SUBCASE("one edge") {
        Graph g(2);
        g.add_edge(0, 1);
        StateVector s = canonical_graph_state(g);
        CHECK(s.amplitude(0).real() == doctest::Approx(0.5));
        CHECK(s.amplitude(1).real() == doctest::Approx(0.5));
        CHECK(s.amplitude(2).real() == doctest::Approx(0.5));
        CHECK(s.amplitude(3).real() == doctest::Approx(-0.5));
    }
    SUBCASE("3-path is GHZ up to end Hadamards") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        StateVector s = canonical_graph_state(g);
        s = apply_gate(s, Gate::H, {QubitId(0)});
        s = apply_gate(s, Gate::H, {QubitId(2)});
        std::vector<cplx> ghz(8, cplx(0.0));
        ghz[0] = r;
        ghz[7] = r;
        CHECK(fidelity(s, StateVector(3, ghz)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gate application") {
    std::mt19937 rng(11);

    SUBCASE("cphase truth value") {
        StateVector s = StateVector::computational_basis(2, 0b11);
        s = apply_gate(s, Gate::CPhase, {QubitId(0), QubitId(1)});
        CHECK(s.amplitude(3).real() == doctest::Approx(-1.0));
    }
    SUBCASE("cphase is an involution") {
        StateVector s = random_state(3, rng);
        StateVector t = apply_gate(s, Gate::CPhase, {QubitId(0), QubitId(2)});
        t = apply_gate(t, Gate::CPhase, {QubitId(0), QubitId(2)});
        CHECK(fidelity(s, t) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("hadamard is an involution") {
        StateVector s = random_state(3, rng);
        StateVector t = apply_gate(s, Gate::H, {QubitId(1)});
        t = apply_gate(t, Gate::H, {QubitId(1)});
        CHECK(fidelity(s, t) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("arity and range violations") {
        StateVector s = StateVector::computational_basis(2, 0);
        CHECK_THROWS_AS(apply_gate(s, Gate::H, {QubitId(0), QubitId(1)}), std::invalid_argument);
        CHECK_THROWS_AS(apply_gate(s, Gate::Swap, {QubitId(0)}), std::invalid_argument);
        CHECK_THROWS_AS(apply_gate(s, Gate::X, {QubitId(5)}), std::invalid_argument);
        CHECK_THROWS_AS(apply_gate(s, Gate::Swap, {QubitId(1), QubitId(1)}), std::invalid_argument);
    }
    SUBCASE("kernels match the dense-matrix oracle") {
        for (int n : {2, 4}) {
            StateVector s = random_state(n, rng);
            for (int t = 0; t < n; ++t) {
                CHECK(fidelity(apply_gate(s, Gate::H, {QubitId(t)}),
                               matrix_apply(single_qubit_operator(kH, t, n), s)) ==
                      doctest::Approx(1.0).epsilon(1e-12));
                CHECK(fidelity(apply_gate(s, Gate::X, {QubitId(t)}),
                               matrix_apply(single_qubit_operator(kX, t, n), s)) ==
                      doctest::Approx(1.0).epsilon(1e-12));
                CHECK(fidelity(apply_gate(s, Gate::Z, {QubitId(t)}),
                               matrix_apply(single_qubit_operator(kZ, t, n), s)) ==
                      doctest::Approx(1.0).epsilon(1e-12));
            }
            StateVector viaGate = apply_gate(s, Gate::CPhase, {QubitId(0), QubitId(n - 1)});
            CHECK(fidelity(viaGate, matrix_apply(two_qubit_operator_cphase(0, n - 1, n), s)) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("swap exchanges basis labels") {
        std::vector<cplx> amps = {cplx(0.1), cplx(0.2), cplx(0.3), cplx(0.4)};
        double n2 = 0.0;
        for (auto& a : amps) n2 += std::norm(a);
        for (auto& a : amps) a /= std::sqrt(n2);
        StateVector s(2, amps);
        StateVector t = apply_gate(s, Gate::Swap, {QubitId(0), QubitId(1)});
        CHECK(t.amplitude(0b01) == s.amplitude(0b10));
        CHECK(t.amplitude(0b10) == s.amplitude(0b01));
        CHECK(t.amplitude(0b00) == s.amplitude(0b00));
        CHECK(t.amplitude(0b11) == s.amplitude(0b11));
    }
}

TEST_CASE("branch map") {
    SUBCASE("parent |0> emits |+>") {
        StateVector s = branch(StateVector::computational_basis(1, 0));
        // register order [new, parent]
        CHECK(s.amplitude(0b00).real() == doctest::Approx(r));
        CHECK(s.amplitude(0b10).real() == doctest::Approx(r));
        CHECK(std::abs(s.amplitude(0b01)) == doctest::Approx(0.0));
        CHECK(std::abs(s.amplitude(0b11)) == doctest::Approx(0.0));
    }
    SUBCASE("parent |1> emits |->") {
        StateVector s = branch(StateVector::computational_basis(1, 1));
        CHECK(s.amplitude(0b01).real() == doctest::Approx(r));
        CHECK(s.amplitude(0b11).real() == doctest::Approx(-r));
    }
    SUBCASE("parent |+> gives the two-qubit graph state") {
        StateVector s = branch(StateVector::plus());
        Graph g(2);
        g.add_edge(0, 1);
        CHECK(fidelity(s, canonical_graph_state(g)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("branch equals append-plus then cphase") {
        std::mt19937 rng(23);
        StateVector s = random_state(3, rng);
        StateVector b = branch(s);
        // oracle: tensor |+> onto the end, swap it before the parent, cphase
        std::vector<cplx> amps(s.dim() * 2);
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (int nb = 0; nb < 2; ++nb) amps[i * 2 + nb] = s.amplitude(i) * r;
        StateVector appended(4, amps);  // [q0 q1 P new]
        appended = apply_gate(appended, Gate::Swap, {QubitId(2), QubitId(3)});
        appended = apply_gate(appended, Gate::CPhase, {QubitId(2), QubitId(3)});
        CHECK(fidelity(b, appended) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("pull-out map") {
    SUBCASE("parent |0>") {
        StateVector s = pull_out(StateVector::computational_basis(1, 0));
        // emitted qubit takes |0>, parent ends in |+>
        CHECK(s.amplitude(0b00).real() == doctest::Approx(r));
        CHECK(s.amplitude(0b01).real() == doctest::Approx(r));
        CHECK(std::abs(s.amplitude(0b10)) == doctest::Approx(0.0));
    }
    SUBCASE("agrees with branch + SWAP and branch + H x H") {
        std::mt19937 rng(37);
        for (int n : {1, 2, 3}) {
            StateVector s = random_state(n, rng);
            StateVector direct = pull_out(s);
            StateVector via_swap =
                apply_gate(branch(s), Gate::Swap, {QubitId(n - 1), QubitId::parent()});
            StateVector via_h = apply_gate(branch(s), Gate::H, {QubitId(n - 1)});
            via_h = apply_gate(via_h, Gate::H, {QubitId::parent()});
            CHECK(fidelity(direct, via_swap) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(fidelity(direct, via_h) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("load then pull-out gives the 3-path graph state") {
        StateVector s = pull_out(branch(StateVector::plus()));
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        CHECK(fidelity(s, canonical_graph_state(g)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("norm preservation") {
    std::mt19937 rng(41);
    StateVector s = random_state(2, rng);
    for (Gate g : {Gate::H, Gate::X, Gate::Z}) {
        CHECK(apply_gate(s, g, {QubitId(0)}).norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(branch(s).norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pull_out(s).norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("z measurement") {
    SUBCASE("|+> measured to empty register") {
        auto m = measure_z(StateVector::plus(), QubitId(0), 0);
        CHECK(m.probability == doctest::Approx(0.5));
        CHECK(m.state.qubit_count() == 0);
    }
    SUBCASE("parent of the 2-qubit graph state") {
        auto m = measure_z(branch(StateVector::plus()), QubitId::parent(), 0);
        CHECK(m.probability == doctest::Approx(0.5));
        CHECK(m.state.amplitude(0).real() == doctest::Approx(r));
        CHECK(m.state.amplitude(1).real() == doctest::Approx(r));
    }
    SUBCASE("outcome probabilities sum to one") {
        std::mt19937 rng(43);
        StateVector s = random_state(4, rng);
        for (int q = 0; q < 4; ++q) {
            auto m0 = measure_z(s, QubitId(q), 0);
            auto m1 = measure_z(s, QubitId(q), 1);
            CHECK(m0.probability + m1.probability == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("zero-probability branch") {
        CHECK_THROWS_AS(measure_z(StateVector::computational_basis(1, 0), QubitId(0), 1),
                        ZeroProbabilityError);
    }
}

TEST_CASE("fidelity") {
    std::mt19937 rng(47);
    StateVector s = random_state(3, rng);
    CHECK(fidelity(s, s) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(StateVector::computational_basis(1, 0), StateVector::computational_basis(1, 1)) ==
          doctest::Approx(0.0));
    CHECK(fidelity(StateVector::computational_basis(1, 0), StateVector::plus()) ==
          doctest::Approx(0.5));
    CHECK_THROWS_AS(fidelity(s, StateVector::plus()), std::invalid_argument);
}

TEST_CASE("ideal schedule runs") {
    SUBCASE("load gives the two-qubit graph state") {
        Schedule sched;
        sched.ops = {{StreamOpKind::Load}};
        auto run = run_schedule_ideal(sched);
        Graph g(2);
        g.add_edge(0, 1);
        CHECK(fidelity(run.state, canonical_graph_state(g)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK_FALSE(run.parent_outcome.has_value());
    }
    SUBCASE("double branch gives the 4-star") {
        Schedule sched;
        sched.ops = {{StreamOpKind::Load}, {StreamOpKind::Branch}, {StreamOpKind::Branch}};
        auto run = run_schedule_ideal(sched);
        StateVector canonical = canonical_graph_state(graph_of_schedule(sched));
        CHECK(fidelity(run.state, canonical) == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("3-qubit path via two pull-outs and measurement") {
        Schedule sched;
        sched.ops = {{StreamOpKind::Load},
                     {StreamOpKind::PullOut},
                     {StreamOpKind::PullOut},
                     {StreamOpKind::MeasureParent}};
        Graph path3(3);
        path3.add_edge(0, 1);
        path3.add_edge(1, 2);
        for (int outcome : {0, 1}) {
            auto run = run_schedule_ideal(sched, StateVector::plus(), outcome);
            REQUIRE(run.parent_outcome == outcome);
            CHECK(run.outcome_probability == doctest::Approx(0.5));
            StateVector state = run.state;
            if (outcome == 1) state = apply_gate(state, Gate::Z, {QubitId(2)});
            CHECK(fidelity(state, canonical_graph_state(path3)) ==
                  doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("qubit permutation") {
    std::mt19937 rng(53);
    StateVector s = random_state(3, rng);
    StateVector t = permute_qubits(s, {2, 0, 1});
    // qubit 0 -> 2, 1 -> 0, 2 -> 1; check amplitudes move accordingly
    for (std::uint64_t idx = 0; idx < s.dim(); ++idx) {
        const std::uint64_t b0 = (idx >> 2) & 1, b1 = (idx >> 1) & 1, b2 = idx & 1;
        const std::uint64_t out = (b1 << 2) | (b2 << 1) | b0;
        CHECK(t.amplitude(out) == s.amplitude(idx));
    }
    CHECK_THROWS_AS(permute_qubits(s, {0, 0, 1}), std::invalid_argument);
}
