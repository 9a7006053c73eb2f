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

#ifndef GSS_ERRORS_HPP
#define GSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gss {

/// Measurement branch with (numerically) zero probability.
class ZeroProbabilityError : public std::runtime_error {
public:
    explicit ZeroProbabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Step-halving convergence check of the fixed-step integrator failed.
class ToleranceError : public std::runtime_error {
public:
    explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

/// Heralding is impossible: the photon-present block carries no weight.
class HeraldImpossibleError : public std::runtime_error {
public:
    explicit HeraldImpossibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Density-matrix register would exceed the supported size.
class RegisterTooLargeError : public std::runtime_error {
public:
    explicit RegisterTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gss

#endif
