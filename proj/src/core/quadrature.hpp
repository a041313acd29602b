// Copyright 2026 the rcheom developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RCHEOM_CORE_QUADRATURE_HPP
#define RCHEOM_CORE_QUADRATURE_HPP

#include <functional>

#include "core/bath.hpp"
#include "core/types.hpp"

namespace rcheom {

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;
    bool converged = false;
    long evaluations = 0;
};

// Adaptive Gauss-Legendre (10/21 point pair) on a finite interval.
QuadResult integrate_adaptive(const std::function<cplx(double)>& f,
                              double a, double b,
                              double abs_tol, double rel_tol,
                              int max_depth = 48);

// Cauchy principal value of (1/pi) int J(w')/(w' - w) dw' over the support
// of J. Symmetric excision around the pole with Richardson extrapolation in
// the window half-width when the pole lies inside the support.
double principal_value(const SpectralDensity& j, double omega,
                       double rel_tol = 1e-9);

} // namespace rcheom

#endif
