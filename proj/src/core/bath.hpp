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

#ifndef RCHEOM_CORE_BATH_HPP
#define RCHEOM_CORE_BATH_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace rcheom {

enum class Statistics { Fermion, Boson };

struct BathSpec {
    Statistics statistics = Statistics::Fermion;
    double beta = 1.0;   // inverse temperature
    double mu = 0.0;     // chemical potential (fermions)
};

// Thermal occupation factors; defined for complex argument because the
// exponent decompositions evaluate them at poles off the real axis.
cplx fermi_dirac(cplx omega, const BathSpec& spec);
cplx bose_einstein(cplx omega, const BathSpec& spec);

enum class SpectralKind { Lorentzian, UnderdampedBrownian, FlatLorentzCutoff, Tabulated };

// Bath coupling density J(omega) >= 0 on its support.
//
//   Lorentzian:          G W^2 / ((w - mu_c)^2 + W^2), support R
//   UnderdampedBrownian: gam lam^2 w / ((w^2 - w0^2)^2 + gam^2 w^2), support R+
//   FlatLorentzCutoff:   2 W_h Delta^2 / (w^2 + Delta^2), support R
//   Tabulated:           linear interpolation on a grid, 0 outside
class SpectralDensity {
public:
    static SpectralDensity lorentzian(double strength, double center, double width);
    static SpectralDensity brownian(double strength, double width, double resonance);
    static SpectralDensity flat_lorentz_cutoff(double height_scale, double cutoff_width);
    static SpectralDensity tabulated(std::vector<double> grid, std::vector<double> values);

    SpectralKind kind() const { return kind_; }
    double eval(double omega) const;

    bool full_line() const;           // support is all of R
    double support_min() const;       // -inf encoded as -huge
    double support_max() const;
    double scale() const;             // characteristic frequency scale

    // parameter access (only meaningful for the matching kind)
    double strength() const { return p1_; }
    double center() const { return p2_; }
    double width() const { return p3_; }
    double brownian_lambda() const { return p1_; }
    double brownian_gamma() const { return p2_; }
    double brownian_omega0() const { return p3_; }
    double flat_height() const { return p1_; }
    double flat_cutoff() const { return p2_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    std::string describe() const;

private:
    SpectralKind kind_ = SpectralKind::Lorentzian;
    double p1_ = 0, p2_ = 0, p3_ = 0;
    std::vector<double> grid_, values_;
};

} // namespace rcheom

#endif
