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

#include "core/bath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rcheom {

namespace {
constexpr double kHuge = std::numeric_limits<double>::max() / 4;
}

cplx fermi_dirac(cplx omega, const BathSpec& spec) {
    const cplx x = spec.beta * (omega - spec.mu);
    // guard against overflow for large real parts
    if (x.real() > 700.0) return std::exp(-x);
    if (x.real() < -700.0) return 1.0 - std::exp(x);
    return 1.0 / (std::exp(x) + 1.0);
}

cplx bose_einstein(cplx omega, const BathSpec& spec) {
    const cplx x = spec.beta * omega;
    if (x.real() > 700.0) return std::exp(-x);
    return 1.0 / (std::exp(x) - 1.0);
}

SpectralDensity SpectralDensity::lorentzian(double strength, double center, double width) {
    if (strength < 0 || width <= 0)
        throw config_error("Lorentzian spectral density requires strength >= 0, width > 0");
    SpectralDensity j;
    j.kind_ = SpectralKind::Lorentzian;
    j.p1_ = strength; j.p2_ = center; j.p3_ = width;
    return j;
}

SpectralDensity SpectralDensity::brownian(double strength, double width, double resonance) {
    if (strength < 0 || width <= 0 || resonance <= 0)
        throw config_error("Brownian spectral density requires strength >= 0, width > 0, resonance > 0");
    SpectralDensity j;
    j.kind_ = SpectralKind::UnderdampedBrownian;
    j.p1_ = strength; j.p2_ = width; j.p3_ = resonance;
    return j;
}

SpectralDensity SpectralDensity::flat_lorentz_cutoff(double height_scale, double cutoff_width) {
    if (height_scale < 0 || cutoff_width <= 0)
        throw config_error("FlatLorentzCutoff requires height >= 0, cutoff width > 0");
    SpectralDensity j;
    j.kind_ = SpectralKind::FlatLorentzCutoff;
    j.p1_ = height_scale; j.p2_ = cutoff_width;
    return j;
}

SpectralDensity SpectralDensity::tabulated(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() < 2 || grid.size() != values.size())
        throw config_error("tabulated spectral density needs matching grid/value lists, size >= 2");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw config_error("tabulated spectral density grid must be sorted");
    SpectralDensity j;
    j.kind_ = SpectralKind::Tabulated;
    j.grid_ = std::move(grid);
    j.values_ = std::move(values);
    return j;
}

double SpectralDensity::eval(double w) const {
    switch (kind_) {
    case SpectralKind::Lorentzian: {
        const double d = w - p2_;
        return p1_ * p3_ * p3_ / (d * d + p3_ * p3_);
    }
    case SpectralKind::UnderdampedBrownian: {
        if (w <= 0) return 0.0;
        const double lam = p1_, gam = p2_, w0 = p3_;
        const double a = w * w - w0 * w0;
        return gam * lam * lam * w / (a * a + gam * gam * w * w);
    }
    case SpectralKind::FlatLorentzCutoff: {
        const double D = p2_;
        return 2.0 * p1_ * D * D / (w * w + D * D);
    }
    case SpectralKind::Tabulated: {
        if (w <= grid_.front() || w >= grid_.back()) {
            if (w == grid_.front()) return values_.front();
            if (w == grid_.back()) return values_.back();
            return 0.0;
        }
        auto it = std::upper_bound(grid_.begin(), grid_.end(), w);
        const size_t i = static_cast<size_t>(it - grid_.begin());
        const double t = (w - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
        return values_[i - 1] * (1.0 - t) + values_[i] * t;
    }
    }
    return 0.0;
}

bool SpectralDensity::full_line() const {
    return kind_ == SpectralKind::Lorentzian || kind_ == SpectralKind::FlatLorentzCutoff;
}

double SpectralDensity::support_min() const {
    switch (kind_) {
    case SpectralKind::Lorentzian:
    case SpectralKind::FlatLorentzCutoff: return -kHuge;
    case SpectralKind::UnderdampedBrownian: return 0.0;
    case SpectralKind::Tabulated: return grid_.front();
    }
    return -kHuge;
}

double SpectralDensity::support_max() const {
    switch (kind_) {
    case SpectralKind::UnderdampedBrownian: return kHuge;
    case SpectralKind::Tabulated: return grid_.back();
    default: return kHuge;
    }
}

double SpectralDensity::scale() const {
    switch (kind_) {
    case SpectralKind::Lorentzian: return std::max(p3_, std::abs(p2_) + p3_);
    case SpectralKind::UnderdampedBrownian: return p3_;
    case SpectralKind::FlatLorentzCutoff: return p2_;
    case SpectralKind::Tabulated: return std::max(std::abs(grid_.front()), std::abs(grid_.back()));
    }
    return 1.0;
}

std::string SpectralDensity::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case SpectralKind::Lorentzian:
        os << "Lorentzian(strength=" << p1_ << ", center=" << p2_ << ", width=" << p3_ << ")";
        break;
    case SpectralKind::UnderdampedBrownian:
        os << "UnderdampedBrownian(lambda=" << p1_ << ", gamma=" << p2_ << ", omega0=" << p3_ << ")";
        break;
    case SpectralKind::FlatLorentzCutoff:
        os << "FlatLorentzCutoff(height=" << p1_ << ", cutoff=" << p2_ << ")";
        break;
    case SpectralKind::Tabulated:
        os << "Tabulated(" << grid_.size() << " points, [" << grid_.front() << ", " << grid_.back() << "])";
        break;
    }
    return os.str();
}

} // namespace rcheom
