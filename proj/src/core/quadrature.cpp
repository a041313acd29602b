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

#include "core/quadrature.hpp"

#include <cmath>
#include <vector>

namespace rcheom {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
struct GLRule {
    std::vector<double> x, w;
};

GLRule make_gl(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

const GLRule& gl10() { static const GLRule r = make_gl(10); return r; }
const GLRule& gl21() { static const GLRule r = make_gl(21); return r; }

cplx apply_rule(const GLRule& r, const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx s = 0;
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(c + h * r.x[i]);
    return s * h;
}

struct Panel {
    double a, b;
    cplx coarse, fine;
    double err;
};

Panel eval_panel(const std::function<cplx(double)>& f, double a, double b) {
    Panel p;
    p.a = a;
    p.b = b;
    p.coarse = apply_rule(gl10(), f, a, b);
    p.fine = apply_rule(gl21(), f, a, b);
    p.err = std::abs(p.fine - p.coarse);
    return p;
}

} // namespace

QuadResult integrate_adaptive(const std::function<cplx(double)>& f,
                              double a, double b,
                              double abs_tol, double rel_tol,
                              int max_depth) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    struct Item {
        Panel p;
        int depth;
    };
    std::vector<Item> stack;
    stack.push_back({eval_panel(f, a, b), 0});
    res.evaluations += 31;
    cplx total = 0;
    double err_total = 0;
    double value_estimate = std::abs(stack.back().p.fine);
    bool depth_exhausted = false;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const double local_tol =
            std::max(abs_tol, rel_tol * value_estimate) * (it.p.b - it.p.a) / (b - a);
        if (it.p.err <= std::max(local_tol, 1e-16 * std::abs(it.p.fine)) ||
            it.depth >= max_depth) {
            if (it.depth >= max_depth && it.p.err > local_tol) depth_exhausted = true;
            total += it.p.fine;
            err_total += it.p.err;
            continue;
        }
        const double m = 0.5 * (it.p.a + it.p.b);
        stack.push_back({eval_panel(f, it.p.a, m), it.depth + 1});
        stack.push_back({eval_panel(f, m, it.p.b), it.depth + 1});
        res.evaluations += 62;
        value_estimate = std::max(value_estimate, std::abs(total));
    }
    res.value = total;
    res.error = err_total;
    res.converged = !depth_exhausted &&
                    err_total <= 10 * std::max(abs_tol, rel_tol * std::abs(total)) + 1e-300;
    return res;
}

namespace {

// Integral of J(w')/(w' - w) over [a, b] not containing w, with geometric
// panel refinement toward the end nearest to the pole.
cplx pole_adapted_integral(const SpectralDensity& j, double omega,
                           double a, double b, double rel_tol, double& err) {
    auto f = [&](double wp) { return cplx(j.eval(wp) / (wp - omega), 0.0); };
    // split geometrically away from the pole side
    std::vector<double> cuts;
    cuts.push_back(a);
    const bool pole_left = std::abs(a - omega) < std::abs(b - omega);
    if (pole_left) {
        double d = std::abs(a - omega);
        double x = a;
        while (x + d < b && cuts.size() < 60) {
            x += d;
            cuts.push_back(x);
            d *= 2;
        }
    } else {
        double d = std::abs(b - omega);
        double x = b;
        std::vector<double> rev;
        while (x - d > a && rev.size() < 60) {
            x -= d;
            rev.push_back(x);
            d *= 2;
        }
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) cuts.push_back(*it);
    }
    cuts.push_back(b);
    cplx total = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        QuadResult q = integrate_adaptive(f, cuts[i], cuts[i + 1], 1e-14, rel_tol);
        total += q.value;
        err += q.error;
    }
    return total;
}

double excised_pv(const SpectralDensity& j, double omega, double h,
                  double lo, double hi, double rel_tol, double& err) {
    cplx left = 0, right = 0;
    if (omega - h > lo) left = pole_adapted_integral(j, omega, lo, omega - h, rel_tol, err);
    if (omega + h < hi) right = pole_adapted_integral(j, omega, omega + h, hi, rel_tol, err);
    return (left + right).real();
}

} // namespace

double principal_value(const SpectralDensity& j, double omega, double rel_tol) {
    const double s = j.scale();
    double lo = j.support_min();
    double hi = j.support_max();
    // truncate infinite supports; the integrand decays at least like 1/w'^3
    const double far = 1e6 * std::max(s, std::abs(omega));
    lo = std::max(lo, -far);
    hi = std::min(hi, far);

    double err = 0;
    const bool inside = (omega > lo && omega < hi);
    double value;
    if (!inside) {
        value = pole_adapted_integral(j, omega, lo, hi, rel_tol, err).real();
    } else {
        const double margin = std::min(omega - lo, hi - omega);
        const double h = std::min(1e-6 * s, 0.5 * margin);
        const double e_h = excised_pv(j, omega, h, lo, hi, rel_tol, err);
        const double e_h2 = excised_pv(j, omega, 0.5 * h, lo, hi, rel_tol, err);
        value = 2.0 * e_h2 - e_h; // cancels the O(h) excision error
    }
    const double ref = std::max(std::abs(value), j.eval(omega) + 1e-300);
    if (err > 1e3 * rel_tol * ref + 1e-12)
        throw solver_error("principal_value: quadrature did not reach tolerance at omega=" +
                           std::to_string(omega));
    return value / M_PI;
}

} // namespace rcheom
