#ifndef REPEATERLAB_ODE_HPP
#define REPEATERLAB_ODE_HPP

#include <algorithm>
#include <cmath>

#include "repeaterlab/errors.hpp"

namespace repeaterlab {

/// Dormand-Prince 5(4) step controller, templated on an Eigen-style
/// state type (needs +, scalar *, norm()).
///
/// integrate_to advances the state from t0 to t1 with embedded error
/// control; a nonpositive rel_tol switches to fixed steps of size h_init.
template <class State, class Rhs>
class DormandPrince {
public:
    DormandPrince(Rhs rhs, double rel_tol, double abs_tol)
        : rhs_(rhs), rel_tol_(rel_tol), abs_tol_(abs_tol) {}

    void integrate_to(State& y, double t0, double t1, double h_init) {
        double t = t0;
        double h = std::min(h_init, t1 - t0);
        int rejected_in_a_row = 0;
        while (t < t1) {
            h = std::min(h, t1 - t);
            State y5, y4;
            step(y, t, h, y5, y4);
            if (rel_tol_ <= 0.0) {
                y = y5;
                t += h;
                continue;
            }
            const double scale = abs_tol_ + rel_tol_ * std::max(y.norm(), y5.norm());
            const double err = (y5 - y4).norm() / scale;
            if (err <= 1.0) {
                y = y5;
                t += h;
                rejected_in_a_row = 0;
                h *= std::min(5.0, 0.9 * std::pow(std::max(err, 1e-10), -0.2));
            } else {
                h *= std::max(0.1, 0.9 * std::pow(err, -0.2));
                if (++rejected_in_a_row > 60)
                    throw NonConvergenceError("step size underflow in adaptive integration");
            }
            if (!(h > 0.0) || t + h == t)
                throw NonConvergenceError("step size underflow in adaptive integration");
        }
    }

private:
    void step(const State& y, double t, double h, State& y5, State& y4) const {
        const State k1 = rhs_(t, y);
        const State k2 = rhs_(t + h * (1.0 / 5), y + (h * (1.0 / 5)) * k1);
        const State k3 = rhs_(t + h * (3.0 / 10), y + h * ((3.0 / 40) * k1 + (9.0 / 40) * k2));
        const State k4 = rhs_(t + h * (4.0 / 5),
                              y + h * ((44.0 / 45) * k1 - (56.0 / 15) * k2 + (32.0 / 9) * k3));
        const State k5 =
            rhs_(t + h * (8.0 / 9),
                 y + h * ((19372.0 / 6561) * k1 - (25360.0 / 2187) * k2 + (64448.0 / 6561) * k3 -
                          (212.0 / 729) * k4));
        const State k6 =
            rhs_(t + h, y + h * ((9017.0 / 3168) * k1 - (355.0 / 33) * k2 + (46732.0 / 5247) * k3 +
                                 (49.0 / 176) * k4 - (5103.0 / 18656) * k5));
        y5 = y + h * ((35.0 / 384) * k1 + (500.0 / 1113) * k3 + (125.0 / 192) * k4 -
                      (2187.0 / 6784) * k5 + (11.0 / 84) * k6);
        const State k7 = rhs_(t + h, y5);
        y4 = y + h * ((5179.0 / 57600) * k1 + (7571.0 / 16695) * k3 + (393.0 / 640) * k4 -
                      (92097.0 / 339200) * k5 + (187.0 / 2100) * k6 + (1.0 / 40) * k7);
    }

    Rhs rhs_;
    double rel_tol_;
    double abs_tol_;
};

} // namespace repeaterlab

#endif
