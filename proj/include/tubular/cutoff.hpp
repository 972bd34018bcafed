#pragma once

#include <cmath>

#include "tubular/jet.hpp"

namespace tubular {

/// C-infinity monotone step: 0 on (-inf, -1/4], 1 on [1/4, inf), built from
/// the exp(-1/x) bump as chi(u) = f(x)/(f(x) + f(1-x)) with x = 2u + 1/2.
/// Symmetric, so chi(0) = 1/2 exactly. All derivatives vanish outside
/// (-1/4, 1/4).
class CutoffFunction {
  public:
    static constexpr int kMaxDerivative = 4;

    Jet5 jet(double u) const {
        // exp(-1/x) underflows to exactly 0 for x below ~1/745; cut slightly
        // inside the support so the reciprocal never divides by zero.
        constexpr double kEdge = 0.25 - 1e-5;
        if (u <= -kEdge) return Jet5::constant(0.0);
        if (u >= kEdge) return Jet5::constant(1.0);
        Jet5 x = Jet5::variable(u) * 2.0 + Jet5::constant(0.5);
        Jet5 fx = exp(-recip(x));
        Jet5 fmx = exp(-recip(1.0 - x));
        return fx / (fx + fmx);
    }

    double value(double u) const {
        constexpr double kEdge = 0.25 - 1e-5;
        if (u <= -kEdge) return 0.0;
        if (u >= kEdge) return 1.0;
        double x = 2.0 * u + 0.5;
        double fx = std::exp(-1.0 / x);
        double fmx = std::exp(-1.0 / (1.0 - x));
        return fx / (fx + fmx);
    }

    double derivative(double u, int m) const { return jet(u).derivative(m); }
};

inline CutoffFunction make_cutoff() { return CutoffFunction{}; }

}  // namespace tubular
