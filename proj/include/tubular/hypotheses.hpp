#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tubular/curve.hpp"
#include "tubular/mesh.hpp"

namespace tubular {

struct TurningReport {
    double max_deviation = 0.0;
    bool ok = false;
    double eps = 0.0;
    double window = 0.0;
};

/// Bounded-turning check: max over sampled parameter pairs (x, y) with
/// dist along the curve <= window of |T(x) - T(y)|. Base points are placed
/// every 1/32 unit of arc length; pair offsets are multiples of the same
/// step, so enlarging the window only ever adds pairs (the check is
/// monotone in window by construction).
inline TurningReport check_turning_condition(const DiscreteCurve& curve, double eps, double window) {
    if (!(eps > 0.0)) throw DomainError("check_turning_condition: eps must be positive");
    if (!(window > 0.0)) throw DomainError("check_turning_condition: window must be positive");

    constexpr double kStep = 1.0 / 32.0;
    const double L = curve.length();
    double max_offset = curve.closed() ? std::min(window, L / 2.0) : std::min(window, L);

    std::vector<double> offsets;
    for (double d = kStep; d <= max_offset + 1e-15; d += kStep) offsets.push_back(d);
    if (offsets.empty()) offsets.push_back(max_offset);

    const std::size_t n_base = std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(L / kStep)));
    const double base_step = L / double(n_base);

    // cache base tangents; offset tangents are re-evaluated (offsets are not
    // multiples of base_step in general)
    double worst = 0.0;
    for (std::size_t i = 0; i < n_base; ++i) {
        double s = double(i) * base_step;
        if (!curve.closed() && s > L) break;
        Vec3 t0 = curve.tangent(s);
        for (double d : offsets) {
            double s2 = s + d;
            if (!curve.closed() && s2 > L) break;
            worst = std::max(worst, norm(curve.tangent(s2) - t0));
        }
    }
    return TurningReport{worst, worst <= eps, eps, window};
}

struct CheckResult {
    bool ok = false;
    double value = 0.0;
    double bound = 0.0;
};

struct HypothesisReport {
    bool eps_in_theorem_range = false;  // 0 < eps < 1/10000; reported, not gating
    TurningReport turning;
    CheckResult length_check;           // Length(curve0) >= 1
    CheckResult area_check;             // Area(sigma) <= eps^2
    bool boundary_match = false;
    double boundary_max_distance = 0.0;
    int loop_for_curve0 = -1, loop_for_curve1 = -1;

    // audits of proved consequences; "consistent" means the corollary is not
    // numerically contradicted by a hypothesis-passing instance
    bool cor22_length_ge_100 = false;
    bool cor22_consistent = false;
    double cor23_worst_chord = 0.0;  // smallest endpoint gap among sampled sub-segments in [1, 50)
    bool cor23_consistent = false;

    bool hypotheses_pass = false;  // turning && length && boundary && area
};

namespace detail {

inline double loop_to_curve_max_distance(const TriMesh& mesh, const std::vector<int>& loop,
                                         const CurveLocator& locator, double cap) {
    double worst = 0.0;
    for (int v : loop) {
        auto hit = locator.nearest_within(mesh.vertices()[v], cap);
        double d = hit ? hit->distance : cap;
        worst = std::max(worst, d);
        if (worst >= cap) return cap;
    }
    return worst;
}

}  // namespace detail

/// Theorem hypothesis checker plus instance audits of the two length
/// corollaries. Boundary loops are matched to curves by nearest sampled
/// distance; if both loops land on the same curve the instance is
/// structurally broken and this throws.
inline HypothesisReport check_hypotheses(const DiscreteCurve& curve0, const DiscreteCurve& curve1,
                                         const AnnulusSurface& sigma, double eps,
                                         double tol_boundary_rel = 1e-9) {
    if (!(eps > 0.0) || eps >= 1.0) throw DomainError("check_hypotheses: eps must lie in (0, 1)");

    HypothesisReport rep;
    rep.eps_in_theorem_range = eps < 1e-4;
    rep.turning = check_turning_condition(curve0, eps, 1.0);

    const double L0 = curve0.length();
    rep.length_check = {L0 >= 1.0, L0, 1.0};
    rep.area_check = {sigma.area <= eps * eps, sigma.area, eps * eps};

    // match the two boundary loops to the two curves
    const double tol = tol_boundary_rel * L0;
    const double probe_cap = 0.25 * (L0 + curve1.length());
    CurveLocator loc0(curve0), loc1(curve1);
    const auto& loops = sigma.mesh.boundary_loops();
    double d00 = detail::loop_to_curve_max_distance(sigma.mesh, loops[0], loc0, probe_cap);
    double d01 = detail::loop_to_curve_max_distance(sigma.mesh, loops[0], loc1, probe_cap);
    double d10 = detail::loop_to_curve_max_distance(sigma.mesh, loops[1], loc0, probe_cap);
    double d11 = detail::loop_to_curve_max_distance(sigma.mesh, loops[1], loc1, probe_cap);
    const bool loop0_prefers_curve0 = d00 < d01;
    const bool loop1_prefers_curve0 = d10 < d11;
    if (loop0_prefers_curve0 == loop1_prefers_curve0 && (d00 != d01 || d10 != d11))
        throw StructuralError("check_hypotheses: both boundary loops match the same curve");
    bool straight = loop0_prefers_curve0 || std::max(d00, d11) <= std::max(d01, d10);
    rep.loop_for_curve0 = straight ? 0 : 1;
    rep.loop_for_curve1 = straight ? 1 : 0;
    rep.boundary_max_distance = straight ? std::max(d00, d11) : std::max(d01, d10);
    rep.boundary_match = rep.boundary_max_distance <= tol;

    rep.hypotheses_pass =
        rep.turning.ok && rep.length_check.ok && rep.area_check.ok && rep.boundary_match;

    // Audit: hypotheses imply Length >= 100, up to discretization slack.
    rep.cor22_length_ge_100 = L0 >= 100.0 * (1.0 - 1e-9);
    rep.cor22_consistent = rep.cor22_length_ge_100 || !rep.hypotheses_pass;

    // Audit: a sub-segment of length in [1, 50) never has endpoint gap <= 10*eps.
    rep.cor23_worst_chord = std::numeric_limits<double>::infinity();
    bool violated = false;
    if (curve0.closed()) {
        const double lens[] = {1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0, 34.0, 49.5};
        const int n_starts = 256;
        for (double len : lens) {
            if (len > L0 / 2.0) break;
            for (int i = 0; i < n_starts; ++i) {
                double t = L0 * double(i) / n_starts;
                double gap = dist(curve0.eval(t), curve0.eval(t + len));
                rep.cor23_worst_chord = std::min(rep.cor23_worst_chord, gap);
                if (gap <= 10.0 * eps) violated = true;
            }
        }
    }
    rep.cor23_consistent = !violated || !rep.hypotheses_pass;
    return rep;
}

}  // namespace tubular
