#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <vector>

#include "tubular/cutoff.hpp"
#include "tubular/curve.hpp"
#include "tubular/errors.hpp"

namespace tubular {

/// Piecewise blend of the chords of a closed polyline: on piece
/// [(j-1/2)L/k, (j+1/2)L/k] with node A_j at parameter jL/k
/// (j half-integer),
///
///   c(s) = A_j + u chi(u) (A_{j+1} - A_j) - u (1 - chi(u)) (A_{j-1} - A_j),
///   u = ks/L - j in [-1/2, 1/2].
///
/// Near a piece boundary the cutoff is constant, so c reduces to linear
/// interpolation of adjacent nodes and consecutive pieces agree; the result
/// is C-infinity and periodic with period L. Derivatives are evaluated
/// analytically through the jet of u chi(u) (finite differencing is used
/// only as a test oracle).
class SmoothedCurve {
  public:
    SmoothedCurve(std::shared_ptr<const DiscreteCurve> source, CutoffFunction chi)
        : source_(std::move(source)), chi_(chi) {
        const DiscreteCurve& c = *source_;
        if (!c.closed()) throw DomainError("SmoothedCurve: source curve must be closed");
        length_ = c.length();
        if (length_ < 1.0) throw DomainError("SmoothedCurve: need length >= 1");
        double kc = std::ceil(length_);
        k_ = static_cast<long>(std::min(std::max(kc, length_), 2.0 * length_));
        // nodes at (i + 1/2) L/k for i = -1 .. k; the polyline evaluator wraps
        nodes_.resize(static_cast<std::size_t>(k_) + 2);
        for (long i = -1; i <= k_; ++i)
            nodes_[static_cast<std::size_t>(i + 1)] = c.eval((double(i) + 0.5) * length_ / double(k_));
    }

    const DiscreteCurve& source() const { return *source_; }
    std::shared_ptr<const DiscreteCurve> source_ptr() const { return source_; }
    double length() const { return length_; }
    long piece_count() const { return k_; }
    double piece_width() const { return length_ / double(k_); }
    const CutoffFunction& cutoff() const { return chi_; }

    Vec3 eval(double s) const {
        Piece p = piece_at(s);
        double chi = chi_.value(p.u);
        double pw = p.u * chi;
        double qw = -p.u * (1.0 - chi);
        return p.node + pw * p.fwd + qw * p.bwd;
    }

    /// Position and derivatives d^m/ds^m for m = 0..m_max (m_max <= 4).
    std::array<Vec3, 5> eval_derivatives(double s, int m_max = 4) const {
        Piece p = piece_at(s);
        Jet5 u = Jet5::variable(p.u);
        Jet5 chi = chi_.jet(p.u);
        Jet5 pw = u * chi;
        Jet5 qw = pw - u;  // -u (1 - chi)
        std::array<Vec3, 5> out{};
        double scale = 1.0;  // (k/L)^m
        double factorial = 1.0;
        for (int m = 0; m <= m_max; ++m) {
            if (m >= 2) factorial *= m;
            Vec3 v = pw.c[static_cast<std::size_t>(m)] * p.fwd + qw.c[static_cast<std::size_t>(m)] * p.bwd;
            if (m == 0) v += p.node;
            out[static_cast<std::size_t>(m)] = v * (factorial * scale);
            scale *= double(k_) / length_;
        }
        return out;
    }

    Vec3 derivative(double s, int m = 1) const { return eval_derivatives(s, m)[static_cast<std::size_t>(m)]; }

    Vec3 unit_tangent(double s) const { return normalized(derivative(s, 1)); }

  private:
    struct Piece {
        double u;
        Vec3 node, fwd, bwd;  // A_j, A_{j+1} - A_j, A_{j-1} - A_j
    };

    Piece piece_at(double s) const {
        double v = std::fmod(s, length_);
        if (v < 0) v += length_;
        double x = v * double(k_) / length_;
        long m = static_cast<long>(std::floor(x));
        if (m < 0) m = 0;
        if (m >= k_) m = k_ - 1;
        Piece p;
        p.u = x - double(m) - 0.5;
        const Vec3& a = nodes_[static_cast<std::size_t>(m + 1)];
        p.node = a;
        p.fwd = nodes_[static_cast<std::size_t>(m + 2)] - a;
        p.bwd = nodes_[static_cast<std::size_t>(m)] - a;
        return p;
    }

    std::shared_ptr<const DiscreteCurve> source_;
    CutoffFunction chi_;
    double length_ = 0;
    long k_ = 0;
    std::vector<Vec3> nodes_;
};

inline SmoothedCurve smooth(std::shared_ptr<const DiscreteCurve> curve, const CutoffFunction& chi) {
    return SmoothedCurve(std::move(curve), chi);
}

inline SmoothedCurve smooth(const DiscreteCurve& curve, const CutoffFunction& chi) {
    return SmoothedCurve(std::make_shared<DiscreteCurve>(curve), chi);
}

struct ClosenessCertificate {
    double eps = 0.0;
    double c0_dev = 0.0;                 // sup |c - gamma|
    double c1_dev = 0.0;                 // sup |c' - T|
    std::array<double, 3> cm_dev{};     // sup |c^(m)| for m = 2, 3, 4
    int samples = 0;

    bool within(double c_cert) const {
        double bound = c_cert * eps;
        return c0_dev <= bound && c1_dev <= bound && cm_dev[0] <= bound && cm_dev[1] <= bound &&
               cm_dev[2] <= bound;
    }
};

/// Sup-norm deviations between the smoothed curve and its source, by dense
/// sampling (samples_per_piece per blend piece, offset to avoid the exact
/// piece boundaries). Returns raw numbers whether or not the source passes
/// the turning condition.
inline ClosenessCertificate closeness_certificate(const SmoothedCurve& sc, double eps,
                                                  int samples_per_piece = 8) {
    ClosenessCertificate cert;
    cert.eps = eps;
    const DiscreteCurve& src = sc.source();
    const double w = sc.piece_width();
    for (long piece = 0; piece < sc.piece_count(); ++piece) {
        for (int i = 0; i < samples_per_piece; ++i) {
            double s = (double(piece) + (i + 0.5) / samples_per_piece) * w;
            auto d = sc.eval_derivatives(s, 4);
            cert.c0_dev = std::max(cert.c0_dev, dist(d[0], src.eval(s)));
            cert.c1_dev = std::max(cert.c1_dev, dist(d[1], src.tangent(s)));
            for (int m = 2; m <= 4; ++m)
                cert.cm_dev[static_cast<std::size_t>(m - 2)] =
                    std::max(cert.cm_dev[static_cast<std::size_t>(m - 2)], norm(d[static_cast<std::size_t>(m)]));
            ++cert.samples;
        }
    }
    return cert;
}

}  // namespace tubular
