#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tubular/errors.hpp"
#include "tubular/vec3.hpp"

namespace tubular {

/// Closed or open polyline with arc-length parametrization. Evaluation at
/// parameter s walks the chords; for closed curves s is periodic with
/// period length(). Immutable after construction.
class DiscreteCurve {
  public:
    static DiscreteCurve closed_loop(std::vector<Vec3> pts) { return DiscreteCurve(std::move(pts), true); }
    static DiscreteCurve open_path(std::vector<Vec3> pts) { return DiscreteCurve(std::move(pts), false); }

    DiscreteCurve(std::vector<Vec3> pts, bool closed) : points_(std::move(pts)), closed_(closed) {
        const std::size_t n = points_.size();
        if (n < 2) throw DomainError("DiscreteCurve: need at least 2 points");
        if (closed_ && n < 3) throw DomainError("DiscreteCurve: closed curve needs at least 3 points");
        for (const Vec3& p : points_)
            if (!finite(p)) throw DomainError("DiscreteCurve: non-finite coordinate");
        cum_.resize(closed_ ? n + 1 : n);
        cum_[0] = 0.0;
        for (std::size_t i = 1; i < n; ++i) {
            double d = dist(points_[i], points_[i - 1]);
            if (d == 0.0) throw DomainError("DiscreteCurve: consecutive points coincide");
            cum_[i] = cum_[i - 1] + d;
        }
        if (closed_) {
            double d = dist(points_[0], points_[n - 1]);
            if (d == 0.0) throw DomainError("DiscreteCurve: closing chord degenerate");
            cum_[n] = cum_[n - 1] + d;
        }
        length_ = cum_.back();
        if (!(length_ > 0.0)) throw DomainError("DiscreteCurve: zero length");
    }

    bool closed() const { return closed_; }
    double length() const { return length_; }
    const std::vector<Vec3>& points() const { return points_; }
    const std::vector<double>& cumulative_arclength() const { return cum_; }
    std::size_t segment_count() const { return closed_ ? points_.size() : points_.size() - 1; }

    /// Arc-length parameter of vertex i.
    double vertex_param(std::size_t i) const { return cum_[i]; }

    Vec3 segment_start(std::size_t seg) const { return points_[seg]; }
    Vec3 segment_end(std::size_t seg) const { return points_[(seg + 1) % points_.size()]; }
    double segment_length(std::size_t seg) const { return cum_[seg + 1] - cum_[seg]; }

    /// Wrap s into [0, L) for closed curves; reject out-of-range s for open ones.
    double wrap(double s) const {
        if (closed_) {
            double v = std::fmod(s, length_);
            if (v < 0) v += length_;
            // fmod can return length_ itself after the negative fixup
            if (v >= length_) v = 0.0;
            return v;
        }
        if (s < 0.0 || s > length_) throw DomainError("DiscreteCurve: parameter outside open curve range");
        return s;
    }

    /// Index of the segment containing wrapped parameter s, and the offset into it.
    std::size_t locate(double s, double& offset) const {
        double v = wrap(s);
        auto it = std::upper_bound(cum_.begin(), cum_.end(), v);
        std::size_t seg = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - cum_.begin()) - 1));
        if (seg >= segment_count()) seg = segment_count() - 1;
        offset = v - cum_[seg];
        return seg;
    }

    Vec3 eval(double s) const {
        double off;
        std::size_t seg = locate(s, off);
        double len = segment_length(seg);
        double t = off / len;
        return segment_start(seg) + t * (segment_end(seg) - segment_start(seg));
    }

    Vec3 chord_direction(std::size_t seg) const {
        return (segment_end(seg) - segment_start(seg)) / segment_length(seg);
    }

    /// Unit tangent. At a vertex (within float slack of the parameter) the
    /// convention is the normalized bisector of the adjacent chords.
    Vec3 tangent(double s) const {
        double off;
        std::size_t seg = locate(s, off);
        const double vertex_slack = 32.0 * 1e-16 * length_;
        double len = segment_length(seg);
        std::size_t nseg = segment_count();
        if (off <= vertex_slack) {
            // at the start vertex of seg
            if (closed_ || seg > 0) {
                std::size_t prev = (seg + nseg - 1) % nseg;
                return normalized(chord_direction(prev) + chord_direction(seg));
            }
        } else if (len - off <= vertex_slack) {
            if (closed_ || seg + 1 < nseg) {
                std::size_t next = (seg + 1) % nseg;
                return normalized(chord_direction(seg) + chord_direction(next));
            }
        }
        return chord_direction(seg);
    }

    /// Arc-length distance between two parameters (geodesic on the curve).
    double param_distance(double a, double b) const {
        if (!closed_) return std::fabs(b - a);
        double d = std::fabs(wrap(b) - wrap(a));
        return std::min(d, length_ - d);
    }

    Vec3 aabb_min() const {
        Vec3 lo = points_[0];
        for (const Vec3& p : points_) lo = min_componentwise(lo, p);
        return lo;
    }
    Vec3 aabb_max() const {
        Vec3 hi = points_[0];
        for (const Vec3& p : points_) hi = max_componentwise(hi, p);
        return hi;
    }
    double max_segment_length() const {
        double m = 0;
        for (std::size_t i = 0; i < segment_count(); ++i) m = std::max(m, segment_length(i));
        return m;
    }

  private:
    std::vector<Vec3> points_;
    bool closed_;
    std::vector<double> cum_;
    double length_ = 0;
};

// Spec-facing free functions.
inline double arc_length(const DiscreteCurve& c) { return c.length(); }
inline Vec3 eval_point(const DiscreteCurve& c, double s) { return c.eval(s); }
inline Vec3 tangent(const DiscreteCurve& c, double s) { return c.tangent(s); }

inline DiscreteCurve reverse(const DiscreteCurve& c) {
    std::vector<Vec3> pts(c.points().rbegin(), c.points().rend());
    return DiscreteCurve(std::move(pts), c.closed());
}

inline double point_segment_distance2(const Vec3& p, const Vec3& a, const Vec3& b, double& t_out) {
    Vec3 ab = b - a;
    double denom = norm2(ab);
    double t = denom > 0 ? dot(p - a, ab) / denom : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    t_out = t;
    return norm2(p - (a + t * ab));
}

/// Uniform-grid index over curve segments for proximity queries. Cells are
/// keyed by integer coordinates; a segment is registered in every cell its
/// AABB touches.
class CurveLocator {
  public:
    explicit CurveLocator(const DiscreteCurve& curve) : curve_(&curve) {
        Vec3 lo = curve.aabb_min(), hi = curve.aabb_max();
        origin_ = lo;
        double diag = dist(lo, hi);
        cell_ = std::max(curve.max_segment_length(), diag / 512.0);
        if (cell_ <= 0) cell_ = 1.0;
        for (std::size_t seg = 0; seg < curve.segment_count(); ++seg) {
            Vec3 a = curve.segment_start(seg), b = curve.segment_end(seg);
            insert_box(min_componentwise(a, b), max_componentwise(a, b), static_cast<int>(seg));
        }
    }

    struct Hit {
        double distance;
        double param;    // arc-length parameter of closest point
        int segment;
        Vec3 point;
    };

    /// Closest curve point within `radius` of p, or nullopt if none.
    std::optional<Hit> nearest_within(const Vec3& p, double radius) const {
        // a point within `radius` of a segment is within radius+cell of a cell the segment touches
        double best2 = radius * radius;
        Hit best{};
        bool found = false;
        visit_cells(p, radius, [&](int seg) {
            double t;
            double d2 = point_segment_distance2(p, curve_->segment_start(seg), curve_->segment_end(seg), t);
            if (d2 <= best2) {
                best2 = d2;
                best.distance = std::sqrt(d2);
                best.segment = seg;
                best.param = curve_->vertex_param(seg) + t * curve_->segment_length(seg);
                best.point = curve_->segment_start(seg) + t * (curve_->segment_end(seg) - curve_->segment_start(seg));
                found = true;
            }
        });
        if (!found) return std::nullopt;
        return best;
    }

    /// Deduplicated segment indices near p, in increasing order.
    std::vector<int> segments_near(const Vec3& p, double radius) const {
        std::vector<int> out;
        visit_cells(p, radius, [&](int seg) { out.push_back(seg); });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const DiscreteCurve& curve() const { return *curve_; }

  private:
    struct CellKey {
        std::int64_t v;
        bool operator==(const CellKey& o) const { return v == o.v; }
    };
    struct CellHash {
        std::size_t operator()(const CellKey& k) const { return std::hash<std::int64_t>()(k.v); }
    };

    CellKey key(std::int64_t i, std::int64_t j, std::int64_t k) const {
        // pack with large strides; instances stay far below 2^20 cells per axis
        return CellKey{(i * 0x100003LL + j) * 0x100003LL + k};
    }
    std::int64_t coord(double x, double o) const { return static_cast<std::int64_t>(std::floor((x - o) / cell_)); }

    void insert_box(const Vec3& lo, const Vec3& hi, int seg) {
        for (std::int64_t i = coord(lo.x, origin_.x); i <= coord(hi.x, origin_.x); ++i)
            for (std::int64_t j = coord(lo.y, origin_.y); j <= coord(hi.y, origin_.y); ++j)
                for (std::int64_t k = coord(lo.z, origin_.z); k <= coord(hi.z, origin_.z); ++k)
                    cells_[key(i, j, k)].push_back(seg);
    }

    template <class F>
    void visit_cells(const Vec3& p, double radius, F&& f) const {
        Vec3 lo = p - Vec3(radius, radius, radius), hi = p + Vec3(radius, radius, radius);
        for (std::int64_t i = coord(lo.x, origin_.x); i <= coord(hi.x, origin_.x); ++i)
            for (std::int64_t j = coord(lo.y, origin_.y); j <= coord(hi.y, origin_.y); ++j)
                for (std::int64_t k = coord(lo.z, origin_.z); k <= coord(hi.z, origin_.z); ++k) {
                    auto it = cells_.find(key(i, j, k));
                    if (it == cells_.end()) continue;
                    for (int seg : it->second) f(seg);
                }
    }

    const DiscreteCurve* curve_;
    Vec3 origin_;
    double cell_;
    std::unordered_map<CellKey, std::vector<int>, CellHash> cells_;
};

}  // namespace tubular
