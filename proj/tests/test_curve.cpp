#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "tubular/curve.hpp"
#include "tubular/rng.hpp"

using namespace tubular;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Vec3> circle_points(double radius, std::size_t n, double phase = 0.0, double z = 0.0) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = phase + 2.0 * kPi * double(i) / double(n);
        pts.push_back({radius * std::cos(a), radius * std::sin(a), z});
    }
    return pts;
}

DiscreteCurve unit_square() {
    return DiscreteCurve::closed_loop({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
}

}  // namespace

TEST_CASE("arc length of a single chord") {
    auto seg = DiscreteCurve::open_path({{0, 0, 0}, {1, 0, 0}});
    REQUIRE(arc_length(seg) == 1.0);
}

TEST_CASE("arc length of inscribed polygons matches the closed form") {
    // closed-form oracle: a regular n-gon inscribed in a circle of radius r
    // has perimeter 2 n r sin(pi/n)
    {
        auto gon = DiscreteCurve::closed_loop(circle_points(1.0, 1000));
        double expected = 2.0 * 1000.0 * std::sin(kPi / 1000.0);
        REQUIRE(arc_length(gon) == Catch::Approx(expected).epsilon(1e-12));
    }
    {
        auto gon = DiscreteCurve::closed_loop(circle_points(50.0, 100000));
        REQUIRE(arc_length(gon) == Catch::Approx(2.0 * kPi * 50.0).epsilon(1e-4));
    }
}

TEST_CASE("point evaluation") {
    auto seg = DiscreteCurve::open_path({{0, 0, 0}, {1, 0, 0}});
    Vec3 mid = eval_point(seg, 0.5);
    REQUIRE(mid == Vec3{0.5, 0, 0});
    REQUIRE(eval_point(seg, 0.0) == seg.points()[0]);
    REQUIRE_THROWS_AS(eval_point(seg, 1.5), DomainError);

    auto square = unit_square();
    REQUIRE(square.length() == 4.0);
    REQUIRE(eval_point(square, 5.0) == eval_point(square, 1.0));

    auto gon = DiscreteCurve::closed_loop(circle_points(50.0, 10000));
    double quarter_sag = 50.0 * (1.0 - std::cos(kPi / 10000.0)) + 1e-6;
    REQUIRE(dist(eval_point(gon, gon.length() / 4.0), Vec3{0, 50, 0}) < 10.0 * quarter_sag + 1e-4);
}

TEST_CASE("closed-curve evaluation is periodic (exact parameters)") {
    auto square = unit_square();
    for (double s : {0.0, 0.25, 1.0, 1.5, 2.0, 3.75}) {
        REQUIRE(eval_point(square, s + square.length()) == eval_point(square, s));
        REQUIRE(eval_point(square, s - square.length()) == eval_point(square, s));
    }
}

TEST_CASE("tangent conventions") {
    auto seg = DiscreteCurve::open_path({{0, 0, 0}, {2, 0, 0}, {4, 0, 0}});
    REQUIRE(tangent(seg, 0.7) == Vec3{1, 0, 0});
    REQUIRE(tangent(seg, 3.1) == Vec3{1, 0, 0});

    auto square = unit_square();
    Vec3 corner = tangent(square, 1.0);  // corner (1,0): +x chord meets +y chord
    double r = 1.0 / std::sqrt(2.0);
    REQUIRE(norm(corner) == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(corner.x == Catch::Approx(r).margin(1e-15));
    REQUIRE(corner.y == Catch::Approx(r).margin(1e-15));

    auto gon = DiscreteCurve::closed_loop(circle_points(1.0, 10000));
    for (int i = 0; i < 100; ++i) {
        double s = gon.length() * (double(i) + 0.37) / 100.0;
        Vec3 p = eval_point(gon, s);
        Vec3 radial = normalized(Vec3{p.x, p.y, 0});
        REQUIRE(std::fabs(dot(tangent(gon, s), radial)) <= 1e-3);
    }
}

TEST_CASE("reverse preserves arc length exactly") {
    auto gon = DiscreteCurve::closed_loop(circle_points(3.0, 277));
    REQUIRE(arc_length(reverse(gon)) == arc_length(gon));
    auto seg = DiscreteCurve::open_path({{0, 0, 0}, {0.3, 1, 0}, {2, 2, 1}});
    REQUIRE(arc_length(reverse(seg)) == arc_length(seg));
}

TEST_CASE("constructor rejections") {
    REQUIRE_THROWS_AS(DiscreteCurve::open_path({{0, 0, 0}}), DomainError);
    REQUIRE_THROWS_AS(DiscreteCurve::open_path({{0, 0, 0}, {0, 0, 0}}), DomainError);
    REQUIRE_THROWS_AS(DiscreteCurve::closed_loop({{0, 0, 0}, {1, 0, 0}}), DomainError);
}

TEST_CASE("curve locator agrees with brute force") {
    auto gon = DiscreteCurve::closed_loop(circle_points(5.0, 400));
    CurveLocator locator(gon);
    Rng rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        Vec3 p{rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-1, 1)};
        double best = 1e300;
        for (std::size_t seg = 0; seg < gon.segment_count(); ++seg) {
            double t;
            best = std::min(best,
                            point_segment_distance2(p, gon.segment_start(seg), gon.segment_end(seg), t));
        }
        best = std::sqrt(best);
        double radius = rng.uniform(0.05, 3.0);
        auto hit = locator.nearest_within(p, radius);
        if (best <= radius) {
            REQUIRE(hit.has_value());
            REQUIRE(hit->distance == Catch::Approx(best).margin(1e-12));
        } else {
            REQUIRE(!hit.has_value());
        }
    }
}
