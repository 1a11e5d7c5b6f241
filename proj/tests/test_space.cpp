#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "findyn/space.hpp"

using findyn::FiniteMetricSpace;
using findyn::FiniteSystem;
using findyn::MetricViolationKind;
using findyn::Rational;
using findyn::Scalar;

namespace {

FiniteSystem three_cycle() {
    return findyn::build_system(findyn::uniform_space({"a", "b", "c"}, Scalar(1)), {1, 2, 0});
}

FiniteSystem two_point_drain() {
    return findyn::build_system(findyn::uniform_space({"a", "b"}, Scalar(1)), {1, 1});
}

}  // namespace

TEST_CASE("validate_metric accepts a genuine metric") {
    auto space = findyn::uniform_space({"a", "b", "c"}, Scalar(1));
    REQUIRE(findyn::validate_metric(space).valid());
}

TEST_CASE("validate_metric names each axiom violation") {
    auto space = findyn::uniform_space({"a", "b", "c"}, Scalar(1));

    SECTION("asymmetry") {
        space.dist[0][1] = Scalar(2);
        auto report = findyn::validate_metric(space);
        REQUIRE(!report.valid());
        bool found = std::any_of(report.violations.begin(), report.violations.end(),
                                 [](const auto& v) {
                                     return v.kind == MetricViolationKind::Asymmetry;
                                 });
        REQUIRE(found);
    }
    SECTION("nonzero diagonal") {
        space.dist[1][1] = Scalar(1);
        auto report = findyn::validate_metric(space);
        bool found = std::any_of(report.violations.begin(), report.violations.end(),
                                 [](const auto& v) {
                                     return v.kind == MetricViolationKind::Diagonal;
                                 });
        REQUIRE(found);
    }
    SECTION("indiscernible points") {
        space.dist[0][1] = Scalar(0);
        space.dist[1][0] = Scalar(0);
        auto report = findyn::validate_metric(space);
        bool found = std::any_of(report.violations.begin(), report.violations.end(),
                                 [](const auto& v) {
                                     return v.kind == MetricViolationKind::Indiscernible;
                                 });
        REQUIRE(found);
    }
    SECTION("triangle inequality") {
        space.dist[0][2] = Scalar(3);
        space.dist[2][0] = Scalar(3);
        auto report = findyn::validate_metric(space);
        bool found = std::any_of(report.violations.begin(), report.violations.end(),
                                 [](const auto& v) {
                                     return v.kind == MetricViolationKind::Triangle;
                                 });
        REQUIRE(found);
    }
    SECTION("negative distance") {
        space.dist[0][1] = Scalar(-1);
        space.dist[1][0] = Scalar(-1);
        auto report = findyn::validate_metric(space);
        bool found = std::any_of(report.violations.begin(), report.violations.end(),
                                 [](const auto& v) {
                                     return v.kind == MetricViolationKind::Negative;
                                 });
        REQUIRE(found);
    }
    SECTION("ragged table is rejected outright") {
        space.dist[0].pop_back();
        REQUIRE_THROWS_AS(findyn::validate_metric(space), findyn::input_error);
    }
}

TEST_CASE("diameter and distance_values") {
    std::vector<std::vector<Scalar>> coords = {{Scalar(0)}, {Scalar::ratio(1, 2)}, {Scalar(1)}};
    auto space = findyn::space_from_coords({"0", "1/2", "1"}, coords);
    REQUIRE(findyn::diameter(space) == Scalar(1));
    auto vals = findyn::distance_values(space);
    REQUIRE(vals == std::vector<Scalar>{Scalar(0), Scalar::ratio(1, 2), Scalar(1)});
}

TEST_CASE("space_from_coords is exact in one dimension") {
    std::vector<std::vector<Scalar>> coords = {{Scalar::ratio(-1, 2)}, {Scalar::ratio(1, 3)}};
    auto space = findyn::space_from_coords({"x", "y"}, coords);
    REQUIRE(space.dist[0][1].is_exact());
    REQUIRE(space.dist[0][1].rational() == Rational(5, 6));
    REQUIRE(space.dist[1][0] == space.dist[0][1]);
}

TEST_CASE("build_system validates the map and derives bijectivity") {
    auto space = findyn::uniform_space({"a", "b"}, Scalar(1));
    REQUIRE_THROWS_AS(findyn::build_system(space, {0}), findyn::input_error);
    REQUIRE_THROWS_AS(findyn::build_system(space, {0, 2}), findyn::input_error);
    REQUIRE_THROWS_AS(findyn::build_system(space, {0, -1}), findyn::input_error);
    REQUIRE(findyn::build_system(space, {1, 0}).bijective);
    REQUIRE(!findyn::build_system(space, {1, 1}).bijective);
    REQUIRE(three_cycle().label_index("b") == 1);
    REQUIRE_THROWS_AS(three_cycle().label_index("z"), findyn::input_error);
}

TEST_CASE("discretize_interval_map rounds to the nearest grid point") {
    // Squaring map on the 5-point grid: i^2/16 snaps to [0, 0, 1, 2, 4]/4.
    std::vector<Scalar> samples;
    for (int i = 0; i <= 4; ++i) samples.push_back(Scalar::ratio(i * i, 16));
    auto sys = findyn::discretize_interval_map(samples);
    REQUIRE(sys.fmap == std::vector<int>{0, 0, 1, 2, 4});
    REQUIRE(sys.space.labels[1] == "1/4");
}

TEST_CASE("discretize_interval_map breaks ties toward the lower index") {
    // Grid {0, 1/2, 1}; the value 1/4 is equidistant from 0 and 1/2.
    std::vector<Scalar> samples = {Scalar::ratio(1, 4), Scalar(0), Scalar(1)};
    auto sys = findyn::discretize_interval_map(samples);
    REQUIRE(sys.fmap[0] == 0);
}

TEST_CASE("discretize_interval_map rejects bad samples") {
    REQUIRE_THROWS_AS(findyn::discretize_interval_map({Scalar(0)}), findyn::parameter_error);
    REQUIRE_THROWS_AS(findyn::discretize_interval_map({Scalar(0), Scalar(2)}),
                      findyn::parameter_error);
}

TEST_CASE("restrict demands an invariant subset") {
    auto sys = two_point_drain();
    auto sub = findyn::restrict(sys, {1});
    REQUIRE(sub.size() == 1);
    REQUIRE(sub.fmap == std::vector<int>{0});
    REQUIRE(sub.space.labels[0] == "b");
    // a maps outside {a}.
    REQUIRE_THROWS_AS(findyn::restrict(sys, {0}), findyn::precondition_error);
    REQUIRE_THROWS_AS(findyn::restrict(sys, std::vector<int>{}), findyn::parameter_error);
    REQUIRE_THROWS_AS(findyn::restrict(sys, {1, 1}), findyn::input_error);
    REQUIRE_THROWS_AS(findyn::restrict(sys, {5}), findyn::input_error);
    // {a, b} is forward-closed but a is never an image, so it is not invariant.
    REQUIRE_THROWS_AS(findyn::restrict(sys, {0, 1}), findyn::precondition_error);
}

TEST_CASE("power composes the map") {
    auto sys = three_cycle();
    REQUIRE(findyn::power(sys, 3).fmap == std::vector<int>{0, 1, 2});
    REQUIRE(findyn::power(sys, 2).fmap == std::vector<int>{2, 0, 1});
    REQUIRE_THROWS_AS(findyn::power(sys, 0), findyn::parameter_error);
}

TEST_CASE("product uses the max metric and the componentwise map") {
    auto a = three_cycle();
    auto b = two_point_drain();
    auto prod = findyn::product(a, b);
    REQUIRE(prod.size() == 6);
    // Point (i, j) has index i*2 + j.
    REQUIRE(prod.space.labels[0] == "(a,a)");
    REQUIRE(prod.fmap[0] == 1 * 2 + 1);  // (a,a) -> (b,b)
    // d((a,a), (a,b)) = max(0, 1) = 1; d((a,a), (b,a)) = max(1, 0) = 1.
    REQUIRE(prod.d(0, 1) == Scalar(1));
    REQUIRE(prod.d(0, 2) == Scalar(1));
    REQUIRE(prod.d(0, 0) == Scalar(0));
}

TEST_CASE("conjugate relabels the dynamics") {
    auto sys = three_cycle();
    std::vector<int> h = {2, 0, 1};  // a->index2, b->index0, c->index1
    auto target = findyn::uniform_space({"B", "C", "A"}, Scalar(1));
    auto conj = findyn::conjugate(sys, h, target);
    // h(f(h^-1(y))): h^-1(0)=b, f(b)=c, h(c)=1.
    REQUIRE(conj.fmap == std::vector<int>{1, 2, 0});
    REQUIRE_THROWS_AS(findyn::conjugate(sys, {0, 0, 1}, target), findyn::parameter_error);
    auto small = findyn::uniform_space({"x"}, Scalar(1));
    REQUIRE_THROWS_AS(findyn::conjugate(sys, h, small), findyn::parameter_error);
}

TEST_CASE("periodic points, fixed points, omega limits") {
    auto s3 = three_cycle();
    auto per3 = findyn::periodic_points(s3);
    REQUIRE(per3.size() == 3);
    REQUIRE(per3[0].least_period == 3);
    REQUIRE(findyn::fixed_points(s3).empty());

    auto s2 = two_point_drain();
    auto per2 = findyn::periodic_points(s2);
    REQUIRE(per2.size() == 1);
    REQUIRE(per2[0].point == 1);
    REQUIRE(per2[0].least_period == 1);
    REQUIRE(findyn::fixed_points(s2) == std::vector<int>{1});

    REQUIRE(findyn::omega_limit(s2, 0) == std::vector<int>{1});
    REQUIRE(findyn::omega_limit(s3, 0) == std::vector<int>{0, 1, 2});
    REQUIRE_THROWS_AS(findyn::omega_limit(s2, 9), findyn::input_error);
}

TEST_CASE("orbit segments validate against the map") {
    auto s3 = three_cycle();
    auto seg = findyn::forward_segment(s3, 0, 4);
    REQUIRE(seg.points == std::vector<int>{0, 1, 2, 0});
    REQUIRE(seg.at_time(0) == 0);
    REQUIRE(seg.time_max() == 3);

    REQUIRE_THROWS_AS(findyn::make_orbit_segment(s3, {0, 2}, 0), findyn::precondition_error);
    REQUIRE_THROWS_AS(findyn::make_orbit_segment(s3, {}, 0), findyn::parameter_error);
    REQUIRE_THROWS_AS(findyn::make_orbit_segment(s3, {0, 1}, 5), findyn::parameter_error);

    auto two = findyn::two_sided_segment(s3, 0, -2, 2);
    REQUIRE(two.at_time(0) == 0);
    REQUIRE(two.at_time(-1) == 2);  // f(c) = a
    REQUIRE(two.at_time(-2) == 1);
    REQUIRE(two.at_time(2) == 2);
    REQUIRE_THROWS_AS(findyn::two_sided_segment(two_point_drain(), 0, -1, 1),
                      findyn::capability_error);
    REQUIRE_THROWS_AS(findyn::two_sided_segment(s3, 0, 1, 2), findyn::parameter_error);
}
