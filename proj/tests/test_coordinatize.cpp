#include "doctest.h"
#include "helpers.hpp"
#include "mforge/coordinatize.hpp"

#include <set>
#include <stdexcept>

using namespace mforge;
using namespace testutil;

namespace {

const std::vector<std::pair<int, int>> kQ6Pins = {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 6}};

std::set<std::vector<int>> assignment_set(const CoordinatizationReport& r) {
    return std::set<std::vector<int>>(r.assignments.begin(), r.assignments.end());
}

}  // namespace

TEST_SUITE("coordinatize") {

TEST_CASE("incidence pattern comes from the fundamental circuits") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3});
    CHECK(prob.basisLabels == std::vector<int>{1, 2, 3});
    CHECK(prob.cobasisLabels == std::vector<int>{4, 5, 6});
    // columns 4 -> {1,2}, 5 -> {2,3}, 6 -> {1,2,3}
    CHECK(prob.incidence == std::vector<std::vector<char>>{{1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
}

TEST_CASE("pinned ones reproduce the documented parametrization") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3}, kQ6Pins);
    CHECK(prob.forest == kQ6Pins);
    CHECK(prob.unknowns == std::vector<std::pair<int, int>>{{2, 6}, {3, 6}});
}

TEST_CASE("default forest pins a maximal acyclic set and leaves the rest unknown") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3});
    CHECK(prob.forest.size() == 5);  // 6 vertices, connected graph
    CHECK(prob.unknowns.size() == 2);
}

TEST_CASE("a spanning tree can cover every one, leaving no unknowns") {
    Matroid u23 = builtin_matroid("U(2,3)").matroid;
    CoordinatizationProblem prob = build_problem(u23, std::vector<int>{1, 2});
    CHECK(prob.unknowns.empty());
    GaloisField f = GaloisField::make(2);
    CoordinatizationReport report = enumerate_representations(prob, f);
    CHECK(report.representable);
    CHECK(report.totalAssignments == 1);
    CHECK(report.projective_classes() == 1);
    CHECK(report.geometric_classes() == 1);
}

TEST_CASE("bad pinned sets are rejected") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    // position (3,4) is a zero of the incidence pattern
    CHECK_THROWS_AS(build_problem(q6, std::vector<int>{1, 2, 3},
                                  std::vector<std::pair<int, int>>{{3, 4}, {1, 4}, {2, 5}, {3, 5}, {1, 6}}),
                    std::invalid_argument);
    // cycle through rows 1,2 and columns 4,6
    CHECK_THROWS_AS(build_problem(q6, std::vector<int>{1, 2, 3},
                                  std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {1, 6}, {2, 6}, {3, 5}}),
                    std::invalid_argument);
    // too small to span
    CHECK_THROWS_AS(build_problem(q6, std::vector<int>{1, 2, 3},
                                  std::vector<std::pair<int, int>>{{1, 4}, {2, 5}}),
                    std::invalid_argument);
}

TEST_CASE("non-bases and disconnected inputs are rejected") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CHECK_THROWS_AS(build_problem(q6, std::vector<int>{1, 2, 4}), std::invalid_argument);
    Matroid free2 = Matroid::from_bases({1, 2}, 2, {0b11});
    CHECK_THROWS_AS(build_problem(free2), std::invalid_argument);
}

TEST_CASE("Q6 is not representable over GF(3)") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3}, kQ6Pins);
    CoordinatizationReport report = enumerate_representations(prob, GaloisField::make(3));
    CHECK(report.totalAssignments == 4);
    CHECK_FALSE(report.representable);
    CHECK(report.assignments.empty());
}

TEST_CASE("Q6 over GF(5): six projective classes in two geometric classes") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3}, kQ6Pins);
    CoordinatizationReport report = enumerate_representations(prob, GaloisField::make(5));
    CHECK(report.totalAssignments == 16);
    CHECK(report.representable);
    CHECK(assignment_set(report) ==
          std::set<std::vector<int>>{{3, 1}, {4, 1}, {2, 3}, {2, 4}, {4, 2}, {3, 4}});
    CHECK(report.projective_classes() == 6);
    REQUIRE(report.geometric_classes() == 2);
    auto indexOf = [&](std::vector<int> a) {
        for (size_t i = 0; i < report.assignments.size(); ++i)
            if (report.assignments[i] == a) return static_cast<int>(i);
        return -1;
    };
    CHECK(report.geometric.class_of(indexOf({3, 1})) != report.geometric.class_of(indexOf({2, 3})));
}

TEST_CASE("kept assignments represent the target, rejected ones do not") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3}, kQ6Pins);
    GaloisField f = GaloisField::make(5);
    auto valid = std::set<std::vector<int>>{{3, 1}, {4, 1}, {2, 3}, {2, 4}, {4, 2}, {3, 4}};
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            Matroid got = classify_assignment(prob, f, std::vector<int>{a, b});
            CHECK(equal_labeled(got, q6) == (valid.count({a, b}) > 0));
        }
}

TEST_CASE("rejected assignments sort into wheel and whirl by line count") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3}, kQ6Pins);
    GaloisField f = GaloisField::make(5);
    CHECK(classify_assignment(prob, f, std::vector<int>{1, 1}).three_point_lines() == 4);
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {1, 2}, {2, 1}, {1, 3}, {1, 4}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}})
        CHECK(classify_assignment(prob, f, std::vector<int>{a, b}).three_point_lines() == 3);
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {3, 1}, {4, 1}, {2, 3}, {2, 4}, {4, 2}, {3, 4}})
        CHECK(classify_assignment(prob, f, std::vector<int>{a, b}).three_point_lines() == 2);
}

TEST_CASE("assignment validation") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3}, kQ6Pins);
    GaloisField f = GaloisField::make(5);
    CHECK_THROWS_AS(classify_assignment(prob, f, std::vector<int>{1}), std::invalid_argument);
    CHECK_THROWS_AS(classify_assignment(prob, f, std::vector<int>{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_representations(prob, f, /*maxUnknowns=*/1), std::invalid_argument);
}

TEST_CASE("class counts are invariant under the forest choice") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    GaloisField f = GaloisField::make(5);
    CoordinatizationProblem def = build_problem(q6, std::vector<int>{1, 2, 3});
    CoordinatizationProblem pinned = build_problem(q6, std::vector<int>{1, 2, 3}, kQ6Pins);
    // a third, hand-picked forest
    CoordinatizationProblem alt = build_problem(
        q6, std::vector<int>{1, 2, 3},
        std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {1, 4}, {3, 5}});
    REQUIRE(def.forest != pinned.forest);
    REQUIRE(alt.forest != pinned.forest);
    std::vector<CoordinatizationReport> reports;
    for (const auto& prob : {def, pinned, alt}) reports.push_back(enumerate_representations(prob, f));
    for (const auto& r : reports) {
        CHECK(r.representable);
        CHECK(r.projective_classes() == 6);
        CHECK(r.geometric_classes() == 2);
    }
    // and over GF(3) all three agree the matroid is not representable
    for (const auto& prob : {def, pinned, alt})
        CHECK_FALSE(enumerate_representations(prob, GaloisField::make(3)).representable);
}

TEST_CASE("whirl class counts are forest-invariant too") {
    Matroid whirl = builtin_matroid("W3whirl").matroid;
    GaloisField f = GaloisField::make(5);
    CoordinatizationProblem def = build_problem(whirl, std::vector<int>{1, 2, 3});
    REQUIRE(def.unknowns.size() == 1);
    // the incidence hexagon has six spanning trees, one per dropped edge
    std::vector<std::pair<int, int>> all = {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 6}, {3, 6}};
    for (size_t drop = 0; drop < all.size(); ++drop) {
        std::vector<std::pair<int, int>> pins;
        for (size_t i = 0; i < all.size(); ++i)
            if (i != drop) pins.push_back(all[i]);
        CoordinatizationProblem prob = build_problem(whirl, std::vector<int>{1, 2, 3}, pins);
        CoordinatizationReport report = enumerate_representations(prob, f);
        CHECK(report.projective_classes() == 3);
        CHECK(report.geometric_classes() == 2);
    }
}

TEST_CASE("the non-fano is uniquely representable over GF(5) geometrically") {
    Matroid f7 = builtin_matroid("F7minus").matroid;
    CoordinatizationProblem prob = build_problem(f7, std::vector<int>{1, 2, 3});
    CoordinatizationReport report = enumerate_representations(prob, GaloisField::make(5));
    CHECK(report.representable);
    CHECK(report.geometric_classes() == 1);
}

TEST_CASE("enumeration is independent of the worker count") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6, std::vector<int>{1, 2, 3}, kQ6Pins);
    GaloisField f = GaloisField::make(5);
    CoordinatizationReport serial = enumerate_representations(prob, f, 12, 1);
    CoordinatizationReport parallel = enumerate_representations(prob, f, 12, 4);
    CHECK(serial.assignments == parallel.assignments);
    CHECK(serial.geometric.classes == parallel.geometric.classes);
}

TEST_CASE("basis defaults to the lexicographically least one") {
    Matroid q6 = builtin_matroid("Q6").matroid;
    CoordinatizationProblem prob = build_problem(q6);
    CHECK(prob.basisLabels == std::vector<int>{1, 2, 3});
}

}  // TEST_SUITE
