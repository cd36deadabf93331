#include "capev/canonical.hpp"
#include "capev/graph.hpp"
#include "capev/structure.hpp"

#include "support/brute.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace capev;

namespace {

Graph house_graph() {
    // 4-cycle 0-1-2-3 with apex 4 on the edge 0-1.
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
}

EarAdditionStep c7_step() {
    // Frozen result of the exhaustive small-ear search on C7: five internal
    // vertices, y joined to the third of them.
    EarAdditionStep s;
    s.hole.vertices = {0, 1, 2, 3, 4, 5, 6};
    s.x = 0;
    s.y = 1;
    s.z = 2;
    s.ear_internal_count = 5;
    s.y_neighbor_positions = {2};
    return s;
}

} // namespace

TEST_CASE("find_triangle") {
    auto t = find_triangle(complete_graph(3));
    REQUIRE(t);
    CHECK(*t == std::array<int, 3>{0, 1, 2});
    CHECK_FALSE(find_triangle(cycle_graph(5)));
    auto ht = find_triangle(house_graph());
    REQUIRE(ht);
    CHECK(*ht == std::array<int, 3>{0, 1, 4});
}

TEST_CASE("hole enumeration") {
    SUBCASE("C6 has exactly its one hole") {
        auto holes = enumerate_holes(cycle_graph(6), 6);
        REQUIRE(holes.size() == 1);
        CHECK(holes[0].length() == 6);
        CHECK(is_hole(cycle_graph(6), holes[0]));
    }
    SUBCASE("chordal graphs have none") {
        CHECK(enumerate_holes(complete_graph(4), 4).empty());
    }
    SUBCASE("Petersen hole census") {
        Graph p = petersen_graph();
        auto holes = enumerate_holes(p, 6);
        std::map<int, int> census;
        for (const auto& h : holes) {
            CHECK(is_hole(p, h));
            ++census[h.length()];
        }
        CHECK(census[5] == 12);
        CHECK(census[6] == 10);
        // Cross-check against plain subset enumeration.
        CHECK(brute::count_holes_of_length(p, 5) == 12);
        CHECK(brute::count_holes_of_length(p, 6) == 10);
        CHECK(census[4] == brute::count_holes_of_length(p, 4));
    }
    SUBCASE("max_len below 4 is rejected") {
        CHECK_THROWS_AS(enumerate_holes(cycle_graph(5), 3), std::invalid_argument);
    }
}

TEST_CASE("hole enumeration is duplicate free on random graphs") {
    std::mt19937_64 rng(404);
    for (int it = 0; it < 25; ++it) {
        Graph g = brute::random_graph(rng, 8, 0.35);
        auto holes = enumerate_holes(g, 8);
        std::map<int, int> census;
        for (const auto& h : holes) {
            CHECK(is_hole(g, h));
            ++census[h.length()];
        }
        for (int len = 4; len <= 8; ++len)
            CHECK(census[len] == brute::count_holes_of_length(g, len));
    }
}

TEST_CASE("even hole detection") {
    auto w4 = has_even_hole(cycle_graph(4));
    REQUIRE(w4);
    CHECK(w4->length() == 4);
    CHECK_FALSE(has_even_hole(cycle_graph(7)));
    auto wp = has_even_hole(petersen_graph());
    REQUIRE(wp);
    CHECK(wp->length() == 6);
    CHECK(is_hole(petersen_graph(), *wp));
}

TEST_CASE("cap detection") {
    SUBCASE("the house is the 5-vertex cap") {
        auto cap = has_cap(house_graph());
        REQUIRE(cap);
        CHECK(cap->hole.length() == 4);
        CHECK(cap->apex == 4);
    }
    SUBCASE("a bare hole has no cap") { CHECK_FALSE(has_cap(cycle_graph(6))); }
    SUBCASE("C5 plus an apex on one edge") {
        Graph g = Graph::from_edges(
            6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}});
        auto cap = has_cap(g);
        REQUIRE(cap);
        CHECK(cap->hole.length() == 5);
        CHECK(cap->apex == 5);
    }
}

TEST_CASE("detectors agree with subset patterns on random graphs") {
    std::mt19937_64 rng(990);
    for (int it = 0; it < 40; ++it) {
        int n = 5 + int(rng() % 6); // 5..10
        Graph g = brute::random_graph(rng, n, 0.3 + 0.05 * (it % 5));
        CHECK(bool(find_triangle(g)) == brute::has_triangle(g));
        CHECK(bool(has_even_hole(g)) == brute::has_even_hole(g));
        CHECK(bool(has_cap(g)) == brute::has_cap(g));
        CHECK(bool(find_wheel(g)) == brute::has_wheel(g));
        if (auto w = find_wheel(g)) {
            CHECK(is_hole(g, w->hole));
            VertexSet on = VertexSet::of(n, w->hole.vertices);
            CHECK_FALSE(on.test(w->center));
            CHECK((g.neighbors(w->center) & on).count() >= 3);
        }
    }
}

TEST_CASE("classify") {
    SUBCASE("C5") {
        ClassReport r = classify(cycle_graph(5));
        CHECK(r.triangle_free);
        CHECK(r.cap_free);
        CHECK(r.even_hole_free);
        CHECK_FALSE(r.five_hole_free);
        REQUIRE(r.five_hole);
        CHECK(r.five_hole->length() == 5);
        CHECK_FALSE(r.is_cube);
    }
    SUBCASE("C7") {
        ClassReport r = classify(cycle_graph(7));
        CHECK(r.triangle_free);
        CHECK(r.cap_free);
        CHECK(r.even_hole_free);
        CHECK(r.five_hole_free);
        CHECK_FALSE(r.is_cube);
    }
    SUBCASE("the cube") {
        ClassReport r = classify(cube_graph());
        CHECK(r.is_cube);
        CHECK_FALSE(r.even_hole_free);
        REQUIRE(r.even_hole);
        CHECK(r.even_hole->length() % 2 == 0);
    }
}

TEST_CASE("find_wheel") {
    SUBCASE("W5") {
        Graph w5 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                         {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
        auto w = find_wheel(w5);
        REQUIRE(w);
        CHECK(w->center == 5);
    }
    SUBCASE("a bare hole has no wheel") { CHECK_FALSE(find_wheel(cycle_graph(5))); }
    SUBCASE("C6 plus a center on three alternating rim vertices") {
        Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                        {6, 0}, {6, 2}, {6, 4}});
        auto w = find_wheel(g);
        REQUIRE(w);
        CHECK(w->center == 6);
        CHECK(w->hole.length() == 6);
    }
    SUBCASE("constraints narrow the search") {
        Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                        {6, 0}, {6, 2}, {6, 4}});
        WheelConstraints c;
        c.center = 3;
        CHECK_FALSE(find_wheel(g, c));
        c.center = 6;
        c.hole_contains = {0, 2};
        CHECK(find_wheel(g, c));
        c.center_adjacent_to = 1;
        c.center.reset();
        CHECK_FALSE(find_wheel(g, c)); // 6 is the only candidate and misses 1
    }
}

TEST_CASE("validate_good_ear") {
    Graph c7 = cycle_graph(7);

    SUBCASE("the frozen C7 step is good") {
        EarVerdict v = validate_good_ear(c7, c7_step());
        CHECK(v.ok);
        CHECK(v.violation.empty());
    }
    SUBCASE("even neighbor count on the ear fails the parity bullet") {
        EarAdditionStep s = c7_step();
        s.y_neighbor_positions = {}; // only x and z: count 2
        EarVerdict v = validate_good_ear(c7, s);
        CHECK_FALSE(v.ok);
        CHECK(v.violation.find("even number of neighbors") != std::string::npos);
    }
    SUBCASE("flipping one y-neighbor position flips the parity verdict") {
        EarAdditionStep s = c7_step();
        EarVerdict before = validate_good_ear(c7, s);
        s.y_neighbor_positions.push_back(1);
        EarVerdict after = validate_good_ear(c7, s);
        CHECK(before.ok != after.ok);
        CHECK(after.violation.find("even number of neighbors") != std::string::npos);
    }
    SUBCASE("a chord makes the replacement cycle non-induced") {
        Graph bad = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
        EarAdditionStep s;
        s.hole.vertices = {0, 1, 2, 3, 4};
        s.x = 4;
        s.y = 0;
        s.z = 1;
        s.ear_internal_count = 5;
        s.y_neighbor_positions = {2};
        EarVerdict v = validate_good_ear(bad, s);
        CHECK_FALSE(v.ok);
        CHECK(v.violation.find("not induced") != std::string::npos);
    }
    SUBCASE("forbidden wheel through x,y,z") {
        Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                        {5, 0}, {5, 1}, {5, 2}});
        EarAdditionStep s;
        s.hole.vertices = {0, 1, 2, 3, 4};
        s.x = 0;
        s.y = 1;
        s.z = 2;
        s.ear_internal_count = 5;
        s.y_neighbor_positions = {2};
        EarVerdict v = validate_good_ear(g, s);
        CHECK_FALSE(v.ok);
        CHECK(v.violation.find("wheel (H1") != std::string::npos);
    }
    SUBCASE("forbidden wheel centered at y") {
        Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                        {6, 0}, {6, 2}, {6, 4}});
        EarAdditionStep s;
        s.hole.vertices = {0, 6, 2, 1};
        s.x = 0;
        s.y = 6;
        s.z = 2;
        s.ear_internal_count = 5;
        s.y_neighbor_positions = {2};
        EarVerdict v = validate_good_ear(g, s);
        CHECK_FALSE(v.ok);
        CHECK(v.violation.find("wheel (H2") != std::string::npos);
    }
    SUBCASE("malformed steps throw") {
        EarAdditionStep s = c7_step();
        s.z = 3; // not consecutive with x,y
        CHECK_THROWS_AS(validate_good_ear(c7, s), std::invalid_argument);
        s = c7_step();
        s.ear_internal_count = 0;
        CHECK_THROWS_AS(validate_good_ear(c7, s), std::invalid_argument);
        s = c7_step();
        s.y_neighbor_positions = {9};
        CHECK_THROWS_AS(validate_good_ear(c7, s), std::invalid_argument);
    }
}

TEST_CASE("apply_ear_addition") {
    Graph c7 = cycle_graph(7);

    SUBCASE("the frozen step grows C7 into a 12-vertex two-odd-hole graph") {
        Graph grown = apply_ear_addition(c7, c7_step());
        CHECK(grown.vertex_count() == 12);
        ClassReport r = classify(grown);
        CHECK(r.triangle_free);
        CHECK(r.even_hole_free);
        // The ear and y bound two 5-holes sharing the ear's middle vertex.
        int fives = 0;
        for (const auto& h : enumerate_holes(grown, 12))
            if (h.length() == 5) ++fives;
        CHECK(fives == 2);
    }
    SUBCASE("invalid steps are rejected with the verdict") {
        EarAdditionStep s = c7_step();
        s.y_neighbor_positions = {};
        CHECK_THROWS_WITH_AS(apply_ear_addition(c7, s),
                             doctest::Contains("even number of neighbors"),
                             std::invalid_argument);
    }
}

TEST_CASE("exhaustive small-ear search on C7 finds exactly the frozen pattern") {
    // Independent oracle for the frozen step: try every ear length t <= 5 and
    // every y-neighbor subset; require the good-ear verdict plus preservation
    // of triangle- and even-hole-freeness.
    Graph c7 = cycle_graph(7);
    std::vector<EarAdditionStep> found;
    for (int t = 1; t <= 5; ++t) {
        for (unsigned mask = 0; mask < (1u << t); ++mask) {
            EarAdditionStep s;
            s.hole.vertices = {0, 1, 2, 3, 4, 5, 6};
            s.x = 0;
            s.y = 1;
            s.z = 2;
            s.ear_internal_count = t;
            s.y_neighbor_positions = brute::bits_of(mask);
            if (!validate_good_ear(c7, s).ok) continue;
            try {
                apply_ear_addition(c7, s);
            } catch (const std::invalid_argument&) {
                continue;
            }
            found.push_back(s);
        }
    }
    REQUIRE(found.size() == 1);
    CHECK(found[0].ear_internal_count == 5);
    CHECK(found[0].y_neighbor_positions == std::vector<int>{2});
}

TEST_CASE("skeleton corpus") {
    SUBCASE("zero steps emits exactly the odd holes") {
        auto corpus = generate_skeleton_corpus(1, 10, 0);
        REQUIRE(corpus.size() == 3);
        CHECK(corpus[0].initial_hole_length == 5);
        CHECK(corpus[1].initial_hole_length == 7);
        CHECK(corpus[2].initial_hole_length == 9);
        for (const auto& e : corpus) CHECK(e.steps.empty());
    }
    SUBCASE("every corpus graph is triangle-free and even-hole-free") {
        auto corpus = generate_skeleton_corpus(42, 16, 2);
        CHECK(corpus.size() > 6);
        for (const auto& e : corpus) {
            CHECK(e.graph.vertex_count() >= 5);
            CHECK(e.graph.vertex_count() <= 16);
            ClassReport r = classify(e.graph);
            CHECK(r.triangle_free);
            CHECK(r.even_hole_free);
        }
    }
    SUBCASE("deterministic for a fixed seed") {
        auto a = generate_skeleton_corpus(9, 14, 2);
        auto b = generate_skeleton_corpus(9, 14, 2);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].graph == b[i].graph);
    }
    SUBCASE("scripts replay to the emitted graph") {
        auto corpus = generate_skeleton_corpus(42, 16, 2);
        for (const auto& e : corpus) {
            Graph g = cycle_graph(e.initial_hole_length);
            for (const auto& s : e.steps) g = apply_ear_addition(g, s);
            CHECK(g == e.graph);
        }
    }
    SUBCASE("seed 42 reaches twenty distinct graphs at 18 vertices") {
        auto corpus = generate_skeleton_corpus(42, 18, 3);
        std::set<std::vector<std::uint64_t>> canon;
        int grown = 0;
        for (const auto& e : corpus) {
            canon.insert(canonical_form(e.graph));
            if (!e.steps.empty()) ++grown;
        }
        CHECK(canon.size() == corpus.size()); // pairwise non-isomorphic
        CHECK(int(canon.size()) >= 20);
        CHECK(grown > 0);
    }
    SUBCASE("json round trip") {
        auto corpus = generate_skeleton_corpus(42, 14, 1);
        auto back = corpus_from_json(corpus_to_json(corpus));
        REQUIRE(back.size() == corpus.size());
        for (size_t i = 0; i < corpus.size(); ++i) {
            CHECK(back[i].graph == corpus[i].graph);
            CHECK(back[i].initial_hole_length == corpus[i].initial_hole_length);
            CHECK(back[i].steps.size() == corpus[i].steps.size());
        }
    }
}
