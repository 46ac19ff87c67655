#include <doctest.h>

#include "oracles.hpp"

#include "plabic/error.hpp"
#include "plabic/rec_family.hpp"

#include <algorithm>
#include <set>

using namespace plabic;

namespace {

Vertex vtx(std::string id, Color c, long x, long y, int label = 0) {
    return Vertex{std::move(id), c, Point{Rational(x), Rational(y)}, label};
}

// One white vertex joined to boundary 1 (top), 2 (lower right), 3 (lower left).
PlabicGraph tripod() {
    return PlabicGraph::create(3,
                               {vtx("w", Color::white, 0, 0), vtx("o1", Color::boundary, 0, 3, 1),
                                vtx("o2", Color::boundary, 3, -2, 2), vtx("o3", Color::boundary, -3, -2, 3)},
                               {{0, 1}, {0, 2}, {0, 3}});
}

std::multiset<std::string> label_strings(const RecGraph& r) {
    std::multiset<std::string> out;
    for (const auto& l : r.labels)
        out.insert(label_string(l, r.n));
    return out;
}

std::vector<int> reversed(const PlabicGraph& g, const std::vector<int>& path) {
    std::vector<int> back;
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        back.push_back(g.twin(*it));
    return back;
}

} // namespace

TEST_CASE("tripod splits the disk into three faces") {
    const auto g = tripod();
    CHECK(g.face_count() == 3);
    CHECK(g.vertex_count() - (g.edge_count() + g.n()) + (g.face_count() + 1) == 2);
}

TEST_CASE("tripod trips follow the white turn rule") {
    const auto g = tripod();
    CHECK(trip(g, 1).end == 2);
    CHECK(trip_permutation(g) == std::vector<int>{2, 3, 1});
    auto labels = face_labelling(g);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<Subset>{{1}, {2}, {3}});
}

TEST_CASE("embedding errors") {
    SUBCASE("two neighbours in the same direction") {
        CHECK_THROWS_AS(PlabicGraph::create(3,
                                            {vtx("w", Color::white, 0, 0), vtx("b", Color::black, 0, 1),
                                             vtx("o1", Color::boundary, 0, 3, 1), vtx("o2", Color::boundary, 3, -2, 2),
                                             vtx("o3", Color::boundary, -3, -2, 3)},
                                            {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}),
                        Error);
    }
    SUBCASE("shared position") {
        CHECK_THROWS_AS(PlabicGraph::create(3,
                                            {vtx("w", Color::white, 0, 0), vtx("o1", Color::boundary, 0, 0, 1),
                                             vtx("o2", Color::boundary, 3, -2, 2), vtx("o3", Color::boundary, -3, -2, 3)},
                                            {{0, 1}, {0, 2}, {0, 3}}),
                        EmbeddingError);
    }
    SUBCASE("boundary placed counterclockwise") {
        CHECK_THROWS_AS(PlabicGraph::create(3,
                                            {vtx("w", Color::white, 0, 0), vtx("o1", Color::boundary, 0, 3, 1),
                                             vtx("o2", Color::boundary, -3, -2, 2), vtx("o3", Color::boundary, 3, -2, 3)},
                                            {{0, 1}, {0, 2}, {0, 3}}),
                        EmbeddingError);
    }
    SUBCASE("boundary vertex with two edges") {
        CHECK_THROWS_AS(PlabicGraph::create(3,
                                            {vtx("w", Color::white, 0, 0), vtx("o1", Color::boundary, 0, 3, 1),
                                             vtx("o2", Color::boundary, 3, -2, 2), vtx("o3", Color::boundary, -3, -2, 3)},
                                            {{0, 1}, {0, 2}, {0, 3}, {1, 2}}),
                        Error);
    }
}

TEST_CASE("face counts and Euler formula across the rec family") {
    for (int n = 4; n <= 9; ++n)
        for (int k = 2; k <= n - 2; ++k) {
            CAPTURE(k);
            CAPTURE(n);
            for (const auto& r : {build_rec(k, n), dualize(build_rec(k, n))}) {
                const auto& g = r.graph;
                CHECK(g.face_count() == k * (n - k) + 1);
                CHECK(g.vertex_count() - (g.edge_count() + n) + (g.face_count() + 1) == 2);
            }
        }
    CHECK(build_rec(2, 4).graph.face_count() == 5);
}

TEST_CASE("orbits partition the half-edges") {
    for (auto [k, n] : {std::pair{2, 4}, {3, 6}, {4, 7}, {3, 8}}) {
        const auto r = build_rec(k, n);
        const auto fs = compute_faces(r.graph);
        std::vector<int> seen(static_cast<std::size_t>(r.graph.half_edge_count()), 0);
        for (const auto& f : fs.faces)
            for (int h : f.boundary)
                ++seen[h];
        for (int h : fs.outer)
            ++seen[h];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("rec(4,7) trips") {
    const auto r = build_rec(4, 7);
    CHECK(trip(r.graph, 1).end == 4);
    CHECK(trip(r.graph, 5).end == 1);
    CHECK(trip_permutation(r.graph) == std::vector<int>{4, 5, 6, 7, 1, 2, 3});
    for (int i = 1; i <= 7; ++i)
        CHECK(trip(r.graph, i).steps.size() <= static_cast<std::size_t>(2 * r.graph.edge_count()));
    CHECK(trip_permutation(dualize(r).graph) == std::vector<int>{5, 6, 7, 1, 2, 3, 4});
}

TEST_CASE("trip permutations match the angle oracle") {
    CHECK(oracle::trip_ends(tripod()) == trip_permutation(tripod()));
    for (int n = 4; n <= 9; ++n)
        for (int k = 2; k <= n - 2; ++k)
            for (const auto& r : {build_rec(k, n), dualize(build_rec(k, n))}) {
                CAPTURE(k);
                CAPTURE(n);
                const auto want = oracle::trip_ends(r.graph);
                CHECK(want == trip_permutation(r.graph));
                // a primal trip from i ends at i + n - k
                for (int i = 1; i <= n; ++i)
                    if (r.role == Role::primal)
                        CHECK(want[i - 1] == (i + n - k - 1) % n + 1);
            }
}

TEST_CASE("rec(4,7) face labels") {
    const auto r = build_rec(4, 7);
    const std::multiset<std::string> want{"167", "127", "123", "267", "237", "234", "367",
                                          "347", "345", "467", "457", "456", "567"};
    CHECK(label_strings(r) == want);
    for (int f = 0; f < r.graph.face_count(); ++f)
        if (label_string(r.labels[f], 7) == "167") {
            const auto c = r.graph.face_centroid(f);
            CHECK(c.x == 5);
            CHECK(c.y == 2);
        }
    const auto d = dualize(r);
    for (int f = 0; f < r.graph.face_count(); ++f)
        CHECK(d.labels[f] == complement(r.labels[f], 7));
    for (int f = 0; f < r.graph.face_count(); ++f)
        if (label_string(r.labels[f], 7) == "167")
            CHECK(label_string(d.labels[f], 7) == "2345");
}

TEST_CASE("labels are distinct with one cardinality") {
    for (int n = 4; n <= 8; ++n)
        for (int k = 2; k <= n - 2; ++k) {
            const auto r = build_rec(k, n);
            const auto d = dualize(r);
            std::set<Subset> distinct(r.labels.begin(), r.labels.end());
            CHECK(distinct.size() == r.labels.size());
            for (const auto& l : r.labels)
                CHECK(l.size() == static_cast<std::size_t>(n - k));
            for (const auto& l : d.labels)
                CHECK(l.size() == static_cast<std::size_t>(k));
        }
}

TEST_CASE("left region of a trip") {
    const auto r = build_rec(4, 7);
    const auto t = trip(r.graph, 1);
    std::set<std::string> got;
    for (int f : left_region(r.graph, t.steps))
        got.insert(label_string(r.labels[f], 7));
    CHECK(got == std::set<std::string>{"167", "127", "123"});
}

TEST_CASE("left region matches the winding-number oracle on every trip") {
    for (int n = 4; n <= 7; ++n)
        for (int k = 2; k <= n - 2; ++k)
            for (const auto& r : {build_rec(k, n), dualize(build_rec(k, n))}) {
                const auto& g = r.graph;
                for (int i = 1; i <= n; ++i) {
                    CAPTURE(i);
                    const auto t = trip(g, i);
                    const auto left = left_region(g, t.steps);
                    const auto walk = oracle::vertex_sequence(g, t.steps);
                    CHECK(std::set<int>(left.begin(), left.end()) == oracle::left_faces(g, walk));
                    // the reverse walk sees the complement
                    const auto right = left_region(g, reversed(g, t.steps));
                    std::set<int> all(left.begin(), left.end());
                    for (int f : right)
                        CHECK(all.insert(f).second);
                    CHECK(all.size() == static_cast<std::size_t>(g.face_count()));
                }
            }
}

TEST_CASE("left region rejects bad walks") {
    const auto r = build_rec(2, 4);
    const int h = r.graph.boundary_half_edge(1);
    const std::vector<int> back_and_forth{h, PlabicGraph::twin(h)};
    CHECK_THROWS_AS(left_region(r.graph, back_and_forth), ParameterError);
    CHECK_THROWS_AS(left_region(r.graph, std::vector<int>{}), ParameterError);
}
