#include <doctest.h>

#include "oracles.hpp"

#include "plabic/error.hpp"
#include "plabic/lp.hpp"
#include "plabic/posets.hpp"
#include "plabic/valuation.hpp"

#include <random>

using namespace plabic;

namespace {

LatticePointSet pts(std::size_t dim, std::vector<IntVector> points) {
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < dim; ++i)
        basis.push_back("x" + std::to_string(i));
    return make_point_set(std::move(basis), std::move(points));
}

std::set<std::pair<std::vector<Integer>, Integer>> as_set(const FacetDescription& fd) {
    std::set<std::pair<std::vector<Integer>, Integer>> out;
    for (const auto& f : fd.facets) {
        REQUIRE(f.rel == Relation::le);
        std::vector<Integer> a;
        for (auto c : f.coeffs)
            a.emplace_back(static_cast<long>(c));
        out.emplace(std::move(a), Integer(static_cast<long>(f.rhs)));
    }
    return out;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const IntVector& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

// Each facet holds on every point and is tight on dim affinely independent ones.
void check_facets(const LatticePointSet& s, const FacetDescription& fd) {
    for (const auto& eq : fd.equations)
        for (const auto& p : s.points)
            CHECK(dot(eq.coeffs, p) == eq.rhs);
    for (const auto& f : fd.facets) {
        std::vector<std::vector<Rational>> tight;
        for (const auto& p : s.points) {
            const auto v = dot(f.coeffs, p);
            CHECK(v <= f.rhs);
            if (v == f.rhs) {
                std::vector<Rational> row;
                for (auto c : p)
                    row.emplace_back(static_cast<long>(c));
                row.emplace_back(1);
                tight.push_back(std::move(row));
            }
        }
        CHECK(oracle::rank_of(tight) == static_cast<std::size_t>(fd.dimension));
    }
}

const LatticePointSet& square() {
    static const auto s = pts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    return s;
}

} // namespace

TEST_CASE("point set validation") {
    CHECK_THROWS_AS(pts(2, {{0, 0}, {0, 0}}), ParameterError);
    CHECK_THROWS_AS(pts(2, {{0, 0, 1}}), ParameterError);
    CHECK_THROWS_AS(make_point_set({"a"}, {{1}}, {"x", "y"}), ParameterError);
    CHECK(square().contains({1, 1}));
    CHECK_FALSE(square().contains({2, 1}));
    CHECK(same_points(square(), pts(2, {{1, 1}, {0, 0}, {0, 1}, {1, 0}})));
}

TEST_CASE("Minkowski sums") {
    const auto seg = pts(2, {{0, 0}, {1, 0}});
    const auto other = pts(2, {{0, 0}, {0, 1}});
    CHECK(same_points(minkowski_sum(seg, other), square()));
    CHECK(minkowski_sum(square(), square()).size() == 9);
    CHECK(minkowski_power(square(), 3).size() == 16);
    CHECK(minkowski_power(square(), 0).points == std::vector<IntVector>{{0, 0}});
    CHECK(same_points(minkowski_power(square(), 1), square()));
    CHECK_THROWS_AS(minkowski_power(square(), -1), ParameterError);
    CHECK_THROWS_AS(minkowski_sum(square(), make_point_set({"y0", "y1"}, {{0, 0}})), ParameterError);
    const auto s = minkowski_sum(square(), seg);
    CHECK(std::is_sorted(s.points.begin(), s.points.end()));
}

TEST_CASE("vertices") {
    const auto with_centre = minkowski_sum(square(), square());
    CHECK(vertices(with_centre).size() == 4);
    const auto g = grid_poset(2, 4);
    CHECK(vertices(lattice_points(chain_polytope_H(g.poset, 1))).size() == 6);
    const auto ctx = make_context(dualize(build_rec(4, 7)));
    CHECK(vertices(to_point_set(ctx, no_level1(ctx))).size() == 35);
    CHECK(vertices(pts(2, {{3, 4}})).size() == 1);
}

TEST_CASE("facets of small polytopes") {
    CHECK(facets(square()).facets.size() == 4);
    CHECK(facets(square()).dimension == 2);
    const auto g = grid_poset(3, 6);
    CHECK(facets(lattice_points(chain_polytope_H(g.poset, 1))).facets.size() == 15);
    CHECK(facets(lattice_points(order_polytope_H(g.poset, 1))).facets.size() == 14);
}

TEST_CASE("facets agree with the brute-force oracle") {
    std::mt19937 rng(11);
    std::vector<LatticePointSet> cases{square()};
    for (auto [k, n] : {std::pair{2, 4}, {1, 4}, {2, 5}}) {
        const auto g = grid_poset(k, n);
        cases.push_back(lattice_points(order_polytope_H(g.poset, 1)));
        cases.push_back(lattice_points(chain_polytope_H(g.poset, 1)));
    }
    // random full-dimensional clouds in 3 space
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int t = 0; t < 6; ++t) {
        std::set<IntVector> cloud;
        while (cloud.size() < 9)
            cloud.insert(IntVector{coord(rng), coord(rng), coord(rng)});
        cases.push_back(pts(3, {cloud.begin(), cloud.end()}));
    }
    for (const auto& s : cases) {
        const auto fd = facets(s);
        if (fd.dimension != static_cast<int>(s.dimension()))
            continue; // coplanar draw
        CHECK(as_set(fd) == oracle::facets(s.points));
        check_facets(s, fd);
        CHECK(as_set(facets(vertices(s))) == as_set(fd));
    }
}

TEST_CASE("lower-dimensional point sets keep their affine hull") {
    // unit square lifted to z = 2 inside 3 space
    const auto s = pts(3, {{0, 0, 2}, {1, 0, 2}, {0, 1, 2}, {1, 1, 2}});
    const auto fd = facets(s);
    CHECK(fd.dimension == 2);
    CHECK(fd.equations.size() == 1);
    CHECK(fd.facets.size() == 4);
    check_facets(s, fd);
    const auto h = fd.as_hrep(s.basis);
    CHECK(same_points(lattice_points(h), s));

    const auto level1 = [] {
        const auto ctx = make_context(build_rec(2, 4));
        return to_point_set(ctx, no_level1(ctx));
    }();
    const auto fl = facets(level1);
    check_facets(level1, fl);
    CHECK(same_points(lattice_points(fl.as_hrep(level1.basis)), level1));
}

TEST_CASE("the facet guard") {
    const auto g = grid_poset(3, 7);
    CHECK_THROWS_AS(facets(lattice_points(chain_polytope_H(g.poset, 1))), DimensionGuardError);
    CHECK_THROWS_AS(facets(pts(2, {})), ParameterError);
}

TEST_CASE("determinant") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (std::size_t size = 1; size <= 6; ++size)
        for (int t = 0; t < 5; ++t) {
            std::vector<std::vector<std::int64_t>> m(size, std::vector<std::int64_t>(size));
            for (auto& row : m)
                for (auto& x : row)
                    x = entry(rng);
            CHECK(determinant(m) == oracle::permutation_determinant(m));
        }
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(determinant({{1, 2}}), ParameterError);
}

TEST_CASE("linear maps") {
    LinearMapZ m{{"a", "b"}, {"x", "y", "z"}, {{1, 0, 2}, {0, -1, 1}}};
    CHECK(m.apply({1, 2, 3}) == IntVector{7, 1});
    CHECK_THROWS_AS(m.apply({1, 2}), ParameterError);
}

TEST_CASE("exact LP") {
    // max x + y with x + 2y <= 4, 3x + y <= 6
    const auto r = maximize({{1, 2}, {3, 1}}, {4, 6}, {1, 1});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x[0] == Rational(8, 5));
    CHECK(r.x[1] == Rational(6, 5));
    CHECK(maximize({{-1, 0}}, {0}, {1, 0}).status == LpStatus::unbounded);
    CHECK(maximize({{1}, {-1}}, {1, -2}, {1}).status == LpStatus::infeasible);
    CHECK(feasible({{1, 1}}, {3}));
    CHECK_FALSE(feasible({{1, 1}}, {-1}));
}

TEST_CASE("Ehrhart counts") {
    const auto g = grid_poset(2, 4);
    const std::vector<std::size_t> want{1, 6, 20, 50};
    CHECK(ehrhart_counts(order_polytope_H(g.poset, 1), {0, 1, 2, 3}) == want);
    CHECK(ehrhart_counts(chain_polytope_H(g.poset, 1), {0, 1, 2, 3}) == want);
    HRep ray{{"x"}, {Inequality{{1}, Relation::ge, 0}}};
    CHECK_THROWS_AS(lattice_points(ray), ParameterError);
    HRep empty{{"x"}, {Inequality{{1}, Relation::ge, 2}, Inequality{{1}, Relation::le, 1}}};
    CHECK(lattice_points(empty).size() == 0);
}
