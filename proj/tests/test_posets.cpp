#include <doctest.h>

#include "oracles.hpp"

#include "plabic/error.hpp"
#include "plabic/posets.hpp"

using namespace plabic;

TEST_CASE("grid poset sizes") {
    const auto g = grid_poset(4, 7);
    CHECK(g.poset.size() == 12);
    CHECK(g.poset.covers().size() == 17);
    CHECK(grid_poset(2, 4).poset.size() == 4);
    CHECK(grid_poset(2, 4).poset.covers().size() == 4);
    CHECK(grid_poset(1, 2).poset.size() == 1);
    CHECK(grid_poset(1, 2).poset.covers().empty());
    CHECK_THROWS_AS(grid_poset(0, 3), ParameterError);
    CHECK_THROWS_AS(grid_poset(3, 3), ParameterError);
}

TEST_CASE("grid poset order matches coordinates") {
    for (auto [k, n] : {std::pair{2, 4}, {3, 6}, {4, 7}, {2, 6}}) {
        const auto g = grid_poset(k, n);
        const auto el = oracle::grid_elements(k, n);
        for (std::size_t a = 0; a < el.size(); ++a) {
            CHECK(g.element(static_cast<int>(a)) == el[a]);
            CHECK(g.index(el[a].first, el[a].second) == static_cast<int>(a));
            CHECK(g.poset.names()[a] == "p" + std::to_string(el[a].first) + "_" + std::to_string(el[a].second));
            for (std::size_t b = 0; b < el.size(); ++b)
                CHECK(g.poset.leq(static_cast<int>(a), static_cast<int>(b)) == oracle::grid_leq(el[a], el[b]));
        }
        CHECK(g.poset.minimal_elements() == std::vector<int>{g.index(k, n)});
        CHECK(g.poset.maximal_elements() == std::vector<int>{g.index(1, k + 1)});
    }
}

TEST_CASE("cyclic covers are rejected") {
    CHECK_THROWS_AS(Poset({"a", "b"}, {{0, 1}, {1, 0}}), ParameterError);
}

TEST_CASE("antichains and maximal chains") {
    CHECK(antichains(grid_poset(2, 4).poset).size() == 6);
    CHECK(antichains(grid_poset(4, 7).poset).size() == 35);
    CHECK(antichains(grid_poset(1, 2).poset).size() == 2);
    CHECK(maximal_chains(grid_poset(3, 6).poset).size() == 6);
    CHECK(maximal_chains(grid_poset(3, 5).poset).size() == 3);
    CHECK(maximal_chains(grid_poset(1, 2).poset).size() == 1);
    CHECK(maximal_chains(grid_poset(3, 7).poset).size() == 10);
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n && k * (n - k) <= 12; ++k) {
            const auto g = grid_poset(k, n);
            const auto acs = antichains(g.poset);
            CHECK(acs.size() == oracle::antichain_count(k, n));
            CHECK(acs.size() == binomial(n, k));
            CHECK(acs.front().empty());
            for (const auto& a : acs)
                for (std::size_t x = 0; x < a.size(); ++x)
                    for (std::size_t y = x + 1; y < a.size(); ++y)
                        CHECK_FALSE(g.poset.comparable(a[x], a[y]));
            for (const auto& c : maximal_chains(g.poset)) {
                CHECK(c.size() == static_cast<std::size_t>(n - 1));
                for (std::size_t x = 0; x + 1 < c.size(); ++x)
                    CHECK(g.poset.leq(c[x], c[x + 1]));
            }
        }
}

TEST_CASE("H-representation sizes") {
    CHECK(order_polytope_H(grid_poset(4, 7).poset, 1).ineqs.size() == 19);
    CHECK(order_polytope_H(grid_poset(3, 6).poset, 1).ineqs.size() == 14);
    CHECK(chain_polytope_H(grid_poset(4, 7).poset, 1).ineqs.size() == 22);
    CHECK(chain_polytope_H(grid_poset(3, 6).poset, 1).ineqs.size() == 15);
}

TEST_CASE("lattice points agree with the membership oracles") {
    for (auto [k, n] : {std::pair{1, 3}, {2, 4}, {2, 5}, {3, 6}})
        for (int r = 0; r <= (k * (n - k) <= 6 ? 3 : 1); ++r) {
            CAPTURE(k);
            CAPTURE(n);
            CAPTURE(r);
            const auto g = grid_poset(k, n);
            const std::size_t dim = g.poset.size();
            const auto o = lattice_points(order_polytope_H(g.poset, r));
            const auto c = lattice_points(chain_polytope_H(g.poset, r));
            const auto want_o = oracle::box_points(dim, r, [&](const IntVector& x) { return oracle::in_order(k, n, x, r); });
            const auto want_c = oracle::box_points(dim, r, [&](const IntVector& x) { return oracle::in_chain(k, n, x, r); });
            CHECK(o.points == want_o);
            CHECK(c.points == want_c);
            CHECK(o.size() == c.size());
        }
}

TEST_CASE("J to antichain") {
    const auto g = grid_poset(4, 7);
    CHECK(antichain_name(g.poset, j_to_antichain(g, {2, 3, 4, 5})) == "{p1_5}");
    CHECK(antichain_name(g.poset, j_to_antichain(g, {2, 3, 5, 6})) == "{p1_6,p4_5}");
    CHECK(j_to_antichain(g, {1, 2, 3, 4}).empty());
    CHECK(j_to_antichain(g, {4, 5, 6, 7}).size() == 3);
    for (auto [k, n] : {std::pair{2, 4}, {3, 6}, {4, 7}, {2, 7}}) {
        const auto gp = grid_poset(k, n);
        std::set<Antichain> hit;
        for (const auto& J : subsets_of_size(n, k)) {
            const auto a = j_to_antichain(gp, J);
            for (std::size_t x = 0; x < a.size(); ++x)
                for (std::size_t y = x + 1; y < a.size(); ++y)
                    CHECK_FALSE(gp.poset.comparable(a[x], a[y]));
            CHECK(antichain_to_j(gp, a) == J);
            CHECK(hit.insert(a).second);
        }
        CHECK(hit.size() == antichains(gp.poset).size());
    }
}

TEST_CASE("chi is the indicator") {
    const auto g = grid_poset(3, 6);
    for (const auto& a : antichains(g.poset)) {
        const auto x = chi(g.poset, a);
        CHECK(chain_polytope_H(g.poset, 1).contains(x));
        std::int64_t total = 0;
        for (auto v : x)
            total += v;
        CHECK(total == static_cast<std::int64_t>(a.size()));
        IntVector sum(g.poset.size(), 0);
        for (int e : a) {
            const auto u = chi(g.poset, {e});
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += u[i];
        }
        CHECK(sum == x);
    }
}

TEST_CASE("order and chain polytopes share Ehrhart counts") {
    for (int n = 2; n <= 13; ++n)
        for (int k = 1; k < n && k * (n - k) <= 12; ++k) {
            CAPTURE(k);
            CAPTURE(n);
            const auto g = grid_poset(k, n);
            const auto o = ehrhart_counts(order_polytope_H(g.poset, 1), {0, 1, 2, 3});
            const auto c = ehrhart_counts(chain_polytope_H(g.poset, 1), {0, 1, 2, 3});
            CHECK(o == c);
            CHECK(o[0] == 1);
            CHECK(o[1] == binomial(n, k));
        }
}

TEST_CASE("lattice points of dilates are sums of level-1 points") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n && k * (n - k) <= 9; ++k)
            for (int r = 2; r <= 3; ++r) {
                CAPTURE(k);
                CAPTURE(n);
                CAPTURE(r);
                const auto g = grid_poset(k, n);
                for (const auto& h : {order_polytope_H(g.poset, 1), chain_polytope_H(g.poset, 1)}) {
                    const auto one = lattice_points(h);
                    const auto sum = minkowski_power(one, r);
                    CHECK(same_points(sum, lattice_points(h.dilate(r))));
                }
            }
}
