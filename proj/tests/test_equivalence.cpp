#include <doctest.h>

#include "oracles.hpp"

#include "plabic/equivalence.hpp"
#include "plabic/error.hpp"

using namespace plabic;

namespace {

const std::vector<std::pair<int, int>> kCases{{2, 4}, {2, 5}, {3, 6}, {4, 7}};

// Coordinatewise-minimal oracle term of P_J, restricted to V° and indexed
// like the map rows. Fails the test when there is none.
IntVector oracle_valuation(const ValuationContext& ctx, const Subset& J) {
    const auto terms = oracle::flow_terms(ctx.graph, J);
    REQUIRE_FALSE(terms.empty());
    std::vector<int> best = terms.begin()->first;
    for (const auto& [e, c] : terms)
        for (std::size_t f = 0; f < e.size(); ++f)
            best[f] = std::min(best[f], e[f]);
    REQUIRE(terms.count(best) == 1);
    IntVector out;
    for (int c : ctx.coords)
        out.push_back(best[static_cast<std::size_t>(ctx.basis.faces[static_cast<std::size_t>(c)])]);
    return out;
}

} // namespace

TEST_CASE("psi is unimodular with 0/1 columns") {
    for (auto [k, n] : kCases) {
        CAPTURE(k);
        CAPTURE(n);
        const auto psi = psi_map(k, n);
        REQUIRE(psi.rows() == static_cast<std::size_t>(k * (n - k)));
        REQUIRE(psi.cols() == psi.rows());
        for (const auto& row : psi.entries)
            for (auto x : row)
                CHECK((x == 0 || x == 1));
        const auto det = determinant(psi.entries);
        CHECK(abs(det) == 1);
        if (psi.rows() <= 9)
            CHECK(det == oracle::permutation_determinant(psi.entries));
        CHECK(psi.apply(IntVector(psi.cols(), 0)) == IntVector(psi.rows(), 0));
    }
}

TEST_CASE("psi columns are the lightest oracle paths") {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        const auto ctx = make_context(dualize(build_rec(k, n)));
        const auto g = grid_poset(k, n);
        const auto psi = minimal_path_map(ctx, g);
        for (int col = 0; col < static_cast<int>(g.poset.size()); ++col) {
            const auto [i, j] = g.element(col);
            std::vector<std::set<int>> weights;
            for (const auto& walk : oracle::paths(ctx.graph, i, j))
                weights.push_back(oracle::left_faces(ctx.graph.graph, walk));
            // the lightest weight is the intersection, and it must be attained
            std::set<int> common = weights.front();
            for (const auto& w : weights) {
                std::set<int> keep;
                std::set_intersection(common.begin(), common.end(), w.begin(), w.end(),
                                      std::inserter(keep, keep.begin()));
                common = keep;
            }
            CHECK(std::find(weights.begin(), weights.end(), common) != weights.end());
            for (std::size_t row = 0; row < psi.rows(); ++row) {
                const int face = ctx.basis.faces[static_cast<std::size_t>(ctx.coords[row])];
                CHECK(psi.entries[row][static_cast<std::size_t>(col)] == static_cast<std::int64_t>(common.count(face)));
            }
        }
    }
}

TEST_CASE("psi maps antichain indicators onto oracle valuations") {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        const auto ctx = make_context(dualize(build_rec(k, n)));
        const auto g = grid_poset(k, n);
        const auto psi = minimal_path_map(ctx, g);
        for (const auto& J : subsets_of_size(n, k)) {
            CAPTURE(label_string(J, n));
            CHECK(psi.apply(chi(g.poset, j_to_antichain(g, J))) == oracle_valuation(ctx, J));
        }
    }
}

TEST_CASE("certification of the four cases") {
    for (auto [k, n] : kCases) {
        CAPTURE(k);
        CAPTURE(n);
        const auto cert = certify_fflv(k, n);
        CHECK(cert.certified());
        CHECK(cert.first_failure() == nullptr);
        REQUIRE(cert.checks.size() == 4);
        CHECK(cert.checks[0].name == "counts");
        CHECK(cert.checks[1].name == "additivity");
        CHECK(cert.checks[2].name == "images");
        CHECK(cert.checks[3].name == "determinant");
        CHECK(cert.bijection.size() == binomial(n, k));
        CHECK(abs(cert.determinant) == 1);
        std::set<IntVector> targets;
        for (const auto& b : cert.bijection) {
            CHECK(cert.map.apply(b.source) == b.target);
            CHECK(targets.insert(b.target).second);
        }
    }
}

TEST_CASE("identity harness") {
    for (auto [k, n] : kCases)
        CHECK(identity_harness(k, n).certified());
}

TEST_CASE("a corrupted map is caught at the image check") {
    const auto cert = certify_fflv_corrupted(4, 7, 0, 0);
    CHECK_FALSE(cert.certified());
    const auto* f = cert.first_failure();
    REQUIRE(f);
    CHECK(f->name == "images");
    CHECK(f->detail.find("J=2345") != std::string::npos);
    CHECK(f->detail.find("{p1_5}") != std::string::npos);
    for (std::size_t row : {0u, 5u, 11u})
        for (std::size_t col : {0u, 7u})
            CHECK_FALSE(certify_fflv_corrupted(4, 7, row, col).certified());
}

TEST_CASE("non-additive targets fail additivity") {
    const auto g = grid_poset(2, 4);
    const auto ctx = make_context(dualize(build_rec(2, 4)));
    auto targets = targets_of(no_level1(ctx));
    for (auto& t : targets)
        if (t.J == Subset{3, 4})
            t.point[0] += 1;
    const auto cert = certify(g, minimal_path_map(ctx, g), targets);
    REQUIRE(cert.first_failure());
    CHECK(cert.first_failure()->name == "additivity");

    targets.pop_back();
    const auto short_cert = certify(g, minimal_path_map(ctx, g), targets);
    REQUIRE(short_cert.first_failure());
    CHECK(short_cert.first_failure()->name == "counts");
}

TEST_CASE("primal points against the Gelfand-Tsetlin polytope") {
    struct Want {
        int k, n;
        std::size_t points;
        std::vector<std::size_t> counts;
        std::optional<std::size_t> facets;
    };
    for (const auto& w : {Want{2, 4, 6, {6, 20}, 6}, Want{2, 5, 10, {10, 50}, 9}, Want{3, 6, 20, {20, 175}, 14},
                          Want{4, 7, 35, {35, 490}, std::nullopt}}) {
        CAPTURE(w.k);
        CAPTURE(w.n);
        const auto ev = gt_evidence(w.k, w.n);
        CHECK(ev.consistent());
        CHECK(ev.no_points == w.points);
        CHECK(ev.gt_points == w.points);
        CHECK(ev.no_vertices == w.points);
        CHECK(ev.gt_vertices == w.points);
        CHECK(ev.no_minkowski == w.counts);
        CHECK(ev.gt_ehrhart == w.counts);
        CHECK(ev.no_facets == w.facets);
        CHECK(ev.gt_facets == w.facets);
        if (w.facets) {
            CHECK(ev.no_hull == w.counts);
            CHECK(ev.notice.empty());
        } else {
            CHECK(ev.no_hull.empty());
            CHECK_FALSE(ev.notice.empty());
        }
    }
}

TEST_CASE("relabelled primal graph") {
    for (auto [k, n] : kCases) {
        CAPTURE(k);
        CAPTURE(n);
        const auto cert = w0_check(k, n);
        REQUIRE_FALSE(cert.checks.empty());
        CHECK(cert.checks[0].name == "counts");
        CHECK(cert.checks[0].passed);
    }
}
