#include "plabic/equivalence.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plabic {

namespace {

std::string vector_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

} // namespace

LinearMapZ minimal_path_map(const ValuationContext& ctx, const GridPoset& g) {
    const auto& sources = ctx.graph.orientation.sources;
    if (sources != range_subset(1, g.k) || ctx.graph.n != g.n)
        throw ParameterError("grid poset does not match the graph's source set");
    FlowEngine engine(ctx.graph);
    LinearMapZ m;
    m.row_labels = ctx.names;
    m.col_labels = g.poset.names();
    m.entries.assign(ctx.dimension(), std::vector<std::int64_t>(g.poset.size(), 0));
    for (std::size_t col = 0; col < g.poset.size(); ++col) {
        auto [i, j] = g.element(static_cast<int>(col));
        auto path = minimal_path(engine, i, j);
        if (!path)
            throw VerificationError("no coordinatewise-minimal path from " + std::to_string(i) + " to " +
                                    std::to_string(j));
        const auto w = ctx.restrict(path_weight(ctx.graph, *path));
        for (std::size_t row = 0; row < w.size(); ++row)
            m.entries[row][col] = w[row];
    }
    return m;
}

LinearMapZ psi_map(int k, int n) {
    const auto ctx = make_context(dualize(build_rec(k, n)));
    return minimal_path_map(ctx, grid_poset(k, n));
}

bool EquivalenceCertificate::certified() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* EquivalenceCertificate::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

std::vector<TargetPoint> targets_of(const std::vector<ValuationPoint>& points) {
    std::vector<TargetPoint> out;
    for (const auto& p : points)
        out.push_back(TargetPoint{p.J, p.point});
    return out;
}

EquivalenceCertificate certify(const GridPoset& g, const LinearMapZ& psi, const std::vector<TargetPoint>& targets) {
    EquivalenceCertificate cert;
    cert.k = g.k;
    cert.n = g.n;
    cert.map = psi;
    const auto& P = g.poset;
    const auto all = antichains(P);

    // counts
    {
        CheckResult c{"counts", true, ""};
        std::set<Antichain> hit;
        for (const auto& t : targets) {
            auto a = j_to_antichain(g, t.J);
            if (!hit.insert(a).second) {
                c.passed = false;
                c.detail = "antichain " + antichain_name(P, a) + " reached twice";
                break;
            }
        }
        if (c.passed && (targets.size() != all.size() || hit.size() != all.size())) {
            c.passed = false;
            c.detail = std::to_string(targets.size()) + " target points vs " + std::to_string(all.size()) + " antichains";
        }
        if (c.passed)
            c.detail = std::to_string(targets.size()) + " points, " + std::to_string(all.size()) + " antichains";
        cert.checks.push_back(std::move(c));
    }

    std::map<Antichain, const TargetPoint*> by_antichain;
    for (const auto& t : targets)
        by_antichain.emplace(j_to_antichain(g, t.J), &t);

    // additivity over singleton targets
    {
        CheckResult c{"additivity", true, ""};
        for (const auto& t : targets) {
            const auto a = j_to_antichain(g, t.J);
            IntVector sum(t.point.size(), 0);
            bool missing = false;
            for (int e : a) {
                auto it = by_antichain.find(Antichain{e});
                if (it == by_antichain.end()) {
                    missing = true;
                    break;
                }
                for (std::size_t i = 0; i < sum.size(); ++i)
                    sum[i] += it->second->point.at(i);
            }
            if (missing || sum != t.point) {
                c.passed = false;
                c.detail = "J=" + label_string(t.J, g.n) + " point " + vector_string(t.point) +
                           (missing ? " has a singleton without a target" : " differs from singleton sum " + vector_string(sum));
                break;
            }
        }
        if (c.passed)
            c.detail = "every point is the sum of its singleton points";
        cert.checks.push_back(std::move(c));
    }

    // images
    {
        CheckResult c{"images", true, ""};
        if (psi.cols() != P.size()) {
            c.passed = false;
            c.detail = "map has " + std::to_string(psi.cols()) + " columns, poset has " + std::to_string(P.size());
        }
        for (const auto& t : targets) {
            if (!c.passed)
                break;
            const auto a = j_to_antichain(g, t.J);
            const auto src = chi(P, a);
            const auto img = psi.apply(src);
            cert.bijection.push_back(BijectionEntry{t.J, a, src, t.point});
            if (img != t.point) {
                c.passed = false;
                c.detail = "J=" + label_string(t.J, g.n) + " antichain " + antichain_name(P, a) + ": psi gives " +
                           vector_string(img) + ", expected " + vector_string(t.point);
            }
        }
        if (c.passed)
            c.detail = std::to_string(cert.bijection.size()) + " images match";
        cert.checks.push_back(std::move(c));
    }

    // determinant
    {
        CheckResult c{"determinant", false, ""};
        if (psi.rows() != psi.cols()) {
            c.detail = "map is not square";
        } else {
            cert.determinant = determinant(psi.entries);
            c.passed = abs(cert.determinant) == 1;
            c.detail = "det = " + to_string(cert.determinant);
        }
        cert.checks.push_back(std::move(c));
    }
    return cert;
}

EquivalenceCertificate certify_fflv(int k, int n) {
    const auto ctx = make_context(dualize(build_rec(k, n)));
    const auto g = grid_poset(k, n);
    return certify(g, minimal_path_map(ctx, g), targets_of(no_level1(ctx)));
}

EquivalenceCertificate certify_fflv_corrupted(int k, int n, std::size_t row, std::size_t col, std::int64_t corrupt) {
    const auto ctx = make_context(dualize(build_rec(k, n)));
    const auto g = grid_poset(k, n);
    auto psi = minimal_path_map(ctx, g);
    psi.entries.at(row).at(col) += corrupt;
    return certify(g, psi, targets_of(no_level1(ctx)));
}

EquivalenceCertificate identity_harness(int k, int n) {
    const auto g = grid_poset(k, n);
    LinearMapZ id;
    id.row_labels = g.poset.names();
    id.col_labels = g.poset.names();
    id.entries.assign(g.poset.size(), std::vector<std::int64_t>(g.poset.size(), 0));
    for (std::size_t i = 0; i < g.poset.size(); ++i)
        id.entries[i][i] = 1;
    std::vector<TargetPoint> targets;
    for (const auto& p : lattice_points(chain_polytope_H(g.poset, 1)).points) {
        Antichain a;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i])
                a.push_back(static_cast<int>(i));
        targets.push_back(TargetPoint{antichain_to_j(g, a), p});
    }
    return certify(g, id, targets);
}

bool GtEvidence::consistent() const {
    if (no_points != gt_points || no_vertices != gt_vertices || no_minkowski != gt_ehrhart)
        return false;
    if (!no_hull.empty() && no_hull != gt_ehrhart)
        return false;
    if (no_facets && gt_facets && *no_facets != *gt_facets)
        return false;
    return true;
}

GtEvidence gt_evidence(int k, int n, const std::vector<int>& levels) {
    GtEvidence ev;
    ev.k = k;
    ev.n = n;
    ev.levels = levels;
    const auto ctx = make_context(build_rec(k, n));
    const auto no1 = to_point_set(ctx, no_level1(ctx));
    const auto poset = grid_poset(n - k, n).poset;
    const auto gt1 = lattice_points(order_polytope_H(poset, 1));
    ev.no_points = no1.size();
    ev.gt_points = gt1.size();
    ev.no_vertices = vertices(no1).size();
    ev.gt_vertices = vertices(gt1).size();
    const LatticePointSet bare{no1.basis, no1.points, {}};
    for (int r : levels) {
        ev.no_minkowski.push_back(minkowski_power(bare, r).size());
        ev.gt_ehrhart.push_back(lattice_points(order_polytope_H(poset, r)).size());
    }
    try {
        const auto fno = facets(no1);
        const auto fgt = facets(gt1);
        ev.no_facets = fno.facets.size();
        ev.gt_facets = fgt.facets.size();
        ev.no_hull = ehrhart_counts(fno.as_hrep(no1.basis), levels);
    } catch (const DimensionGuardError& e) {
        ev.notice = std::string("facet comparison skipped: ") + e.what();
    }
    return ev;
}

EquivalenceCertificate w0_check(int k, int n) {
    const auto ctx = make_context(apply_w0(build_rec(k, n)));
    const auto g = grid_poset(n - k, n);
    std::vector<TargetPoint> targets;
    for (const auto& p : ctx.polynomials) {
        // Collisions and order dependence are part of the outcome, not errors.
        targets.push_back(TargetPoint{p.J, valuation(ctx, p).point});
    }
    LinearMapZ psi;
    try {
        psi = minimal_path_map(ctx, g);
    } catch (const VerificationError& e) {
        EquivalenceCertificate cert;
        cert.k = n - k;
        cert.n = n;
        cert.checks.push_back(CheckResult{"map", false, e.what()});
        return cert;
    }
    return certify(g, psi, targets);
}

} // namespace plabic
