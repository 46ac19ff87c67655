#include "plabic/valuation.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace plabic {

IntVector ValuationContext::restrict(const Exponent& e) const {
    IntVector v;
    v.reserve(coords.size());
    for (int c : coords)
        v.push_back(e.at(static_cast<std::size_t>(c)));
    return v;
}

ValuationContext make_context(const RecGraph& r) {
    const int k = r.k, n = r.n;
    if (k < 2 || k > n - 2)
        throw StructuralError("not a rec-family graph: k=" + std::to_string(k) + ", n=" + std::to_string(n));
    if (r.graph.face_count() != k * (n - k) + 1)
        throw StructuralError("not a rec-family graph: " + std::to_string(r.graph.face_count()) + " faces, expected " +
                              std::to_string(k * (n - k) + 1));

    ValuationContext ctx(r);
    FlowEngine engine(ctx.graph);
    ctx.basis = engine.basis();
    ctx.polynomials = engine.all_polynomials();

    std::vector<char> used(ctx.basis.size(), 0);
    for (const auto& p : ctx.polynomials)
        for (const auto& [e, c] : p.poly.terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i])
                    used[i] = 1;
    std::vector<int> unused;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            unused.push_back(static_cast<int>(i));
    if (unused.size() != 1)
        throw StructuralError("expected exactly one face variable absent from every P_J, found " +
                              std::to_string(unused.size()));
    const int pos = unused.front();
    ctx.empty_face = ctx.basis.faces[pos];
    ctx.empty_label = ctx.basis.labels[pos];
    const auto all_names = ctx.basis.names();
    for (std::size_t i = 0; i < ctx.basis.size(); ++i) {
        if (static_cast<int>(i) == pos)
            continue;
        ctx.coords.push_back(static_cast<int>(i));
        ctx.names.push_back(all_names[i]);
    }
    ctx.order.resize(ctx.coords.size());
    std::iota(ctx.order.begin(), ctx.order.end(), 0);
    return ctx;
}

ValuationContext reversed_order(const ValuationContext& ctx) {
    ValuationContext out = ctx;
    std::reverse(out.order.begin(), out.order.end());
    return out;
}

ValuationPoint valuation(const ValuationContext& ctx, const FlowPolynomial& p) {
    if (p.poly.is_zero())
        throw ParameterError("valuation of the zero polynomial (J=" + label_string(p.J, ctx.graph.n) + ")");
    std::vector<IntVector> terms;
    for (const auto& [e, c] : p.poly.terms())
        terms.push_back(ctx.restrict(e));
    auto lex_less = [&](const IntVector& a, const IntVector& b) {
        for (int i : ctx.order)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    };
    const IntVector best = *std::min_element(terms.begin(), terms.end(), lex_less);
    bool strongly_minimal = true;
    for (const auto& t : terms)
        for (std::size_t i = 0; i < t.size() && strongly_minimal; ++i)
            if (best[i] > t[i])
                strongly_minimal = false;
    return ValuationPoint{p.J, best, !strongly_minimal};
}

std::vector<ValuationPoint> no_level1(const ValuationContext& ctx) {
    std::vector<ValuationPoint> out;
    std::map<IntVector, Subset> seen;
    for (const auto& p : ctx.polynomials) {
        auto v = valuation(ctx, p);
        auto [it, fresh] = seen.emplace(v.point, v.J);
        if (!fresh)
            throw VerificationError("valuation collision: J=" + label_string(it->second, ctx.graph.n) +
                                    " and J=" + label_string(v.J, ctx.graph.n) + " give the same point");
        out.push_back(std::move(v));
    }
    return out;
}

LatticePointSet to_point_set(const ValuationContext& ctx, const std::vector<ValuationPoint>& points) {
    std::vector<IntVector> pts;
    std::vector<std::string> prov;
    for (const auto& p : points) {
        pts.push_back(p.point);
        prov.push_back(label_string(p.J, ctx.graph.n));
    }
    return make_point_set(ctx.names, std::move(pts), std::move(prov));
}

LatticePointSet no_level_r(const ValuationContext& ctx, int r) {
    if (r < 1)
        throw ParameterError("level must be at least 1");
    auto level1 = to_point_set(ctx, no_level1(ctx));
    if (r == 1)
        return level1;
    return minkowski_power(LatticePointSet{level1.basis, level1.points, {}}, r);
}

} // namespace plabic
