#pragma once

#include "plabic/flows.hpp"
#include "plabic/polyhedra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plabic {

struct ValuationContext {
    explicit ValuationContext(RecGraph g) : graph(std::move(g)) {}

    RecGraph graph;
    FaceBasis basis;
    int empty_face = -1;  // F_empty: the face whose variable occurs in no P_J
    Subset empty_label;
    std::vector<int> coords;        // basis positions forming V°, in basis order
    std::vector<std::string> names; // labels of V°
    std::vector<int> order;         // tie-break priority over V° indices
    std::vector<FlowPolynomial> polynomials; // every P_J, J in colex order

    std::size_t dimension() const { return coords.size(); }
    // Drops the F_empty coordinate.
    IntVector restrict(const Exponent& e) const;
};

// Throws StructuralError unless the graph is a rec-family graph with exactly
// one unused face.
ValuationContext make_context(const RecGraph& r);

// Same context with the tie-break order reversed.
ValuationContext reversed_order(const ValuationContext& ctx);

struct ValuationPoint {
    Subset J;
    IntVector point;
    bool order_dependent = false; // no coordinatewise-minimal term
};

// Coordinatewise-minimal exponent when there is one, else the lexicographic
// minimum under ctx.order (flagged).
ValuationPoint valuation(const ValuationContext& ctx, const FlowPolynomial& p);

// nu(P_J) for every J, colex order; VerificationError on a collision.
std::vector<ValuationPoint> no_level1(const ValuationContext& ctx);

LatticePointSet to_point_set(const ValuationContext& ctx, const std::vector<ValuationPoint>& points);

// r-fold Minkowski sum of the level-1 points.
LatticePointSet no_level_r(const ValuationContext& ctx, int r);

} // namespace plabic
