#pragma once

#include "plabic/arith.hpp"
#include "plabic/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plabic {

using IntVector = std::vector<std::int64_t>;

// Finite set of lattice points over a labelled coordinate basis.
struct LatticePointSet {
    std::vector<std::string> basis;
    std::vector<IntVector> points;
    std::vector<std::string> provenance; // empty, or one entry per point

    std::size_t size() const { return points.size(); }
    std::size_t dimension() const { return basis.size(); }
    bool contains(const IntVector& p) const;
};

// Validates lengths and rejects duplicates.
LatticePointSet make_point_set(std::vector<std::string> basis, std::vector<IntVector> points,
                               std::vector<std::string> provenance = {});

// Same basis and the same points, ignoring order and provenance.
bool same_points(const LatticePointSet& a, const LatticePointSet& b);

enum class Relation { le, ge };

struct Inequality {
    std::vector<std::int64_t> coeffs;
    Relation rel = Relation::le;
    std::int64_t rhs = 0;

    bool satisfied_by(const IntVector& x) const;
};

// Inequality system over named variables.
struct HRep {
    std::vector<std::string> vars;
    std::vector<Inequality> ineqs;

    // Scales every right-hand side by r.
    HRep dilate(std::int64_t r) const;
    bool contains(const IntVector& x) const;
};

// Exact enumeration by interval propagation, lexicographic order. Variable
// bounds come from the exact LP; throws ParameterError when unbounded.
LatticePointSet lattice_points(const HRep& h);

// Integer matrix between labelled bases: entries[row][col].
struct LinearMapZ {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::int64_t>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return col_labels.size(); }
    IntVector apply(const IntVector& x) const;
};

// Fraction-free (Bareiss) elimination.
Integer determinant(const std::vector<std::vector<std::int64_t>>& m);

// Deduplicated pairwise sums, sorted lexicographically.
LatticePointSet minkowski_sum(const LatticePointSet& a, const LatticePointSet& b);
// r-fold sum; r = 0 gives the origin.
LatticePointSet minkowski_power(const LatticePointSet& a, int r);

// Points that are not convex combinations of the others (exact LP).
LatticePointSet vertices(const LatticePointSet& a);

// Largest affine dimension accepted by facets().
inline constexpr int kFacetDimensionGuard = 9;

class DimensionGuardError : public Error {
public:
    using Error::Error;
};

struct AffineEquation {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs = 0;
};

struct FacetDescription {
    int dimension = 0;                     // of the affine hull
    std::vector<AffineEquation> equations; // affine hull
    std::vector<Inequality> facets;        // primitive integer a.x <= b, one per facet
    HRep as_hrep(const std::vector<std::string>& vars) const;
};

// Irredundant H-description of conv(a) by incremental double description
// over exact arithmetic. Throws DimensionGuardError above the guard.
FacetDescription facets(const LatticePointSet& a);

// |S(rQ)| for each r.
std::vector<std::size_t> ehrhart_counts(const HRep& h, const std::vector<int>& rs);

} // namespace plabic
