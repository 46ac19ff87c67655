#pragma once

#include "plabic/posets.hpp"
#include "plabic/valuation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plabic {

// Columns p_{i,j} of the grid poset on the graph's sources; column p_{i,j} is
// the weight of the coordinatewise-minimal path i -> j restricted to V°.
// Throws VerificationError when some pair has no such path.
LinearMapZ minimal_path_map(const ValuationContext& ctx, const GridPoset& g);

// The map for the dual rec graph of Gr(n-k, n), against P_{k,n}.
LinearMapZ psi_map(int k, int n);

struct TargetPoint {
    Subset J;
    IntVector point;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct BijectionEntry {
    Subset J;
    Antichain antichain;
    IntVector source; // chi of the antichain
    IntVector target; // nu(P_J)
};

struct EquivalenceCertificate {
    int k = 0;
    int n = 0;
    LinearMapZ map;
    Integer determinant;
    std::vector<BijectionEntry> bijection;
    std::vector<CheckResult> checks; // counts, additivity, images, determinant

    bool certified() const;
    // First failing check, if any.
    const CheckResult* first_failure() const;
};

// Checks, in order:
//  counts      |targets| equals the antichain count and J -> antichain hits
//              every antichain once;
//  additivity  each target is the sum of the singleton targets over its
//              antichain;
//  images      psi(chi_a) equals the target with the matching J;
//  determinant |det psi| = 1.
EquivalenceCertificate certify(const GridPoset& g, const LinearMapZ& psi, const std::vector<TargetPoint>& targets);

std::vector<TargetPoint> targets_of(const std::vector<ValuationPoint>& points);

// FFLV^1_{k,n} against the level-1 points of the dual rec graph.
EquivalenceCertificate certify_fflv(int k, int n);
// Same pipeline with `corrupt` added to entry (row, col) of psi.
EquivalenceCertificate certify_fflv_corrupted(int k, int n, std::size_t row, std::size_t col, std::int64_t corrupt = 1);
// Identity map on the chain-polytope points against themselves.
EquivalenceCertificate identity_harness(int k, int n);

struct GtEvidence {
    int k = 0;
    int n = 0;
    std::size_t no_points = 0;
    std::size_t gt_points = 0;
    std::size_t no_vertices = 0;
    std::size_t gt_vertices = 0;
    std::vector<int> levels;               // r values compared
    std::vector<std::size_t> no_minkowski; // |r-fold sum of level-1 points|
    std::vector<std::size_t> gt_ehrhart;   // |S(O(P_{n-k,n}, r))|
    std::vector<std::size_t> no_hull;      // |S(r conv)|, empty when guarded
    std::optional<std::size_t> no_facets;
    std::optional<std::size_t> gt_facets;
    std::string notice; // set when the facet comparison was skipped

    bool consistent() const;
};

// Necessary-condition evidence that the primal level-1 points and the
// Gelfand-Tsetlin polytope GT^1_{n-k,n} agree.
GtEvidence gt_evidence(int k, int n, const std::vector<int>& levels = {1, 2});

// Relabelled primal graph against FFLV^1_{n-k,n}; outcome is reported only.
EquivalenceCertificate w0_check(int k, int n);

} // namespace plabic
