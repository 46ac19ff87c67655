#pragma once

#include "plabic/polynomial.hpp"
#include "plabic/rec_family.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plabic {

// Face variables of a labelled graph, ordered by sorted-tuple lexicographic
// order of their labels. Exponent vectors index into this basis.
struct FaceBasis {
    std::vector<int> faces;       // basis position -> face id
    std::vector<int> position;    // face id -> basis position
    std::vector<Subset> labels;   // basis position -> label
    int n = 0;

    std::size_t size() const { return faces.size(); }
    std::vector<std::string> names() const;
};

FaceBasis face_basis(const RecGraph& r);

using Path = std::vector<int>; // half-edge ids along the orientation

// Pairwise vertex-disjoint paths, listed by increasing source.
struct Flow {
    std::vector<Path> paths;
};

struct FlowPolynomial {
    Subset J;
    Polynomial poly;
};

// All directed paths from boundary source i to boundary sink j, in
// lexicographic order of their half-edge sequences.
std::vector<Path> enumerate_paths(const RecGraph& r, int i, int j);

// 0/1 indicator over face_basis(r) of the faces left of the path.
Exponent path_weight(const RecGraph& r, const Path& path);
Exponent flow_weight(const RecGraph& r, const Flow& flow);

std::vector<Flow> enumerate_flows(const RecGraph& r, const Subset& J);
FlowPolynomial flow_polynomial(const RecGraph& r, const Subset& J);

// Memoizes paths and their weights so that every P_J of one graph can be
// computed without repeating the search.
class FlowEngine {
public:
    explicit FlowEngine(const RecGraph& r);

    const RecGraph& graph() const { return r_; }
    const FaceBasis& basis() const { return basis_; }
    const std::vector<Path>& paths(int i, int j);
    const std::vector<Exponent>& weights(int i, int j);

    std::vector<Flow> flows(const Subset& J);
    FlowPolynomial polynomial(const Subset& J);
    // All P_J with |J| = |I_O|, J in colex order.
    std::vector<FlowPolynomial> all_polynomials();

private:
    void ensure(int i, int j);

    const RecGraph& r_;
    FaceBasis basis_;
    std::map<std::pair<int, int>, std::vector<Path>> paths_;
    std::map<std::pair<int, int>, std::vector<Exponent>> weights_;
};

struct StronglyMinimalResult {
    bool found = false;
    Flow flow;
    std::vector<std::pair<int, int>> pairs; // (source, sink) per path
    Exponent weight;
    std::string reason; // set when found == false
};

// Path of P_{i,j} whose weight is coordinatewise <= every other one, if any.
std::optional<Path> minimal_path(FlowEngine& engine, int i, int j);

// Pairs the removed sources i_1 < ... < i_r with the added sinks
// j_1 > ... > j_r and takes the minimal path for each pair; checks that the
// result is a flow whose weight is coordinatewise <= every term of P_J and is
// attained by exactly one flow.
StronglyMinimalResult strongly_minimal_flow(FlowEngine& engine, const Subset& J);
StronglyMinimalResult strongly_minimal_flow(const RecGraph& r, const Subset& J);

enum class PlueckerMode { symbolic, numeric };

struct PlueckerReport {
    PlueckerMode mode = PlueckerMode::symbolic;
    std::uint64_t seed = 0;
    std::size_t relations_checked = 0;
    std::size_t values_checked = 0;
    bool all_positive = true;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty() && all_positive; }
};

// Three-term relations P_{Sac} P_{Sbd} = P_{Sab} P_{Scd} + P_{Sad} P_{Sbc}
// for a < b < c < d outside S, checked either as polynomial identities or at
// one seeded positive rational point (where every P_J must also be > 0).
PlueckerReport pluecker_check(const RecGraph& r, PlueckerMode mode, std::uint64_t seed = 0);

// Seeded positive rationals p/q with 1 <= p, q <= 1000, one per basis entry.
std::vector<Rational> positive_sample(std::size_t count, std::uint64_t seed);

} // namespace plabic
