#pragma once

#include "plabic/planar_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plabic {

// One direction per graph edge, stored as the half-edge id pointing that way.
struct PerfectOrientation {
    std::vector<int> directed;
    Subset sources;
    bool acyclic = false;
};

enum class Role { primal, dual, w0 };

std::string_view role_name(Role r);
Role parse_role(std::string_view name);

// The rectangular-grid plabic graph for Gr(n-k, n) together with its
// canonical acyclic perfect orientation and computed face labels.
struct RecGraph {
    int k = 0;
    int n = 0;
    Role role = Role::primal;
    PlabicGraph graph;
    PerfectOrientation orientation;
    std::vector<Subset> labels; // per face id
};

RecGraph build_rec(int k, int n);

// Swap internal colours, reverse the orientation, rotate boundary labels by k.
RecGraph dualize(const RecGraph& primal);

// Relabel every face I by {n+1-i : i in I}; graph and orientation unchanged.
RecGraph apply_w0(const RecGraph& primal);

// Boundary vertices whose edge points into the disk.
Subset source_set(const PlabicGraph& g, const std::vector<int>& directed);
bool is_acyclic(const PlabicGraph& g, const std::vector<int>& directed);

// Human-readable violations of the black-one-out / white-one-in rule and of
// the recorded source set; empty when the orientation is perfect.
std::vector<std::string> verify_perfect(const PlabicGraph& g, const PerfectOrientation& o);

// |I_O| forced by the colour and degree counts of g.
int feasible_source_count(const PlabicGraph& g);

struct OrientationSearch {
    std::optional<PerfectOrientation> orientation;
    std::string reason; // set when no orientation exists
};

// Backtracking with unit propagation; returns an acyclic orientation when one
// exists, otherwise any perfect one. Throws ParameterError on a source set of
// the wrong size.
OrientationSearch find_perfect_orientation(const PlabicGraph& g, const Subset& sources);

} // namespace plabic
