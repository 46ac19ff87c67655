#pragma once

#include "plabic/arith.hpp"
#include "plabic/subset.hpp"

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace plabic {

enum class Color { black, white, boundary };

std::string_view color_name(Color c);
Color parse_color(std::string_view name);

struct Point {
    Rational x;
    Rational y;
};

struct Vertex {
    std::string id;
    Color color = Color::white;
    Point pos;
    int label = 0; // boundary label in 1..n; 0 for internal vertices
};

// An orbit of directed edges; `boundary` lists half-edge ids in traversal order.
struct Face {
    int id = 0;
    std::vector<int> boundary;
};

struct Trip {
    int start = 0;
    std::vector<int> steps; // half-edge ids
    int end = 0;
};

// Faces of an embedded graph: orbits of the successor rule, minus the outer orbit.
struct FaceStructure {
    std::vector<Face> faces;
    std::vector<int> face_of; // per half-edge; -1 on the outer orbit
    std::vector<int> outer;   // the discarded orbit
};

class PlabicGraph;
FaceStructure compute_faces(const PlabicGraph& g);

// A plabic graph embedded in a disk with exact coordinates.
//
// Half-edges are numbered 2e (first -> second endpoint) and 2e+1 for every
// edge e. Graph edges come first; edges edge_count() .. edge_count()+n-1 are
// the boundary arcs, arc i running from boundary label i to label i % n + 1.
// The rotation at each vertex lists its outgoing half-edges counterclockwise.
// Immutable after create().
class PlabicGraph {
public:
    static PlabicGraph create(int n, std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int half_edge_count() const { return 2 * (edge_count() + n_); }

    const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    std::span<const Vertex> vertices() const { return vertices_; }
    std::pair<int, int> edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const std::pair<int, int>> edges() const { return edges_; }

    int find_vertex(std::string_view id) const;
    int boundary_vertex(int label) const;
    // Half-edge leaving boundary `label` along its unique graph edge.
    int boundary_half_edge(int label) const;
    // Half-edge u -> v along a graph edge, or -1.
    int find_half_edge(int u, int v) const;

    static int twin(int h) { return h ^ 1; }
    static int edge_of(int h) { return h / 2; }
    bool is_arc(int h) const { return edge_of(h) >= edge_count(); }
    int tail(int h) const;
    int head(int h) const { return tail(twin(h)); }

    std::span<const int> rotation(int v) const { return rotation_.at(static_cast<std::size_t>(v)); }
    int ccw_next(int h) const;
    int ccw_prev(int h) const;

    const std::vector<Face>& faces() const { return faces_.faces; }
    int face_count() const { return static_cast<int>(faces_.faces.size()); }
    int face_of(int h) const { return faces_.face_of.at(static_cast<std::size_t>(h)); }

    // Average of the orbit's vertex positions.
    Point face_centroid(int face) const;

private:
    PlabicGraph() = default;

    int n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> boundary_;
    std::vector<int> graph_edge_at_boundary_;
    std::vector<std::vector<int>> rotation_;
    std::vector<int> rotation_index_;
    std::unordered_map<std::string, int> index_by_id_;
    FaceStructure faces_;

    friend FaceStructure compute_faces(const PlabicGraph& g);
};

// Follows the turn rule from boundary `i`: at a black vertex leave along the
// counterclockwise successor of the arrival half-edge, at a white vertex along
// its counterclockwise predecessor.
Trip trip(const PlabicGraph& g, int i);

// pi[i-1] = end of the trip from i. Throws StructuralError listing collisions.
std::vector<int> trip_permutation(const PlabicGraph& g);

// Faces to the left of a boundary-to-boundary walk, sorted by face id.
std::vector<int> left_region(const PlabicGraph& g, std::span<const int> path);

// Per face id: the set of i whose trip keeps the face on its left.
std::vector<Subset> face_labelling(const PlabicGraph& g);

} // namespace plabic
