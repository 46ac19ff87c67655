#include "plabic/planar_core.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace plabic {

std::string_view color_name(Color c) {
    switch (c) {
    case Color::black:
        return "black";
    case Color::white:
        return "white";
    case Color::boundary:
        return "boundary";
    }
    return "?";
}

Color parse_color(std::string_view name) {
    if (name == "black")
        return Color::black;
    if (name == "white")
        return Color::white;
    if (name == "boundary")
        return Color::boundary;
    throw FormatError("unknown vertex color '" + std::string(name) + "'");
}

namespace {

struct Direction {
    Rational dx;
    Rational dy;
};

int half_plane(const Direction& d) { return (d.dy > 0 || (d.dy == 0 && d.dx > 0)) ? 0 : 1; }

// Counterclockwise angular order starting at the positive x axis.
int compare_angle(const Direction& a, const Direction& b) {
    int ha = half_plane(a);
    int hb = half_plane(b);
    if (ha != hb)
        return ha < hb ? -1 : 1;
    Rational cross = a.dx * b.dy - a.dy * b.dx;
    if (cross > 0)
        return -1;
    if (cross < 0)
        return 1;
    return 0;
}

Direction direction(const Point& from, const Point& to) { return {to.x - from.x, to.y - from.y}; }

std::string describe(const Vertex& v) {
    return v.color == Color::boundary ? "boundary " + std::to_string(v.label) : "vertex '" + v.id + "'";
}

} // namespace

PlabicGraph PlabicGraph::create(int n, std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges) {
    if (n < 2)
        throw ParameterError("a plabic graph needs at least two boundary vertices");
    PlabicGraph g;
    g.n_ = n;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    const int nv = g.vertex_count();
    const int ne = g.edge_count();

    g.boundary_.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < nv; ++v) {
        const auto& vx = g.vertices_[static_cast<std::size_t>(v)];
        if (!g.index_by_id_.emplace(vx.id, v).second)
            throw ParameterError("duplicate vertex id '" + vx.id + "'");
        if (vx.color == Color::boundary) {
            if (vx.label < 1 || vx.label > n)
                throw ParameterError("boundary vertex '" + vx.id + "' has label outside 1.." + std::to_string(n));
            auto& slot = g.boundary_[static_cast<std::size_t>(vx.label - 1)];
            if (slot != -1)
                throw ParameterError("boundary label " + std::to_string(vx.label) + " used twice");
            slot = v;
        } else if (vx.label != 0) {
            throw ParameterError("internal vertex '" + vx.id + "' carries a boundary label");
        }
    }
    for (int i = 0; i < n; ++i)
        if (g.boundary_[static_cast<std::size_t>(i)] == -1)
            throw ParameterError("boundary label " + std::to_string(i + 1) + " is missing");

    {
        std::map<std::pair<Rational, Rational>, int> seen;
        for (int v = 0; v < nv; ++v) {
            const auto& p = g.vertices_[static_cast<std::size_t>(v)].pos;
            auto [it, fresh] = seen.emplace(std::make_pair(p.x, p.y), v);
            if (!fresh)
                throw EmbeddingError(describe(g.vertices_[static_cast<std::size_t>(it->second)]) + " and " +
                                     describe(g.vertices_[static_cast<std::size_t>(v)]) + " share a position");
        }
    }

    g.graph_edge_at_boundary_.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(nv));
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = g.edges_[static_cast<std::size_t>(e)];
        if (a < 0 || a >= nv || b < 0 || b >= nv)
            throw ParameterError("edge " + std::to_string(e) + " references an unknown vertex");
        if (a == b)
            throw EmbeddingError("edge " + std::to_string(e) + " is a loop");
        out[static_cast<std::size_t>(a)].push_back(2 * e);
        out[static_cast<std::size_t>(b)].push_back(2 * e + 1);
        for (int v : {a, b}) {
            const auto& vx = g.vertices_[static_cast<std::size_t>(v)];
            if (vx.color != Color::boundary)
                continue;
            auto& slot = g.graph_edge_at_boundary_[static_cast<std::size_t>(vx.label - 1)];
            if (slot != -1)
                throw ParameterError(describe(vx) + " is incident to more than one edge");
            slot = v == a ? 2 * e : 2 * e + 1;
        }
    }
    for (int i = 0; i < n; ++i)
        if (g.graph_edge_at_boundary_[static_cast<std::size_t>(i)] == -1)
            throw ParameterError("boundary " + std::to_string(i + 1) + " has no incident edge");

    // Boundary vertices must sit in clockwise order around their centroid.
    {
        Point c{0, 0};
        for (int b : g.boundary_) {
            c.x += g.vertices_[static_cast<std::size_t>(b)].pos.x;
            c.y += g.vertices_[static_cast<std::size_t>(b)].pos.y;
        }
        c.x /= n;
        c.y /= n;
        std::vector<int> order(g.boundary_.begin(), g.boundary_.end());
        for (int b : order)
            if (g.vertices_[static_cast<std::size_t>(b)].pos.x == c.x &&
                g.vertices_[static_cast<std::size_t>(b)].pos.y == c.y)
                throw EmbeddingError(describe(g.vertices_[static_cast<std::size_t>(b)]) + " sits at the boundary centroid");
        bool tie = false;
        std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
            int cmp = compare_angle(direction(c, g.vertices_[static_cast<std::size_t>(u)].pos),
                                    direction(c, g.vertices_[static_cast<std::size_t>(v)].pos));
            if (cmp == 0)
                tie = true;
            return cmp > 0; // clockwise = decreasing angle
        });
        if (tie)
            throw EmbeddingError("two boundary vertices lie on a common ray from the boundary centroid");
        auto first = std::find_if(order.begin(), order.end(),
                                  [&](int v) { return g.vertices_[static_cast<std::size_t>(v)].label == 1; });
        std::rotate(order.begin(), first, order.end());
        for (int i = 0; i < n; ++i)
            if (g.vertices_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].label != i + 1)
                throw EmbeddingError("boundary vertices are not labelled 1.." + std::to_string(n) + " clockwise");
    }

    g.rotation_.assign(static_cast<std::size_t>(nv), {});
    for (int v = 0; v < nv; ++v) {
        const auto& vx = g.vertices_[static_cast<std::size_t>(v)];
        auto& rot = g.rotation_[static_cast<std::size_t>(v)];
        if (vx.color == Color::boundary) {
            // The arcs are circle arcs: the inward edge always sits between them.
            const int i = vx.label;
            const int prev = (i + n - 2) % n + 1;
            rot = {2 * (ne + prev - 1) + 1, g.graph_edge_at_boundary_[static_cast<std::size_t>(i - 1)],
                   2 * (ne + i - 1)};
            continue;
        }
        rot = out[static_cast<std::size_t>(v)];
        bool tie = false;
        auto dir = [&](int h) {
            return direction(vx.pos, g.vertices_[static_cast<std::size_t>(g.tail(twin(h)))].pos);
        };
        std::stable_sort(rot.begin(), rot.end(), [&](int a, int b) {
            int cmp = compare_angle(dir(a), dir(b));
            if (cmp == 0 && a != b)
                tie = true;
            return cmp < 0;
        });
        if (tie)
            throw EmbeddingError("two edges leave " + describe(vx) + " in the same direction");
    }
    g.rotation_index_.assign(static_cast<std::size_t>(g.half_edge_count()), -1);
    for (const auto& rot : g.rotation_)
        for (std::size_t i = 0; i < rot.size(); ++i)
            g.rotation_index_[static_cast<std::size_t>(rot[i])] = static_cast<int>(i);

    g.faces_ = compute_faces(g);
    return g;
}

int PlabicGraph::tail(int h) const {
    const int e = edge_of(h);
    if (e < edge_count()) {
        const auto& [a, b] = edges_[static_cast<std::size_t>(e)];
        return (h & 1) ? b : a;
    }
    const int i = e - edge_count() + 1;
    const int next = i % n_ + 1;
    return (h & 1) ? boundary_[static_cast<std::size_t>(next - 1)] : boundary_[static_cast<std::size_t>(i - 1)];
}

int PlabicGraph::find_vertex(std::string_view id) const {
    auto it = index_by_id_.find(std::string(id));
    return it == index_by_id_.end() ? -1 : it->second;
}

int PlabicGraph::boundary_vertex(int label) const {
    if (label < 1 || label > n_)
        throw ParameterError("boundary label " + std::to_string(label) + " outside 1.." + std::to_string(n_));
    return boundary_[static_cast<std::size_t>(label - 1)];
}

int PlabicGraph::boundary_half_edge(int label) const {
    boundary_vertex(label);
    return graph_edge_at_boundary_[static_cast<std::size_t>(label - 1)];
}

int PlabicGraph::find_half_edge(int u, int v) const {
    for (int h : rotation(u))
        if (!is_arc(h) && head(h) == v)
            return h;
    return -1;
}

int PlabicGraph::ccw_next(int h) const {
    const auto& rot = rotation_[static_cast<std::size_t>(tail(h))];
    const auto i = static_cast<std::size_t>(rotation_index_[static_cast<std::size_t>(h)]);
    return rot[(i + 1) % rot.size()];
}

int PlabicGraph::ccw_prev(int h) const {
    const auto& rot = rotation_[static_cast<std::size_t>(tail(h))];
    const auto i = static_cast<std::size_t>(rotation_index_[static_cast<std::size_t>(h)]);
    return rot[(i + rot.size() - 1) % rot.size()];
}

Point PlabicGraph::face_centroid(int face) const {
    const auto& f = faces_.faces.at(static_cast<std::size_t>(face));
    Point c{0, 0};
    for (int h : f.boundary) {
        c.x += vertex(tail(h)).pos.x;
        c.y += vertex(tail(h)).pos.y;
    }
    const auto len = static_cast<long>(f.boundary.size());
    c.x /= len;
    c.y /= len;
    return c;
}

FaceStructure compute_faces(const PlabicGraph& g) {
    FaceStructure fs;
    const int nh = g.half_edge_count();
    fs.face_of.assign(static_cast<std::size_t>(nh), -2);
    const int outer_seed = 2 * g.edge_count(); // arc 1 -> 2
    std::vector<std::vector<int>> orbits;
    int outer_index = -1;
    for (int start = 0; start < nh; ++start) {
        if (fs.face_of[static_cast<std::size_t>(start)] != -2)
            continue;
        std::vector<int> orbit;
        int h = start;
        const int orbit_id = static_cast<int>(orbits.size());
        do {
            if (fs.face_of[static_cast<std::size_t>(h)] != -2)
                throw EmbeddingError("face traversal revisited a directed edge; rotation system is inconsistent");
            fs.face_of[static_cast<std::size_t>(h)] = orbit_id;
            orbit.push_back(h);
            h = g.ccw_prev(PlabicGraph::twin(h));
        } while (h != start);
        if (std::find(orbit.begin(), orbit.end(), outer_seed) != orbit.end())
            outer_index = orbit_id;
        orbits.push_back(std::move(orbit));
    }
    const long euler = static_cast<long>(g.vertex_count()) - (g.edge_count() + g.n()) + static_cast<long>(orbits.size());
    if (euler != 2) {
        std::ostringstream msg;
        msg << "Euler check failed: V - E + F = " << euler << " (V=" << g.vertex_count()
            << ", E=" << g.edge_count() + g.n() << " with arcs, F=" << orbits.size() << ")";
        throw EmbeddingError(msg.str());
    }
    std::vector<int> renumber(orbits.size(), -1);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (static_cast<int>(o) == outer_index) {
            fs.outer = orbits[o];
            continue;
        }
        renumber[o] = static_cast<int>(fs.faces.size());
        fs.faces.push_back(Face{static_cast<int>(fs.faces.size()), orbits[o]});
    }
    for (auto& f : fs.face_of)
        f = renumber[static_cast<std::size_t>(f)];
    return fs;
}

Trip trip(const PlabicGraph& g, int i) {
    Trip t;
    t.start = i;
    int h = g.boundary_half_edge(i);
    const std::size_t bound = 2 * static_cast<std::size_t>(g.edge_count());
    while (true) {
        t.steps.push_back(h);
        if (t.steps.size() > bound)
            throw StructuralError("trip from " + std::to_string(i) + " exceeds " + std::to_string(bound) +
                                  " steps; graph is not reduced or the embedding is broken");
        const auto& v = g.vertex(g.head(h));
        if (v.color == Color::boundary) {
            t.end = v.label;
            break;
        }
        const int back = PlabicGraph::twin(h);
        h = v.color == Color::black ? g.ccw_next(back) : g.ccw_prev(back);
    }
    if (t.end == i)
        throw StructuralError("trip from " + std::to_string(i) + " returns to its start (lollipop)");
    return t;
}

std::vector<int> trip_permutation(const PlabicGraph& g) {
    std::vector<int> pi;
    std::map<int, std::vector<int>> preimages;
    for (int i = 1; i <= g.n(); ++i) {
        pi.push_back(trip(g, i).end);
        preimages[pi.back()].push_back(i);
    }
    std::ostringstream collisions;
    for (const auto& [end, starts] : preimages) {
        if (starts.size() < 2)
            continue;
        collisions << " trips";
        for (int s : starts)
            collisions << ' ' << s;
        collisions << " all end at " << end << ';';
    }
    if (!collisions.str().empty())
        throw StructuralError("trip permutation is not a bijection:" + collisions.str());
    return pi;
}

std::vector<int> left_region(const PlabicGraph& g, std::span<const int> path) {
    if (path.empty())
        throw ParameterError("left_region: empty path");
    std::set<int> used_edges;
    for (std::size_t s = 0; s < path.size(); ++s) {
        const int h = path[s];
        if (h < 0 || h >= g.half_edge_count() || g.is_arc(h))
            throw ParameterError("left_region: step " + std::to_string(s) + " is not a graph half-edge");
        if (!used_edges.insert(PlabicGraph::edge_of(h)).second)
            throw ParameterError("left_region: walk uses an edge twice");
        if (s > 0 && g.head(path[s - 1]) != g.tail(h))
            throw ParameterError("left_region: walk is disconnected at step " + std::to_string(s));
    }
    if (g.vertex(g.tail(path.front())).color != Color::boundary ||
        g.vertex(g.head(path.back())).color != Color::boundary)
        throw ParameterError("left_region: walk must run between boundary vertices");

    std::vector<char> state(static_cast<std::size_t>(g.face_count()), 0); // 1 left, 2 right seed
    std::deque<int> queue;
    for (int h : path) {
        const int rf = g.face_of(PlabicGraph::twin(h));
        if (rf >= 0)
            state[static_cast<std::size_t>(rf)] = 2;
    }
    for (int h : path) {
        const int lf = g.face_of(h);
        if (lf < 0)
            continue;
        if (state[static_cast<std::size_t>(lf)] == 2)
            throw StructuralError("left_region: face " + std::to_string(lf) + " lies on both sides of the walk");
        if (state[static_cast<std::size_t>(lf)] == 0) {
            state[static_cast<std::size_t>(lf)] = 1;
            queue.push_back(lf);
        }
    }
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int h : g.faces()[static_cast<std::size_t>(f)].boundary) {
            if (g.is_arc(h) || used_edges.count(PlabicGraph::edge_of(h)))
                continue;
            const int other = g.face_of(PlabicGraph::twin(h));
            if (other < 0)
                continue;
            if (state[static_cast<std::size_t>(other)] == 2)
                throw StructuralError("left_region: flood fill reached a face right of the walk (separation failed)");
            if (state[static_cast<std::size_t>(other)] == 0) {
                state[static_cast<std::size_t>(other)] = 1;
                queue.push_back(other);
            }
        }
    }
    std::vector<int> region;
    for (int f = 0; f < g.face_count(); ++f)
        if (state[static_cast<std::size_t>(f)] == 1)
            region.push_back(f);
    return region;
}

std::vector<Subset> face_labelling(const PlabicGraph& g) {
    trip_permutation(g);
    std::vector<Subset> labels(static_cast<std::size_t>(g.face_count()));
    for (int i = 1; i <= g.n(); ++i) {
        const Trip t = trip(g, i);
        for (int f : left_region(g, t.steps))
            labels[static_cast<std::size_t>(f)].push_back(i);
    }
    std::map<Subset, int> seen;
    for (int f = 0; f < g.face_count(); ++f) {
        const auto& lab = labels[static_cast<std::size_t>(f)];
        if (lab.size() != labels.front().size())
            throw StructuralError("face labels have unequal cardinalities (" + std::to_string(lab.size()) + " vs " +
                                  std::to_string(labels.front().size()) + ")");
        auto [it, fresh] = seen.emplace(lab, f);
        if (!fresh)
            throw StructuralError("faces " + std::to_string(it->second) + " and " + std::to_string(f) +
                                  " share the label " + label_string(lab, g.n()));
    }
    return labels;
}

} // namespace plabic
