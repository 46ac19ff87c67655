#include "plabic/rec_family.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace plabic {

std::string_view role_name(Role r) {
    switch (r) {
    case Role::primal:
        return "primal";
    case Role::dual:
        return "dual";
    case Role::w0:
        return "w0";
    }
    return "?";
}

Role parse_role(std::string_view name) {
    if (name == "primal")
        return Role::primal;
    if (name == "dual")
        return Role::dual;
    if (name == "w0")
        return Role::w0;
    throw FormatError("unknown role '" + std::string(name) + "'");
}

namespace {

// Builds vertices/edges while remembering the orientation of each edge.
class GridBuilder {
public:
    int add(std::string id, Color color, Rational x, Rational y, int label = 0) {
        vertices_.push_back(Vertex{std::move(id), color, Point{std::move(x), std::move(y)}, label});
        return static_cast<int>(vertices_.size()) - 1;
    }
    void arrow(int tail, int head) {
        directed_.push_back(2 * static_cast<int>(edges_.size()));
        edges_.emplace_back(tail, head);
    }
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> directed_;
};

std::string site(char kind, int r, int c) { return std::string(1, kind) + std::to_string(r) + "_" + std::to_string(c); }

} // namespace

RecGraph build_rec(int k, int n) {
    if (k < 2 || k > n - 2)
        throw ParameterError("rec(k, n) needs 2 <= k <= n-2, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
    const int m = n - k;
    GridBuilder b;
    // white sites x(r,c), r = 1..m, c = 1..k-1; black sites y(r,c), r = 1..m-1, c = 1..k
    std::vector<std::vector<int>> w(static_cast<std::size_t>(m + 1), std::vector<int>(static_cast<std::size_t>(k), -1));
    std::vector<std::vector<int>> bl(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(k + 1), -1));
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= k - 1; ++c)
            w[r][c] = b.add(site('x', r, c), Color::white, 6 - 3 * c, 6 - 3 * r);
    for (int r = 1; r <= m - 1; ++r)
        for (int c = 1; c <= k; ++c)
            bl[r][c] = b.add(site('y', r, c), Color::black, 7 - 3 * c, 4 - 3 * r);

    // boundary sites: id o<position>, labelled by position in the primal graph
    std::vector<int> bd(static_cast<std::size_t>(n + 1), -1);
    auto boundary = [&](int label, Rational x, Rational y) {
        bd[static_cast<std::size_t>(label)] = b.add("o" + std::to_string(label), Color::boundary, std::move(x), std::move(y), label);
    };
    boundary(1, 6, 3);
    for (int r = 1; r <= m - 1; ++r)
        boundary(r + 1, 7, 4 - 3 * r);
    for (int c = 1; c <= k - 1; ++c)
        boundary(m + c, 6 - 3 * c, 3 - 3 * m);
    boundary(n, 7 - 3 * k, 4 - 3 * m);

    b.arrow(bd[1], w[1][1]);
    for (int c = 1; c <= k - 2; ++c)
        b.arrow(w[1][c], w[1][c + 1]);
    b.arrow(w[1][k - 1], bl[1][k]);
    for (int r = 1; r <= m - 1; ++r) {
        for (int c = 1; c <= k - 1; ++c) {
            b.arrow(w[r][c], bl[r][c]);
            b.arrow(bl[r][c], w[r + 1][c]);
            if (c == 1)
                b.arrow(bd[static_cast<std::size_t>(r + 1)], bl[r][1]);
            else
                b.arrow(w[r + 1][c - 1], bl[r][c]);
        }
        b.arrow(w[r + 1][k - 1], bl[r][k]);
        if (r < m - 1)
            b.arrow(bl[r][k], bl[r + 1][k]);
        else
            b.arrow(bl[r][k], bd[static_cast<std::size_t>(n)]);
    }
    for (int c = 1; c <= k - 1; ++c)
        b.arrow(w[m][c], bd[static_cast<std::size_t>(m + c)]);

    auto graph = PlabicGraph::create(n, std::move(b.vertices_), std::move(b.edges_));
    PerfectOrientation o;
    o.directed = std::move(b.directed_);
    o.sources = source_set(graph, o.directed);
    o.acyclic = is_acyclic(graph, o.directed);
    if (auto problems = verify_perfect(graph, o); !problems.empty() || !o.acyclic)
        throw StructuralError("canonical orientation of rec(" + std::to_string(k) + "," + std::to_string(n) +
                              ") is not perfect and acyclic");
    auto labels = face_labelling(graph);
    return RecGraph{k, n, Role::primal, std::move(graph), std::move(o), std::move(labels)};
}

RecGraph dualize(const RecGraph& primal) {
    if (primal.role != Role::primal)
        throw ParameterError("dualize expects a primal rec graph");
    const int k = primal.k;
    const int n = primal.n;
    std::vector<Vertex> vertices(primal.graph.vertices().begin(), primal.graph.vertices().end());
    for (auto& v : vertices) {
        if (v.color == Color::black)
            v.color = Color::white;
        else if (v.color == Color::white)
            v.color = Color::black;
        else
            v.label = (v.label + k - 1) % n + 1;
    }
    std::vector<std::pair<int, int>> edges(primal.graph.edges().begin(), primal.graph.edges().end());
    auto graph = PlabicGraph::create(n, std::move(vertices), std::move(edges));
    PerfectOrientation o;
    for (int h : primal.orientation.directed)
        o.directed.push_back(PlabicGraph::twin(h));
    o.sources = source_set(graph, o.directed);
    o.acyclic = is_acyclic(graph, o.directed);
    auto labels = face_labelling(graph);
    return RecGraph{k, n, Role::dual, std::move(graph), std::move(o), std::move(labels)};
}

RecGraph apply_w0(const RecGraph& primal) {
    if (primal.role != Role::primal)
        throw ParameterError("apply_w0 expects a primal rec graph");
    RecGraph out = primal;
    out.role = Role::w0;
    for (auto& label : out.labels) {
        for (int& i : label)
            i = primal.n + 1 - i;
        std::sort(label.begin(), label.end());
    }
    return out;
}

Subset source_set(const PlabicGraph& g, const std::vector<int>& directed) {
    Subset s;
    for (int i = 1; i <= g.n(); ++i) {
        const int h = g.boundary_half_edge(i);
        if (directed.at(static_cast<std::size_t>(PlabicGraph::edge_of(h))) == h)
            s.push_back(i);
    }
    return s;
}

bool is_acyclic(const PlabicGraph& g, const std::vector<int>& directed) {
    std::vector<int> indegree(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(g.vertex_count()));
    for (int h : directed) {
        succ[static_cast<std::size_t>(g.tail(h))].push_back(g.head(h));
        ++indegree[static_cast<std::size_t>(g.head(h))];
    }
    std::deque<int> ready;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0)
            ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop_front();
        ++seen;
        for (int u : succ[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(u)] == 0)
                ready.push_back(u);
    }
    return seen == g.vertex_count();
}

std::vector<std::string> verify_perfect(const PlabicGraph& g, const PerfectOrientation& o) {
    std::vector<std::string> problems;
    if (static_cast<int>(o.directed.size()) != g.edge_count()) {
        problems.push_back("orientation covers " + std::to_string(o.directed.size()) + " of " +
                           std::to_string(g.edge_count()) + " edges");
        return problems;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const int h = o.directed[static_cast<std::size_t>(e)];
        if (PlabicGraph::edge_of(h) != e)
            problems.push_back("entry " + std::to_string(e) + " is not a half-edge of edge " + std::to_string(e));
    }
    if (!problems.empty())
        return problems;
    std::vector<int> outdeg(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> indeg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int h : o.directed) {
        ++outdeg[static_cast<std::size_t>(g.tail(h))];
        ++indeg[static_cast<std::size_t>(g.head(h))];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& vx = g.vertex(v);
        if (vx.color == Color::black && outdeg[static_cast<std::size_t>(v)] != 1)
            problems.push_back("black vertex '" + vx.id + "' has " + std::to_string(outdeg[static_cast<std::size_t>(v)]) +
                               " outgoing edges");
        if (vx.color == Color::white && indeg[static_cast<std::size_t>(v)] != 1)
            problems.push_back("white vertex '" + vx.id + "' has " + std::to_string(indeg[static_cast<std::size_t>(v)]) +
                               " incoming edges");
    }
    if (source_set(g, o.directed) != o.sources)
        problems.push_back("recorded source set does not match the boundary edge directions");
    return problems;
}

int feasible_source_count(const PlabicGraph& g) {
    // every edge contributes one out-degree: E = #black + sum_white (deg - 1) + |I_O|
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [a, b] : g.edges()) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    int count = g.edge_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.vertex(v).color == Color::black)
            count -= 1;
        else if (g.vertex(v).color == Color::white)
            count -= degree[static_cast<std::size_t>(v)] - 1;
    }
    return count;
}

namespace {

class OrientationSolver {
public:
    OrientationSolver(const PlabicGraph& g, const Subset& sources) : g_(g) {
        incident_.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            incident_[static_cast<std::size_t>(a)].push_back(2 * e);
            incident_[static_cast<std::size_t>(b)].push_back(2 * e + 1);
        }
        state_.assign(static_cast<std::size_t>(g.edge_count()), -1);
        for (int i = 1; i <= g.n(); ++i) {
            const int h = g.boundary_half_edge(i);
            state_[static_cast<std::size_t>(PlabicGraph::edge_of(h))] = contains(sources, i) ? h : PlabicGraph::twin(h);
        }
    }

    void run() {
        auto st = state_;
        if (propagate(st))
            search(st);
    }

    std::optional<PerfectOrientation> best_;
    bool found_acyclic_ = false;

private:
    // Returns false on a contradiction.
    bool propagate(std::vector<int>& st) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g_.vertex_count(); ++v) {
                const Color c = g_.vertex(v).color;
                if (c == Color::boundary)
                    continue;
                // count half-edges out of v that are chosen in the "special" direction:
                // outgoing for black, incoming for white
                int special = 0;
                int open = 0;
                for (int h : incident_[static_cast<std::size_t>(v)]) {
                    const int d = st[static_cast<std::size_t>(PlabicGraph::edge_of(h))];
                    if (d == -1)
                        ++open;
                    else if ((c == Color::black) == (d == h))
                        ++special;
                }
                if (special > 1 || (special == 0 && open == 0))
                    return false;
                if (open == 0)
                    continue;
                if (special == 1 || open == 1) {
                    for (int h : incident_[static_cast<std::size_t>(v)]) {
                        auto& d = st[static_cast<std::size_t>(PlabicGraph::edge_of(h))];
                        if (d != -1)
                            continue;
                        const bool make_special = special == 0; // the single open edge
                        const bool outgoing = (c == Color::black) == make_special;
                        d = outgoing ? h : PlabicGraph::twin(h);
                    }
                    changed = true;
                }
            }
        }
        return true;
    }

    void search(std::vector<int>& st) {
        if (found_acyclic_)
            return;
        auto open = std::find(st.begin(), st.end(), -1);
        if (open == st.end()) {
            const bool acyclic = is_acyclic(g_, st);
            if (!best_ || acyclic) {
                best_ = PerfectOrientation{st, source_set(g_, st), acyclic};
                found_acyclic_ = acyclic;
            }
            return;
        }
        const int e = static_cast<int>(open - st.begin());
        for (int h : {2 * e, 2 * e + 1}) {
            auto next = st;
            next[static_cast<std::size_t>(e)] = h;
            if (propagate(next))
                search(next);
            if (found_acyclic_)
                return;
        }
    }

    const PlabicGraph& g_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> state_;
};

} // namespace

OrientationSearch find_perfect_orientation(const PlabicGraph& g, const Subset& sources) {
    for (int s : sources)
        if (s < 1 || s > g.n())
            throw ParameterError("source " + std::to_string(s) + " is not a boundary label");
    const int needed = feasible_source_count(g);
    if (static_cast<int>(sources.size()) != needed)
        throw ParameterError("source set has " + std::to_string(sources.size()) + " elements; this graph needs " +
                             std::to_string(needed));
    OrientationSolver solver(g, sources);
    solver.run();
    OrientationSearch result;
    if (solver.best_)
        result.orientation = std::move(solver.best_);
    else
        result.reason = "no perfect orientation has source set " + label_string(sources, g.n());
    return result;
}

} // namespace plabic
