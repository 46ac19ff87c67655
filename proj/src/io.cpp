#include "plabic/io.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace plabic {

namespace {

Rational read_coordinate(const Json& v) {
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(static_cast<long>(v.get<std::int64_t>()));
    throw FormatError("coordinates must be integers or \"p/q\" strings");
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Json subset_json(const Subset& s) {
    Json a = Json::array();
    for (int x : s)
        a.push_back(x);
    return a;
}

} // namespace

Json graph_to_json(const PlabicGraph& g, const PerfectOrientation* o) {
    Json j;
    j["n"] = g.n();
    Json vs = Json::array();
    for (const auto& v : g.vertices()) {
        Json jv;
        jv["id"] = v.id;
        jv["color"] = std::string(color_name(v.color));
        jv["pos"] = Json::array({to_string(v.pos.x), to_string(v.pos.y)});
        if (v.color == Color::boundary)
            jv["label"] = v.label;
        vs.push_back(std::move(jv));
    }
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (auto [a, b] : g.edges())
        es.push_back(Json::array({g.vertex(a).id, g.vertex(b).id}));
    j["edges"] = std::move(es);
    if (o) {
        Json os = Json::array();
        for (int h : o->directed)
            os.push_back(Json::array({g.vertex(g.tail(h)).id, g.vertex(g.head(h)).id}));
        j["orientation"] = std::move(os);
    }
    return j;
}

Json graph_to_json(const RecGraph& r) {
    Json j;
    j["k"] = r.k;
    j["role"] = std::string(role_name(r.role));
    j["source_set"] = subset_json(r.orientation.sources);
    const Json body = graph_to_json(r.graph, &r.orientation);
    for (auto it = body.begin(); it != body.end(); ++it)
        j[it.key()] = it.value();
    return j;
}

GraphFile graph_from_json(const Json& j) {
    try {
        const int n = require(j, "n").get<int>();
        std::vector<Vertex> vertices;
        for (const auto& jv : require(j, "vertices")) {
            Vertex v;
            v.id = require(jv, "id").get<std::string>();
            v.color = parse_color(require(jv, "color").get<std::string>());
            const auto& pos = require(jv, "pos");
            if (!pos.is_array() || pos.size() != 2)
                throw FormatError("vertex '" + v.id + "': pos must have two entries");
            v.pos = Point{read_coordinate(pos[0]), read_coordinate(pos[1])};
            if (v.color == Color::boundary)
                v.label = require(jv, "label").get<int>();
            vertices.push_back(std::move(v));
        }
        auto index_of = [&](const std::string& id) {
            for (std::size_t i = 0; i < vertices.size(); ++i)
                if (vertices[i].id == id)
                    return static_cast<int>(i);
            throw FormatError("unknown vertex id '" + id + "'");
        };
        std::vector<std::pair<int, int>> edges;
        for (const auto& je : require(j, "edges")) {
            if (!je.is_array() || je.size() != 2)
                throw FormatError("edges must be id pairs");
            edges.emplace_back(index_of(je[0].get<std::string>()), index_of(je[1].get<std::string>()));
        }
        GraphFile out{PlabicGraph::create(n, std::move(vertices), std::move(edges)), std::nullopt, std::nullopt,
                      std::nullopt};
        const auto& g = out.graph;
        if (j.contains("orientation")) {
            PerfectOrientation o;
            o.directed.assign(static_cast<std::size_t>(g.edge_count()), -1);
            for (const auto& je : j.at("orientation")) {
                if (!je.is_array() || je.size() != 2)
                    throw FormatError("orientation entries must be [tail, head] pairs");
                const int h = g.find_half_edge(g.find_vertex(je[0].get<std::string>()),
                                               g.find_vertex(je[1].get<std::string>()));
                if (h < 0)
                    throw FormatError("orientation names a non-edge " + je.dump());
                auto& slot = o.directed[static_cast<std::size_t>(PlabicGraph::edge_of(h))];
                if (slot >= 0)
                    throw FormatError("edge oriented twice: " + je.dump());
                slot = h;
            }
            if (std::find(o.directed.begin(), o.directed.end(), -1) != o.directed.end())
                throw FormatError("orientation does not cover every edge");
            o.sources = source_set(g, o.directed);
            o.acyclic = is_acyclic(g, o.directed);
            if (j.contains("source_set") && make_subset(j.at("source_set").get<std::vector<int>>()) != o.sources)
                throw FormatError("declared source_set does not match the orientation");
            out.orientation = std::move(o);
        }
        if (j.contains("k"))
            out.k = j.at("k").get<int>();
        if (j.contains("role"))
            out.role = parse_role(j.at("role").get<std::string>());
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed graph file: ") + e.what());
    }
}

RecGraph rec_graph_from_json(const Json& j) {
    auto file = graph_from_json(j);
    if (!file.k || !file.role || !file.orientation)
        throw FormatError("rec graph files need 'k', 'role' and 'orientation'");
    auto problems = verify_perfect(file.graph, *file.orientation);
    if (!problems.empty())
        throw FormatError("orientation is not perfect: " + problems.front());
    auto labels = face_labelling(file.graph);
    if (*file.role == Role::w0)
        for (auto& label : labels) {
            for (int& i : label)
                i = file.graph.n() + 1 - i;
            std::sort(label.begin(), label.end());
        }
    const int n = file.graph.n();
    return RecGraph{*file.k, n, *file.role, std::move(file.graph), std::move(*file.orientation), std::move(labels)};
}

Json polynomial_to_json(const FlowPolynomial& p, const FaceBasis& basis) {
    const auto names = basis.names();
    Json j;
    j["J"] = subset_json(p.J);
    Json terms = Json::array();
    for (const auto& [e, c] : p.poly.terms()) {
        Json t;
        t["coeff"] = to_int64(c);
        Json ex = Json::object();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                ex[names[i]] = e[i];
        t["exponents"] = std::move(ex);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

std::string polynomial_string(const FlowPolynomial& p, const FaceBasis& basis) {
    if (p.poly.is_zero())
        return "0";
    const auto names = basis.names();
    std::string out;
    for (const auto& [e, c] : p.poly.terms()) {
        std::string term;
        if (c != 1)
            term = to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i])
                continue;
            if (!term.empty())
                term += "*";
            term += "x" + names[i];
            if (e[i] > 1)
                term += "^" + std::to_string(e[i]);
        }
        if (term.empty())
            term = "1";
        if (!out.empty())
            out += " + ";
        out += term;
    }
    return out;
}

Json hrep_to_json(const HRep& h) {
    Json j;
    j["vars"] = h.vars;
    Json rows = Json::array();
    for (const auto& q : h.ineqs) {
        Json row;
        Json coeffs = Json::object();
        for (std::size_t i = 0; i < q.coeffs.size(); ++i)
            if (q.coeffs[i])
                coeffs[h.vars[i]] = q.coeffs[i];
        row["coeffs"] = std::move(coeffs);
        row["rel"] = q.rel == Relation::le ? "<=" : ">=";
        row["rhs"] = q.rhs;
        rows.push_back(std::move(row));
    }
    j["ineqs"] = std::move(rows);
    return j;
}

HRep hrep_from_json(const Json& j) {
    try {
        HRep h;
        h.vars = require(j, "vars").get<std::vector<std::string>>();
        for (const auto& row : require(j, "ineqs")) {
            Inequality q;
            q.coeffs.assign(h.vars.size(), 0);
            for (const auto& [name, c] : require(row, "coeffs").items()) {
                auto it = std::find(h.vars.begin(), h.vars.end(), name);
                if (it == h.vars.end())
                    throw FormatError("unknown variable '" + name + "'");
                q.coeffs[static_cast<std::size_t>(it - h.vars.begin())] = c.get<std::int64_t>();
            }
            const auto rel = require(row, "rel").get<std::string>();
            if (rel == "<=")
                q.rel = Relation::le;
            else if (rel == ">=")
                q.rel = Relation::ge;
            else
                throw FormatError("unknown relation '" + rel + "'");
            q.rhs = require(row, "rhs").get<std::int64_t>();
            h.ineqs.push_back(std::move(q));
        }
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed inequality file: ") + e.what());
    }
}

Json point_set_to_json(const LatticePointSet& s) {
    Json j;
    j["basis"] = s.basis;
    Json pts = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        Json p;
        if (!s.provenance.empty())
            p["J"] = s.provenance[i];
        p["point"] = s.points[i];
        pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    return j;
}

std::string point_set_csv(const LatticePointSet& s) {
    std::ostringstream out;
    const bool prov = !s.provenance.empty();
    if (prov)
        out << "J";
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        out << (i || prov ? "," : "") << s.basis[i];
    out << "\n";
    for (std::size_t r = 0; r < s.size(); ++r) {
        if (prov)
            out << '"' << s.provenance[r] << '"';
        for (std::size_t i = 0; i < s.points[r].size(); ++i)
            out << (i || prov ? "," : "") << s.points[r][i];
        out << "\n";
    }
    return out.str();
}

Json certificate_to_json(const EquivalenceCertificate& c) {
    Json j;
    j["k"] = c.k;
    j["n"] = c.n;
    j["status"] = c.certified() ? "certified" : "failed";
    j["determinant"] = to_string(c.determinant);
    Json m;
    m["rows"] = c.map.row_labels;
    m["cols"] = c.map.col_labels;
    m["entries"] = c.map.entries;
    j["map"] = std::move(m);
    Json checks = Json::array();
    for (const auto& ch : c.checks)
        checks.push_back(Json{{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
    j["checks"] = std::move(checks);
    Json table = Json::array();
    for (const auto& b : c.bijection) {
        Json row;
        row["J"] = subset_json(b.J);
        Json a = Json::array();
        for (int e : b.antichain)
            a.push_back(c.map.col_labels.at(static_cast<std::size_t>(e)));
        row["antichain"] = std::move(a);
        row["source"] = b.source;
        row["target"] = b.target;
        table.push_back(std::move(row));
    }
    j["bijection"] = std::move(table);
    return j;
}

std::string certificate_summary(const EquivalenceCertificate& c) {
    std::ostringstream out;
    out << "k=" << c.k << " n=" << c.n << ": " << (c.certified() ? "certified" : "FAILED") << "\n";
    for (const auto& ch : c.checks)
        out << "  " << (ch.passed ? "ok   " : "FAIL ") << ch.name << ": " << ch.detail << "\n";
    return out.str();
}

namespace {

struct Frame {
    double min_x, max_x, min_y, max_y;
};

Frame frame_of(const PlabicGraph& g) {
    Frame f{1e300, -1e300, 1e300, -1e300};
    for (const auto& v : g.vertices()) {
        const double x = v.pos.x.get_d(), y = v.pos.y.get_d();
        f.min_x = std::min(f.min_x, x);
        f.max_x = std::max(f.max_x, x);
        f.min_y = std::min(f.min_y, y);
        f.max_y = std::max(f.max_y, y);
    }
    return f;
}

std::string num(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v;
    return s.str();
}

std::string title(const RecGraph& r) {
    return std::string("rec(") + std::to_string(r.k) + "," + std::to_string(r.n) + ") " + std::string(role_name(r.role));
}

} // namespace

std::string to_dot(const RecGraph& r) {
    const auto& g = r.graph;
    std::ostringstream out;
    out << "digraph rec {\n  label=\"" << title(r) << "\";\n  node [shape=circle, fixedsize=true, width=0.3, label=\"\"];\n";
    for (const auto& v : g.vertices()) {
        out << "  \"" << v.id << "\" [pos=\"" << num(v.pos.x.get_d()) << "," << num(v.pos.y.get_d()) << "!\"";
        if (v.color == Color::black)
            out << ", style=filled, fillcolor=black";
        else if (v.color == Color::boundary)
            out << ", shape=plaintext, label=\"" << v.label << "\"";
        out << "];\n";
    }
    for (int h : r.orientation.directed)
        out << "  \"" << g.vertex(g.tail(h)).id << "\" -> \"" << g.vertex(g.head(h)).id << "\";\n";
    for (int f = 0; f < g.face_count(); ++f) {
        const auto c = g.face_centroid(f);
        out << "  \"face" << f << "\" [shape=plaintext, label=\"" << label_string(r.labels[f], r.n) << "\", pos=\""
            << num(c.x.get_d()) << "," << num(c.y.get_d()) << "!\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_svg(const RecGraph& r) {
    const auto& g = r.graph;
    const Frame f = frame_of(g);
    const double scale = 40, pad = 40;
    auto sx = [&](const Rational& x) { return pad + (x.get_d() - f.min_x) * scale; };
    auto sy = [&](const Rational& y) { return pad + (f.max_y - y.get_d()) * scale; };
    const double w = 2 * pad + (f.max_x - f.min_x) * scale, h = 2 * pad + (f.max_y - f.min_y) * scale;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\">\n";
    out << "<title>" << title(r) << "</title>\n";
    out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"16\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n";
    // disk boundary through the boundary vertices
    out << "<polygon fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\" points=\"";
    for (int i = 1; i <= g.n(); ++i) {
        const auto& v = g.vertex(g.boundary_vertex(i));
        out << (i > 1 ? " " : "") << num(sx(v.pos.x)) << "," << num(sy(v.pos.y));
    }
    out << "\"/>\n";
    for (int hh : r.orientation.directed) {
        const auto& a = g.vertex(g.tail(hh));
        const auto& b = g.vertex(g.head(hh));
        out << "<line x1=\"" << num(sx(a.pos.x)) << "\" y1=\"" << num(sy(a.pos.y)) << "\" x2=\"" << num(sx(b.pos.x))
            << "\" y2=\"" << num(sy(b.pos.y)) << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (const auto& v : g.vertices()) {
        const auto x = num(sx(v.pos.x)), y = num(sy(v.pos.y));
        if (v.color == Color::boundary) {
            out << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"14\" text-anchor=\"middle\" fill=\"blue\">"
                << v.label << "</text>\n";
        } else {
            out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"6\" stroke=\"black\" fill=\""
                << (v.color == Color::black ? "black" : "white") << "\"/>\n";
        }
    }
    for (int fc = 0; fc < g.face_count(); ++fc) {
        const auto c = g.face_centroid(fc);
        out << "<text x=\"" << num(sx(c.x)) << "\" y=\"" << num(sy(c.y)) << "\" font-size=\"11\" text-anchor=\"middle\">"
            << label_string(r.labels[fc], r.n) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string to_tikz(const RecGraph& r) {
    const auto& g = r.graph;
    std::ostringstream out;
    out << "% " << title(r) << "\n\\begin{tikzpicture}[scale=0.6,\n"
        << "  bl/.style={circle,fill=black,inner sep=2pt},\n"
        << "  wh/.style={circle,draw=black,fill=white,inner sep=2pt},\n"
        << "  bd/.style={inner sep=1pt,text=blue}]\n";
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        const auto& v = g.vertices()[i];
        const char* style = v.color == Color::black ? "bl" : v.color == Color::white ? "wh" : "bd";
        out << "  \\node[" << style << "] (v" << i << ") at (" << num(v.pos.x.get_d()) << "," << num(v.pos.y.get_d())
            << ") {" << (v.color == Color::boundary ? std::to_string(v.label) : "") << "};\n";
    }
    for (int h : r.orientation.directed)
        out << "  \\draw[->] (v" << g.tail(h) << ") -- (v" << g.head(h) << ");\n";
    for (int f = 0; f < g.face_count(); ++f) {
        const auto c = g.face_centroid(f);
        out << "  \\node at (" << num(c.x.get_d()) << "," << num(c.y.get_d()) << ") {\\small "
            << label_string(r.labels[f], r.n) << "};\n";
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
}

} // namespace plabic
