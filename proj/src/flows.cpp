#include "plabic/flows.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace plabic {

std::vector<std::string> FaceBasis::names() const {
    std::vector<std::string> out;
    for (const auto& l : labels)
        out.push_back(label_string(l, n));
    return out;
}

FaceBasis face_basis(const RecGraph& r) {
    FaceBasis b;
    b.n = r.n;
    b.faces.resize(r.labels.size());
    std::iota(b.faces.begin(), b.faces.end(), 0);
    std::sort(b.faces.begin(), b.faces.end(), [&](int x, int y) {
        return r.labels[static_cast<std::size_t>(x)] < r.labels[static_cast<std::size_t>(y)];
    });
    b.position.assign(r.labels.size(), -1);
    for (std::size_t p = 0; p < b.faces.size(); ++p) {
        b.position[static_cast<std::size_t>(b.faces[p])] = static_cast<int>(p);
        b.labels.push_back(r.labels[static_cast<std::size_t>(b.faces[p])]);
    }
    return b;
}

namespace {

Exponent weight_in_basis(const RecGraph& r, const FaceBasis& basis, const Path& path) {
    Exponent e(basis.size(), 0);
    for (int f : left_region(r.graph, path))
        e[static_cast<std::size_t>(basis.position[static_cast<std::size_t>(f)])] = 1;
    return e;
}

void check_flow_target(const RecGraph& r, const Subset& J) {
    if (J.size() != r.orientation.sources.size())
        throw ParameterError("|J| = " + std::to_string(J.size()) + " but the orientation has " +
                             std::to_string(r.orientation.sources.size()) + " sources");
    if (!std::is_sorted(J.begin(), J.end()) || std::adjacent_find(J.begin(), J.end()) != J.end())
        throw ParameterError("J must be a strictly increasing list");
    for (int j : J)
        if (j < 1 || j > r.n)
            throw ParameterError("J contains " + std::to_string(j) + ", outside 1.." + std::to_string(r.n));
}

} // namespace

std::vector<Path> enumerate_paths(const RecGraph& r, int i, int j) {
    const auto& g = r.graph;
    if (i == j)
        throw ParameterError("path endpoints coincide");
    if (i < 1 || i > r.n || j < 1 || j > r.n)
        throw ParameterError("path endpoints must be boundary labels");
    if (!contains(r.orientation.sources, i))
        throw ParameterError(std::to_string(i) + " is not a boundary source");
    if (contains(r.orientation.sources, j))
        throw ParameterError(std::to_string(j) + " is not a boundary sink");
    if (!r.orientation.acyclic)
        throw ParameterError("path enumeration needs an acyclic orientation");

    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.vertex_count()));
    for (int h : r.orientation.directed)
        out[static_cast<std::size_t>(g.tail(h))].push_back(h);
    for (auto& o : out)
        std::sort(o.begin(), o.end());

    const int target = g.boundary_vertex(j);
    std::vector<Path> result;
    Path current;
    std::function<void(int)> dfs = [&](int v) {
        if (v == target) {
            result.push_back(current);
            return;
        }
        if (g.vertex(v).color == Color::boundary && !current.empty())
            return;
        for (int h : out[static_cast<std::size_t>(v)]) {
            current.push_back(h);
            dfs(g.head(h));
            current.pop_back();
        }
    };
    dfs(g.boundary_vertex(i));
    return result;
}

Exponent path_weight(const RecGraph& r, const Path& path) {
    if (path.empty())
        throw ParameterError("path_weight: empty path");
    return weight_in_basis(r, face_basis(r), path);
}

Exponent flow_weight(const RecGraph& r, const Flow& flow) {
    const auto basis = face_basis(r);
    Exponent e(basis.size(), 0);
    for (const auto& p : flow.paths)
        e = add(e, weight_in_basis(r, basis, p));
    return e;
}

FlowEngine::FlowEngine(const RecGraph& r) : r_(r), basis_(face_basis(r)) {}

void FlowEngine::ensure(int i, int j) {
    const auto key = std::make_pair(i, j);
    if (paths_.count(key))
        return;
    auto ps = enumerate_paths(r_, i, j);
    std::vector<Exponent> ws;
    for (const auto& p : ps)
        ws.push_back(weight_in_basis(r_, basis_, p));
    paths_.emplace(key, std::move(ps));
    weights_.emplace(key, std::move(ws));
}

const std::vector<Path>& FlowEngine::paths(int i, int j) {
    ensure(i, j);
    return paths_.at({i, j});
}

const std::vector<Exponent>& FlowEngine::weights(int i, int j) {
    ensure(i, j);
    return weights_.at({i, j});
}

namespace {

// Calls visit(chosen) for every flow; chosen[s] = (sink, path index) of source s.
template <typename Visit>
void for_each_flow(FlowEngine& engine, const Subset& J, Visit&& visit) {
    const auto& r = engine.graph();
    check_flow_target(r, J);
    const Subset sources = set_difference(r.orientation.sources, J);
    const Subset sinks = set_difference(J, r.orientation.sources);
    const auto& g = r.graph;
    std::vector<char> used_vertex(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> used_sink(sinks.size(), 0);
    std::vector<std::pair<int, int>> chosen(sources.size());

    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == sources.size()) {
            visit(sources, chosen);
            return;
        }
        for (std::size_t t = 0; t < sinks.size(); ++t) {
            if (used_sink[t])
                continue;
            const auto& ps = engine.paths(sources[s], sinks[t]);
            for (std::size_t p = 0; p < ps.size(); ++p) {
                const auto& path = ps[p];
                bool clash = false;
                for (int h : path)
                    if (used_vertex[static_cast<std::size_t>(g.tail(h))] ||
                        used_vertex[static_cast<std::size_t>(g.head(h))]) {
                        clash = true;
                        break;
                    }
                if (clash)
                    continue;
                for (int h : path) {
                    used_vertex[static_cast<std::size_t>(g.tail(h))] = 1;
                    used_vertex[static_cast<std::size_t>(g.head(h))] = 1;
                }
                used_sink[t] = 1;
                chosen[s] = {sinks[t], static_cast<int>(p)};
                rec(s + 1);
                used_sink[t] = 0;
                for (int h : path) {
                    used_vertex[static_cast<std::size_t>(g.tail(h))] = 0;
                    used_vertex[static_cast<std::size_t>(g.head(h))] = 0;
                }
            }
        }
    };
    rec(0);
}

} // namespace

std::vector<Flow> FlowEngine::flows(const Subset& J) {
    std::vector<Flow> out;
    for_each_flow(*this, J, [&](const Subset& sources, const std::vector<std::pair<int, int>>& chosen) {
        Flow f;
        for (std::size_t s = 0; s < sources.size(); ++s)
            f.paths.push_back(paths(sources[s], chosen[s].first)[static_cast<std::size_t>(chosen[s].second)]);
        out.push_back(std::move(f));
    });
    return out;
}

FlowPolynomial FlowEngine::polynomial(const Subset& J) {
    FlowPolynomial fp{J, Polynomial(basis_.size())};
    for_each_flow(*this, J, [&](const Subset& sources, const std::vector<std::pair<int, int>>& chosen) {
        Exponent e(basis_.size(), 0);
        for (std::size_t s = 0; s < sources.size(); ++s)
            e = add(e, weights(sources[s], chosen[s].first)[static_cast<std::size_t>(chosen[s].second)]);
        fp.poly.add_term(e, 1);
    });
    return fp;
}

std::vector<FlowPolynomial> FlowEngine::all_polynomials() {
    std::vector<FlowPolynomial> out;
    for (const auto& J : subsets_of_size(r_.n, static_cast<int>(r_.orientation.sources.size())))
        out.push_back(polynomial(J));
    return out;
}

std::vector<Flow> enumerate_flows(const RecGraph& r, const Subset& J) {
    FlowEngine engine(r);
    return engine.flows(J);
}

FlowPolynomial flow_polynomial(const RecGraph& r, const Subset& J) {
    FlowEngine engine(r);
    return engine.polynomial(J);
}

std::optional<Path> minimal_path(FlowEngine& engine, int i, int j) {
    const auto& ws = engine.weights(i, j);
    for (std::size_t a = 0; a < ws.size(); ++a) {
        bool below_all = true;
        for (std::size_t b = 0; b < ws.size() && below_all; ++b)
            below_all = dominated_by(ws[a], ws[b]);
        if (below_all)
            return engine.paths(i, j)[a];
    }
    return std::nullopt;
}

StronglyMinimalResult strongly_minimal_flow(FlowEngine& engine, const Subset& J) {
    const auto& r = engine.graph();
    check_flow_target(r, J);
    StronglyMinimalResult res;
    const Subset removed = set_difference(r.orientation.sources, J);
    Subset added = set_difference(J, r.orientation.sources);
    std::reverse(added.begin(), added.end());

    const auto& g = r.graph;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    res.weight.assign(engine.basis().size(), 0);
    for (std::size_t l = 0; l < removed.size(); ++l) {
        const int i = removed[l];
        const int j = added[l];
        auto path = minimal_path(engine, i, j);
        if (!path) {
            res.reason = "no path from " + std::to_string(i) + " to " + std::to_string(j) + " has coordinatewise minimal weight";
            return res;
        }
        std::vector<int> on_path{g.tail(path->front())};
        for (int h : *path)
            on_path.push_back(g.head(h));
        for (int v : on_path)
            if (used[static_cast<std::size_t>(v)]) {
                res.reason = "minimal paths for the pairs share vertex '" + g.vertex(v).id + "'";
                return res;
            }
        for (int v : on_path)
            used[static_cast<std::size_t>(v)] = 1;
        res.weight = add(res.weight, weight_in_basis(r, engine.basis(), *path));
        res.flow.paths.push_back(std::move(*path));
        res.pairs.emplace_back(i, j);
    }
    const auto poly = engine.polynomial(J);
    for (const auto& [e, c] : poly.poly.terms()) {
        if (!dominated_by(res.weight, e)) {
            res.reason = "the paired minimal flow is not below every term of P_" + label_string(J, r.n);
            return res;
        }
    }
    auto it = poly.poly.terms().find(res.weight);
    if (it == poly.poly.terms().end() || it->second != 1) {
        res.reason = "the minimal weight of P_" + label_string(J, r.n) + " is not attained by exactly one flow";
        return res;
    }
    res.found = true;
    return res;
}

StronglyMinimalResult strongly_minimal_flow(const RecGraph& r, const Subset& J) {
    FlowEngine engine(r);
    return strongly_minimal_flow(engine, J);
}

std::vector<Rational> positive_sample(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) {
        const unsigned long p = static_cast<unsigned long>(rng() % 1000 + 1);
        const unsigned long q = static_cast<unsigned long>(rng() % 1000 + 1);
        Rational v(p, q);
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

PlueckerReport pluecker_check(const RecGraph& r, PlueckerMode mode, std::uint64_t seed) {
    PlueckerReport report;
    report.mode = mode;
    report.seed = seed;
    FlowEngine engine(r);
    const int n = r.n;
    const int m = static_cast<int>(r.orientation.sources.size());
    std::map<Subset, Polynomial> P;
    for (auto& fp : engine.all_polynomials())
        P.emplace(fp.J, std::move(fp.poly));

    std::map<Subset, Rational> value;
    if (mode == PlueckerMode::numeric) {
        const auto point = positive_sample(engine.basis().size(), seed);
        for (const auto& [J, poly] : P) {
            Rational v = poly.evaluate(point);
            ++report.values_checked;
            if (v <= 0) {
                report.all_positive = false;
                report.failures.push_back("P_" + label_string(J, n) + " is not positive at the sample point");
            }
            value.emplace(J, v);
        }
    }
    if (m < 2)
        return report;

    const int s_size = m - 2;
    for (const auto& S : subsets_of_size(n, s_size)) {
        const Subset rest = complement(S, n);
        const int rn = static_cast<int>(rest.size());
        for (int ai = 0; ai < rn; ++ai)
            for (int bi = ai + 1; bi < rn; ++bi)
                for (int ci = bi + 1; ci < rn; ++ci)
                    for (int di = ci + 1; di < rn; ++di) {
                        const int a = rest[ai], b = rest[bi], c = rest[ci], d = rest[di];
                        auto with = [&](int x, int y) { return set_union(S, make_subset({x, y})); };
                        const Subset sac = with(a, c), sbd = with(b, d), sab = with(a, b), scd = with(c, d),
                                     sad = with(a, d), sbc = with(b, c);
                        ++report.relations_checked;
                        bool zero;
                        if (mode == PlueckerMode::symbolic) {
                            zero = (P.at(sac) * P.at(sbd) - P.at(sab) * P.at(scd) - P.at(sad) * P.at(sbc)).is_zero();
                        } else {
                            zero = value.at(sac) * value.at(sbd) - value.at(sab) * value.at(scd) -
                                       value.at(sad) * value.at(sbc) ==
                                   0;
                        }
                        if (!zero) {
                            std::ostringstream msg;
                            msg << "P_" << label_string(sac, n) << " P_" << label_string(sbd, n) << " != P_"
                                << label_string(sab, n) << " P_" << label_string(scd, n) << " + P_"
                                << label_string(sad, n) << " P_" << label_string(sbc, n);
                            report.failures.push_back(msg.str());
                        }
                    }
    }
    return report;
}

} // namespace plabic
