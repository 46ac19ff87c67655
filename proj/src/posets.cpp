#include "plabic/posets.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <functional>

namespace plabic {

Poset::Poset(std::vector<std::string> names, std::vector<std::pair<int, int>> covers)
    : names_(std::move(names)), covers_(std::move(covers)) {
    const std::size_t n = names_.size();
    leq_.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        leq_[a][a] = 1;
    for (auto [lo, hi] : covers_) {
        if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n || static_cast<std::size_t>(hi) >= n || lo == hi)
            throw ParameterError("cover relation refers to an invalid element");
        leq_[lo][hi] = 1;
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t a = 0; a < n; ++a)
            if (leq_[a][m])
                for (std::size_t b = 0; b < n; ++b)
                    if (leq_[m][b])
                        leq_[a][b] = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (leq_[a][b] && leq_[b][a])
                throw ParameterError("cover relations contain a cycle");
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (std::size_t a = 0; a < size(); ++a)
        if (std::none_of(covers_.begin(), covers_.end(), [&](const auto& c) { return c.second == static_cast<int>(a); }))
            out.push_back(static_cast<int>(a));
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (std::size_t a = 0; a < size(); ++a)
        if (std::none_of(covers_.begin(), covers_.end(), [&](const auto& c) { return c.first == static_cast<int>(a); }))
            out.push_back(static_cast<int>(a));
    return out;
}

GridPoset grid_poset(int k, int n) {
    if (k < 1 || k > n - 1)
        throw ParameterError("grid poset needs 1 <= k <= n-1, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
    GridPoset g{k, n, Poset({}, {})};
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j)
            names.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j) {
            if (i < k)
                covers.emplace_back(g.index(i + 1, j), g.index(i, j));
            if (j < n)
                covers.emplace_back(g.index(i, j + 1), g.index(i, j));
        }
    g.poset = Poset(std::move(names), std::move(covers));
    return g;
}

std::vector<Antichain> antichains(const Poset& p) {
    std::vector<Antichain> out;
    Antichain cur;
    std::function<void(int)> rec = [&](int from) {
        out.push_back(cur);
        for (int e = from; e < static_cast<int>(p.size()); ++e) {
            if (std::any_of(cur.begin(), cur.end(), [&](int a) { return p.comparable(a, e); }))
                continue;
            cur.push_back(e);
            rec(e + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> maximal_chains(const Poset& p) {
    std::vector<std::vector<int>> up(p.size());
    for (auto [lo, hi] : p.covers())
        up[lo].push_back(hi);
    for (auto& u : up)
        std::sort(u.begin(), u.end());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int e) {
        cur.push_back(e);
        if (up[e].empty())
            out.push_back(cur);
        for (int next : up[e])
            rec(next);
        cur.pop_back();
    };
    for (int m : p.minimal_elements())
        rec(m);
    return out;
}

namespace {

Inequality unit_row(std::size_t dim, std::vector<std::pair<int, std::int64_t>> terms, Relation rel, std::int64_t rhs) {
    Inequality q;
    q.coeffs.assign(dim, 0);
    for (auto [i, c] : terms)
        q.coeffs[i] += c;
    q.rel = rel;
    q.rhs = rhs;
    return q;
}

void check_dilation(int r) {
    if (r < 0)
        throw ParameterError("dilation factor must be nonnegative");
}

} // namespace

HRep order_polytope_H(const Poset& p, int r) {
    check_dilation(r);
    HRep h{p.names(), {}};
    const auto d = p.size();
    for (int m : p.minimal_elements())
        h.ineqs.push_back(unit_row(d, {{m, 1}}, Relation::ge, 0));
    for (auto [lo, hi] : p.covers())
        h.ineqs.push_back(unit_row(d, {{lo, 1}, {hi, -1}}, Relation::le, 0));
    for (int m : p.maximal_elements())
        h.ineqs.push_back(unit_row(d, {{m, 1}}, Relation::le, r));
    return h;
}

HRep chain_polytope_H(const Poset& p, int r) {
    check_dilation(r);
    HRep h{p.names(), {}};
    const auto d = p.size();
    for (std::size_t e = 0; e < d; ++e)
        h.ineqs.push_back(unit_row(d, {{static_cast<int>(e), 1}}, Relation::ge, 0));
    for (const auto& chain : maximal_chains(p)) {
        std::vector<std::pair<int, std::int64_t>> terms;
        for (int e : chain)
            terms.emplace_back(e, 1);
        h.ineqs.push_back(unit_row(d, terms, Relation::le, r));
    }
    return h;
}

IntVector chi(const Poset& p, const Antichain& a) {
    IntVector v(p.size(), 0);
    for (int e : a)
        v.at(static_cast<std::size_t>(e)) = 1;
    return v;
}

Antichain j_to_antichain(const GridPoset& g, const Subset& J) {
    if (static_cast<int>(J.size()) != g.k)
        throw ParameterError("J must have " + std::to_string(g.k) + " elements");
    for (int x : J)
        if (x < 1 || x > g.n)
            throw ParameterError("J element out of range");
    const Subset base = range_subset(1, g.k);
    const Subset sources = set_difference(base, J);
    Subset sinks = set_difference(J, base);
    std::reverse(sinks.begin(), sinks.end());
    Antichain a;
    for (std::size_t l = 0; l < sources.size(); ++l)
        a.push_back(g.index(sources[l], sinks[l]));
    std::sort(a.begin(), a.end());
    return a;
}

Subset antichain_to_j(const GridPoset& g, const Antichain& a) {
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = x + 1; y < a.size(); ++y)
            if (g.poset.comparable(a[x], a[y]))
                throw ParameterError("not an antichain: " + antichain_name(g.poset, a));
    Subset J = range_subset(1, g.k);
    for (int e : a) {
        auto [i, j] = g.element(e);
        J.erase(std::find(J.begin(), J.end(), i));
        J.push_back(j);
    }
    return make_subset(std::move(J));
}

std::string antichain_name(const Poset& p, const Antichain& a) {
    std::string s = "{";
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (x)
            s += ",";
        s += p.names().at(static_cast<std::size_t>(a[x]));
    }
    return s + "}";
}

} // namespace plabic
