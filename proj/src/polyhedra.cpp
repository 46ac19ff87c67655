#include "plabic/polyhedra.hpp"

#include "plabic/lp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

namespace plabic {

bool LatticePointSet::contains(const IntVector& p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

LatticePointSet make_point_set(std::vector<std::string> basis, std::vector<IntVector> points,
                               std::vector<std::string> provenance) {
    if (!provenance.empty() && provenance.size() != points.size())
        throw ParameterError("provenance list does not match the point list");
    std::set<IntVector> seen;
    for (const auto& p : points) {
        if (p.size() != basis.size())
            throw ParameterError("point length " + std::to_string(p.size()) + " does not match basis length " +
                                 std::to_string(basis.size()));
        if (!seen.insert(p).second)
            throw ParameterError("duplicate point in lattice point set");
    }
    return LatticePointSet{std::move(basis), std::move(points), std::move(provenance)};
}

bool same_points(const LatticePointSet& a, const LatticePointSet& b) {
    if (a.basis != b.basis || a.size() != b.size())
        return false;
    auto pa = a.points;
    auto pb = b.points;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

bool Inequality::satisfied_by(const IntVector& x) const {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        lhs += coeffs[i] * x[i];
    return rel == Relation::le ? lhs <= rhs : lhs >= rhs;
}

HRep HRep::dilate(std::int64_t r) const {
    HRep out = *this;
    for (auto& q : out.ineqs)
        q.rhs *= r;
    return out;
}

bool HRep::contains(const IntVector& x) const {
    return std::all_of(ineqs.begin(), ineqs.end(), [&](const Inequality& q) { return q.satisfied_by(x); });
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t floor_rational(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return to_int64(f);
}

std::int64_t ceil_rational(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return to_int64(c);
}

} // namespace

LatticePointSet lattice_points(const HRep& h) {
    const std::size_t d = h.vars.size();
    // normalize to a.x <= b
    std::vector<Inequality> rows;
    for (const auto& q : h.ineqs) {
        if (q.coeffs.size() != d)
            throw ParameterError("inequality length does not match the variable list");
        Inequality le = q;
        if (q.rel == Relation::ge) {
            for (auto& c : le.coeffs)
                c = -c;
            le.rhs = -le.rhs;
            le.rel = Relation::le;
        }
        rows.push_back(std::move(le));
    }
    LatticePointSet out{h.vars, {}, {}};
    if (d == 0) {
        if (std::all_of(rows.begin(), rows.end(), [](const Inequality& q) { return 0 <= q.rhs; }))
            out.points.push_back({});
        return out;
    }

    RationalMatrix A;
    std::vector<Rational> b;
    for (const auto& q : rows) {
        std::vector<Rational> row;
        for (auto c : q.coeffs)
            row.emplace_back(static_cast<long>(c));
        A.push_back(std::move(row));
        b.emplace_back(static_cast<long>(q.rhs));
    }
    std::vector<std::int64_t> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> c(d);
        c[j] = 1;
        auto up = maximize(A, b, c);
        if (up.status == LpStatus::infeasible)
            return out;
        if (up.status == LpStatus::unbounded)
            throw ParameterError("inequality system is unbounded in direction +" + h.vars[j]);
        c[j] = -1;
        auto down = maximize(A, b, c);
        if (down.status == LpStatus::unbounded)
            throw ParameterError("inequality system is unbounded in direction -" + h.vars[j]);
        hi[j] = floor_rational(up.value);
        lo[j] = ceil_rational(-down.value);
        if (lo[j] > hi[j])
            return out;
    }

    // rest_min[i][t] = min over the box of sum_{s >= t} a_s x_s
    std::vector<std::vector<std::int64_t>> rest_min(rows.size(), std::vector<std::int64_t>(d + 1, 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t t = d; t-- > 0;) {
            const auto a = rows[i].coeffs[t];
            rest_min[i][t] = rest_min[i][t + 1] + std::min(a * lo[t], a * hi[t]);
        }

    IntVector x(d, 0);
    std::vector<std::int64_t> partial(rows.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == d) {
            out.points.push_back(x);
            return;
        }
        std::int64_t l = lo[t], u = hi[t];
        for (std::size_t i = 0; i < rows.size() && l <= u; ++i) {
            const auto a = rows[i].coeffs[t];
            if (a == 0)
                continue;
            const auto slack = rows[i].rhs - partial[i] - rest_min[i][t + 1];
            if (a > 0)
                u = std::min(u, floor_div(slack, a));
            else
                l = std::max(l, ceil_div(slack, a));
        }
        for (std::int64_t v = l; v <= u; ++v) {
            x[t] = v;
            for (std::size_t i = 0; i < rows.size(); ++i)
                partial[i] += rows[i].coeffs[t] * v;
            rec(t + 1);
            for (std::size_t i = 0; i < rows.size(); ++i)
                partial[i] -= rows[i].coeffs[t] * v;
        }
        x[t] = 0;
    };
    rec(0);
    return out;
}

IntVector LinearMapZ::apply(const IntVector& x) const {
    if (x.size() != cols())
        throw ParameterError("vector length does not match the map's source basis");
    IntVector y(rows(), 0);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            y[r] += entries[r][c] * x[c];
    return y;
}

Integer determinant(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw ParameterError("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Integer(static_cast<long>(m[i][j]));
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

LatticePointSet minkowski_sum(const LatticePointSet& a, const LatticePointSet& b) {
    if (a.basis != b.basis)
        throw ParameterError("Minkowski sum of point sets over different bases");
    std::set<IntVector> sums;
    for (const auto& p : a.points)
        for (const auto& q : b.points) {
            IntVector s(p);
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] += q[i];
            sums.insert(std::move(s));
        }
    return LatticePointSet{a.basis, {sums.begin(), sums.end()}, {}};
}

LatticePointSet minkowski_power(const LatticePointSet& a, int r) {
    if (r < 0)
        throw ParameterError("negative Minkowski power");
    LatticePointSet acc{a.basis, {IntVector(a.dimension(), 0)}, {}};
    for (int i = 0; i < r; ++i)
        acc = minkowski_sum(acc, a);
    return acc;
}

LatticePointSet vertices(const LatticePointSet& a) {
    if (a.points.empty())
        throw ParameterError("vertices of an empty point set");
    LatticePointSet out{a.basis, {}, {}};
    const std::size_t d = a.dimension();
    for (std::size_t j = 0; j < a.size(); ++j) {
        // lambda_i >= 0 over the other points, sum lambda_i u_i = u_j, sum lambda_i = 1
        RationalMatrix A(d + 1);
        std::vector<Rational> b(d + 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == j)
                continue;
            for (std::size_t c = 0; c < d; ++c)
                A[c].emplace_back(static_cast<long>(a.points[i][c]));
            A[d].emplace_back(1);
        }
        for (std::size_t c = 0; c < d; ++c)
            b[c] = static_cast<long>(a.points[j][c]);
        b[d] = 1;
        const bool is_vertex = a.size() == 1 || !feasible(A, b);
        if (is_vertex) {
            out.points.push_back(a.points[j]);
            if (!a.provenance.empty())
                out.provenance.push_back(a.provenance[j]);
        }
    }
    return out;
}

namespace {

using IntegerVector = std::vector<Integer>;

void make_primitive(IntegerVector& v) {
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntegerVector to_integer_vector(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector out;
    for (const auto& x : v)
        out.push_back(Integer(x * l));
    make_primitive(out);
    return out;
}

Integer dot(const IntegerVector& a, const IntegerVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const Rational pv = m[row][c];
        for (auto& x : m[row])
            x /= pv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0)
                continue;
            const Rational f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[r][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i)
            r.w_[i] &= o.w_[i];
        return r;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

private:
    std::vector<std::uint64_t> w_;
};

struct Ray {
    IntegerVector v;
    Bits zeros;
};

// Extreme rays of the pointed cone {y : rows[i] . y >= 0}; rows must span.
std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows, std::size_t dim) {
    // pick `dim` independent rows greedily
    std::vector<std::size_t> chosen;
    std::vector<std::vector<Rational>> echelon;
    for (std::size_t i = 0; i < rows.size() && chosen.size() < dim; ++i) {
        std::vector<Rational> cand(rows[i].begin(), rows[i].end());
        for (const auto& e : echelon) {
            std::size_t lead = 0;
            while (e[lead] == 0)
                ++lead;
            if (cand[lead] != 0) {
                const Rational f = cand[lead] / e[lead];
                for (std::size_t j = 0; j < dim; ++j)
                    cand[j] -= f * e[j];
            }
        }
        if (std::all_of(cand.begin(), cand.end(), [](const Rational& x) { return x == 0; }))
            continue;
        echelon.push_back(std::move(cand));
        // keep echelon rows with distinct leading columns
        std::sort(echelon.begin(), echelon.end(), [&](const auto& a, const auto& b) {
            auto lead = [](const std::vector<Rational>& v) {
                std::size_t l = 0;
                while (l < v.size() && v[l] == 0)
                    ++l;
                return l;
            };
            return lead(a) < lead(b);
        });
        chosen.push_back(i);
    }
    if (chosen.size() < dim)
        throw ParameterError("double description: constraint rows do not span");

    // initial rays: columns of the inverse of the chosen block
    std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(2 * dim));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c)
            aug[r][c] = rows[chosen[r]][c];
        aug[r][dim + r] = 1;
    }
    rref(aug, 2 * dim);
    std::vector<Ray> rays;
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<Rational> col(dim);
        for (std::size_t r = 0; r < dim; ++r)
            col[r] = aug[r][dim + c];
        Ray ray{to_integer_vector(col), Bits(rows.size())};
        for (std::size_t r = 0; r < dim; ++r)
            if (r != c)
                ray.zeros.set(chosen[r]);
        rays.push_back(std::move(ray));
    }

    std::vector<char> is_chosen(rows.size(), 0);
    for (auto i : chosen)
        is_chosen[i] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (is_chosen[i])
            continue;
        std::vector<Integer> s;
        for (const auto& ray : rays)
            s.push_back(dot(rows[i], ray.v));
        std::vector<Ray> next;
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (s[p] >= 0) {
                Ray kept = rays[p];
                if (s[p] == 0)
                    kept.zeros.set(i);
                next.push_back(std::move(kept));
            }
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (s[p] <= 0)
                continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (s[q] >= 0)
                    continue;
                const Bits common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < dim)
                    continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != q && common.subset_of(rays[o].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                Ray fresh{IntegerVector(dim), common};
                for (std::size_t j = 0; j < dim; ++j)
                    fresh.v[j] = s[p] * rays[q].v[j] - s[q] * rays[p].v[j];
                make_primitive(fresh.v);
                fresh.zeros.set(i);
                next.push_back(std::move(fresh));
            }
        }
        rays = std::move(next);
    }
    std::vector<IntegerVector> out;
    for (auto& r : rays)
        out.push_back(std::move(r.v));
    return out;
}

} // namespace

HRep FacetDescription::as_hrep(const std::vector<std::string>& vars) const {
    HRep h{vars, facets};
    for (const auto& eq : equations) {
        h.ineqs.push_back(Inequality{eq.coeffs, Relation::le, eq.rhs});
        h.ineqs.push_back(Inequality{eq.coeffs, Relation::ge, eq.rhs});
    }
    return h;
}

FacetDescription facets(const LatticePointSet& a) {
    if (a.points.empty())
        throw ParameterError("facets of an empty point set");
    const std::size_t D = a.dimension();
    const auto& origin = a.points.front();

    std::vector<std::vector<Rational>> diffs;
    for (std::size_t i = 1; i < a.size(); ++i) {
        std::vector<Rational> row(D);
        for (std::size_t c = 0; c < D; ++c)
            row[c] = static_cast<long>(a.points[i][c] - origin[c]);
        diffs.push_back(std::move(row));
    }
    auto reduced = diffs;
    const auto pivots = rref(reduced, D);
    FacetDescription fd;
    fd.dimension = static_cast<int>(pivots.size());
    if (fd.dimension > kFacetDimensionGuard)
        throw DimensionGuardError("affine dimension " + std::to_string(fd.dimension) + " exceeds the facet guard of " +
                                  std::to_string(kFacetDimensionGuard));

    // affine hull equations: one per free column
    std::vector<char> is_pivot(D, 0);
    for (auto p : pivots)
        is_pivot[p] = 1;
    for (std::size_t f = 0; f < D; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> coeffs(D);
        coeffs[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            coeffs[pivots[r]] = -reduced[r][f];
        auto integral = to_integer_vector(coeffs);
        AffineEquation eq;
        Integer rhs = 0;
        for (std::size_t c = 0; c < D; ++c) {
            eq.coeffs.push_back(to_int64(integral[c]));
            rhs += integral[c] * Integer(static_cast<long>(origin[c]));
        }
        eq.rhs = to_int64(rhs);
        fd.equations.push_back(std::move(eq));
    }
    if (fd.dimension == 0)
        return fd;

    const std::size_t d = pivots.size();
    std::vector<IntegerVector> rows;
    for (const auto& p : a.points) {
        IntegerVector row;
        for (auto c : pivots)
            row.push_back(Integer(static_cast<long>(-p[c])));
        row.push_back(1);
        rows.push_back(std::move(row));
    }
    for (auto& ray : extreme_rays(rows, d + 1)) {
        Inequality q;
        q.coeffs.assign(D, 0);
        for (std::size_t j = 0; j < d; ++j)
            q.coeffs[pivots[j]] = to_int64(ray[j]);
        q.rhs = to_int64(ray[d]);
        q.rel = Relation::le;
        fd.facets.push_back(std::move(q));
    }
    std::sort(fd.facets.begin(), fd.facets.end(), [](const Inequality& x, const Inequality& y) {
        return std::tie(x.coeffs, x.rhs) < std::tie(y.coeffs, y.rhs);
    });
    return fd;
}

std::vector<std::size_t> ehrhart_counts(const HRep& h, const std::vector<int>& rs) {
    std::vector<std::size_t> out;
    for (int r : rs) {
        if (r < 0)
            throw ParameterError("negative dilation factor");
        out.push_back(lattice_points(h.dilate(r)).size());
    }
    return out;
}

} // namespace plabic
