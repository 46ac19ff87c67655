#include "plabic/lp.hpp"

#include "plabic/error.hpp"

namespace plabic {

namespace {

// Tableau rows 0..m-1 hold constraints, column `cols` is the right-hand side.
// The objective row stores reduced costs; its rhs holds -(objective value).
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows + 1, std::vector<Rational>(cols + 1)), basis_(rows) {}

    Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
    Rational& rhs(std::size_t r) { return t_[r][n_]; }
    std::vector<Rational>& objective() { return t_[m_]; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = t_[r][c];
        for (auto& v : t_[r])
            v /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || t_[i][c] == 0)
                continue;
            const Rational f = t_[i][c];
            for (std::size_t j = 0; j <= n_; ++j)
                if (t_[r][j] != 0)
                    t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    // Price out the basic columns from the objective row.
    void canonicalize_objective() {
        for (std::size_t r = 0; r < m_; ++r) {
            const Rational f = t_[m_][basis_[r]];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j <= n_; ++j)
                t_[m_][j] -= f * t_[r][j];
        }
    }

    // Bland's rule over columns [0, allowed). Returns false when unbounded.
    bool optimize(std::size_t allowed) {
        while (true) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j)
                if (t_[m_][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == allowed)
                return true;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (t_[r][enter] <= 0)
                    continue;
                Rational ratio = t_[r][n_] / t_[r][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == m_)
                return false;
            pivot(leave, enter);
        }
    }

    void drop_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
    }

private:
    std::size_t m_;
    std::size_t n_;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpResult solve_standard_lp(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    if (b.size() != m)
        throw ParameterError("LP: right-hand side length mismatch");
    for (const auto& row : A)
        if (row.size() != n)
            throw ParameterError("LP: constraint row length mismatch");

    // Phase I: columns 0..n-1 original, n..n+m-1 artificial.
    Tableau t(m, n + m);
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = b[r] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t.at(r, j) = flip ? Rational(-A[r][j]) : A[r][j];
        t.rhs(r) = flip ? Rational(-b[r]) : b[r];
        t.at(r, n + r) = 1;
        t.basic(r) = n + r;
    }
    for (std::size_t j = n; j < n + m; ++j)
        t.objective()[j] = 1;
    t.canonicalize_objective();
    t.optimize(n + m);

    LpResult res;
    if (t.objective()[n + m] != 0) {
        res.status = LpStatus::infeasible;
        return res;
    }
    // Drive artificials out of the basis; rows that cannot pivot are redundant.
    for (std::size_t r = 0; r < t.rows();) {
        if (t.basic(r) < n) {
            ++r;
            continue;
        }
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j)
            if (t.at(r, j) != 0) {
                col = j;
                break;
            }
        if (col == n) {
            t.drop_row(r);
            continue;
        }
        t.pivot(r, col);
        ++r;
    }

    // Phase II over the original columns only.
    auto& obj = t.objective();
    for (std::size_t j = 0; j <= n + m; ++j)
        obj[j] = 0;
    for (std::size_t j = 0; j < n; ++j)
        obj[j] = c[j];
    t.canonicalize_objective();
    if (!t.optimize(n)) {
        res.status = LpStatus::unbounded;
        return res;
    }
    res.status = LpStatus::optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < t.rows(); ++r)
        res.x[t.basic(r)] = t.rhs(r);
    res.value = 0;
    for (std::size_t j = 0; j < n; ++j)
        res.value += c[j] * res.x[j];
    return res;
}

LpResult maximize(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    // x = x+ - x-, one slack per row; minimize -c.x
    const std::size_t m = A.size();
    const std::size_t d = c.size();
    RationalMatrix S(m, std::vector<Rational>(2 * d + m));
    for (std::size_t r = 0; r < m; ++r) {
        if (A[r].size() != d)
            throw ParameterError("LP: constraint row length mismatch");
        for (std::size_t j = 0; j < d; ++j) {
            S[r][j] = A[r][j];
            S[r][d + j] = -A[r][j];
        }
        S[r][2 * d + r] = 1;
    }
    std::vector<Rational> cost(2 * d + m);
    for (std::size_t j = 0; j < d; ++j) {
        cost[j] = -c[j];
        cost[d + j] = c[j];
    }
    auto std_res = solve_standard_lp(S, b, cost);
    LpResult res;
    res.status = std_res.status;
    if (res.status != LpStatus::optimal)
        return res;
    res.x.resize(d);
    for (std::size_t j = 0; j < d; ++j)
        res.x[j] = std_res.x[j] - std_res.x[d + j];
    res.value = -std_res.value;
    return res;
}

bool feasible(const RationalMatrix& A, const std::vector<Rational>& b) {
    const std::size_t n = A.empty() ? 0 : A.front().size();
    return solve_standard_lp(A, b, std::vector<Rational>(n)).status != LpStatus::infeasible;
}

} // namespace plabic
