#include "ewm/cones.hpp"

#include "ewm/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ewm {

namespace {

struct Tableau {
    Mat t;  // m rows, last column is the right-hand side
    std::vector<std::size_t> basis;
    std::size_t ncols = 0;

    void pivot(std::size_t r, std::size_t c) {
        Q inv = 1 / t[r][c];
        for (auto& x : t[r]) x *= inv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == r || t[i][c] == 0) continue;
            Q f = t[i][c];
            for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule; columns >= limit never enter
    LPStatus optimize(const Vec& cost, std::size_t limit) {
        while (true) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < limit; ++j) {
                Q z = cost[j];
                for (std::size_t i = 0; i < t.size(); ++i) z -= cost[basis[i]] * t[i][j];
                if (z < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols) return LPStatus::Optimal;
            std::size_t leave = t.size();
            Q best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][enter] <= 0) continue;
                Q ratio = t[i][ncols] / t[i][enter];
                if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t.size()) return LPStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LPResult lp_minimize(const std::vector<LPRow>& rows, const Vec& cost) {
    const std::size_t n = cost.size();
    std::size_t nslack = 0;
    for (const auto& r : rows) {
        if (r.a.size() != n) throw std::invalid_argument("lp row has wrong length");
        if (r.rel != RowRel::EQ) ++nslack;
    }
    const std::size_t m = rows.size();
    const std::size_t art0 = n + nslack;
    Tableau tb;
    tb.ncols = art0 + m;
    tb.t.assign(m, zeros(tb.ncols + 1));
    tb.basis.assign(m, 0);
    std::size_t s = n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& r = rows[i];
        for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = r.a[j];
        if (r.rel == RowRel::GE) tb.t[i][s++] = -1;
        if (r.rel == RowRel::LE) tb.t[i][s++] = 1;
        tb.t[i][tb.ncols] = r.b;
        if (r.b < 0)
            for (auto& x : tb.t[i]) x = -x;
        tb.t[i][art0 + i] = 1;
        tb.basis[i] = art0 + i;
    }
    Vec phase1 = zeros(tb.ncols);
    for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = 1;
    tb.optimize(phase1, tb.ncols);
    Q infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] >= art0) infeas += tb.t[i][tb.ncols];
    LPResult res;
    if (infeas != 0) return res;

    // drive artificial variables out of the basis; drop redundant rows
    for (std::size_t i = 0; i < tb.t.size();) {
        if (tb.basis[i] < art0) {
            ++i;
            continue;
        }
        std::size_t c = 0;
        while (c < art0 && tb.t[i][c] == 0) ++c;
        if (c < art0) {
            tb.pivot(i, c);
            ++i;
        } else {
            tb.t.erase(tb.t.begin() + i);
            tb.basis.erase(tb.basis.begin() + i);
        }
    }
    Vec full = zeros(tb.ncols);
    for (std::size_t j = 0; j < n; ++j) full[j] = cost[j];
    res.status = tb.optimize(full, art0);
    if (res.status != LPStatus::Optimal) return res;
    res.x = zeros(n);
    for (std::size_t i = 0; i < tb.t.size(); ++i)
        if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][tb.ncols];
    res.value = dot(cost, res.x);
    return res;
}

Feasibility feasible(const FeasibilityProblem& p) {
    const std::size_t n = p.generators.size();
    std::vector<LPRow> rows;
    for (const auto& t : p.tests) {
        LPRow r{zeros(n), RowRel::GE, t.rel == Rel::GT ? Q(1) : Q(0)};
        for (std::size_t i = 0; i < n; ++i) r.a[i] = dot(t.f, p.generators[i]);
        rows.push_back(r);
    }
    if (p.mode == CoefMode::StrictlyPositive)
        for (std::size_t i = 0; i < n; ++i) rows.push_back({unit(n, i), RowRel::GE, Q(1)});
    Feasibility f;
    if (n == 0) {
        f.feasible = std::none_of(p.tests.begin(), p.tests.end(),
                                  [](const ConeTest& t) { return t.rel == Rel::GT; });
        return f;
    }
    // the system is homogeneous, so strict relations may be scaled to >= 1
    auto r = lp_minimize(rows, Vec(n, Q(1)));
    if (r.status != LPStatus::Optimal) return f;
    f.feasible = true;
    f.witness = primitive(r.x);
    return f;
}

namespace {

bool extreme_in(const Vec& c, const Mat& eqs) {
    std::size_t n = c.size();
    Mat tight = eqs;
    for (std::size_t k = 0; k < n; ++k)
        if (c[k] == 0) tight.push_back(unit(n, k));
    return rank(tight) == n - 1;
}

}  // namespace

std::vector<Vec> cone_subspace_intersection(const std::vector<Vec>& rays,
                                            const std::vector<Vec>& kernels) {
    const std::size_t n = rays.size();
    if (n == 0) return {};
    const std::size_t dim = rays[0].size();
    // double description on { c >= 0 : f(sum c_i r_i) = 0 }
    std::vector<Vec> current;
    for (std::size_t i = 0; i < n; ++i) current.push_back(unit(n, i));
    Mat eqs;
    for (const auto& f : kernels) {
        Vec h(n);
        for (std::size_t i = 0; i < n; ++i) h[i] = dot(f, rays[i]);
        if (is_zero(h)) continue;
        eqs.push_back(h);
        std::vector<Vec> zero, pos, neg;
        for (auto& r : current) {
            Q v = dot(h, r);
            (v == 0 ? zero : v > 0 ? pos : neg).push_back(r);
        }
        std::set<Vec> next(zero.begin(), zero.end());
        for (const auto& a : pos)
            for (const auto& b : neg) {
                Vec c = dot(h, a) * b - dot(h, b) * a;
                c = primitive(c);
                if (!is_zero(c) && extreme_in(c, eqs)) next.insert(c);
            }
        current.assign(next.begin(), next.end());
    }
    std::vector<Vec> images;
    for (const auto& c : current) {
        Vec v = zeros(dim);
        for (std::size_t i = 0; i < n; ++i) v += c[i] * rays[i];
        v = primitive(v);
        if (!is_zero(v) && std::find(images.begin(), images.end(), v) == images.end())
            images.push_back(v);
    }
    // one at a time, so mutually redundant rays on a line are not both dropped
    std::vector<Vec> out = images;
    for (std::size_t i = out.size(); i-- > 0;) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != i) others.push_back(out[j]);
        if (in_nonneg_span(out[i], others)) out.erase(out.begin() + static_cast<long>(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_nonneg_span(const Vec& v, const std::vector<Vec>& rays) {
    if (rays.empty()) return is_zero(v);
    const std::size_t n = rays.size();
    std::vector<LPRow> rows;
    for (std::size_t k = 0; k < v.size(); ++k) {
        LPRow r{zeros(n), RowRel::EQ, v[k]};
        for (std::size_t i = 0; i < n; ++i) r.a[i] = rays[i].at(k);
        rows.push_back(r);
    }
    return lp_minimize(rows, zeros(n)).status == LPStatus::Optimal;
}

}  // namespace ewm
