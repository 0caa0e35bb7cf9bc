#include "ewm/linalg.hpp"

#include <stdexcept>

namespace ewm {

std::size_t rows(const Mat& m) { return m.size(); }
std::size_t cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

Mat transpose(const Mat& m) {
    Mat t(cols(m), Vec(rows(m)));
    for (std::size_t i = 0; i < rows(m); ++i)
        for (std::size_t j = 0; j < cols(m); ++j) t[j][i] = m[i][j];
    return t;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r(rows(m));
    for (std::size_t i = 0; i < rows(m); ++i) r[i] = dot(m[i], v);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (cols(a) != rows(b)) throw std::invalid_argument("matrix size mismatch");
    Mat r(rows(a), zeros(cols(b)));
    for (std::size_t i = 0; i < rows(a); ++i)
        for (std::size_t k = 0; k < cols(a); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols(b); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Mat identity(std::size_t n) {
    Mat r(n, zeros(n));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

Echelon rref(Mat m) {
    Echelon e;
    std::size_t nr = rows(m), nc = cols(m), r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (std::size_t j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (rows(a) != b.size()) throw std::invalid_argument("solve: size mismatch");
    std::size_t n = a.empty() ? 0 : cols(a);
    Mat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    if (a.empty()) return zeros(0);
    Echelon e = rref(aug);
    Vec x = zeros(n);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == n) return std::nullopt;
        x[e.pivots[r]] = e.m[r][n];
    }
    return x;
}

std::vector<Vec> nullspace(const Mat& a, std::size_t ncols) {
    std::vector<Vec> basis;
    if (a.empty()) {
        for (std::size_t i = 0; i < ncols; ++i) basis.push_back(unit(ncols, i));
        return basis;
    }
    Echelon e = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zeros(ncols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m[r][f];
        basis.push_back(v);
    }
    return basis;
}

std::optional<Mat> inverse(const Mat& m) {
    std::size_t n = rows(m);
    if (n == 0) return Mat{};
    if (cols(m) != n) throw std::invalid_argument("inverse: not square");
    Mat aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = unit(n, i);
        aug[i].insert(aug[i].end(), e.begin(), e.end());
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Mat inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(e.m[i].begin() + n, e.m[i].end());
    return inv;
}

Q determinant(Mat m) {
    const std::size_t n = m.size();
    Q det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Q f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace ewm
