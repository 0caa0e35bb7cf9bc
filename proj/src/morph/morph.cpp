#include "ewm/morph.hpp"

#include "ewm/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ewm {

namespace {

std::vector<ConeTest> sigma_tests(const SphericalDatum& d, Rel rel) {
    std::vector<ConeTest> t;
    for (std::size_t s = 0; s < d.sigma.size(); ++s) t.push_back({unit(d.sigma.size(), s), rel});
    return t;
}

std::vector<Vec> rows_of(const SphericalDatum& d, const ColorSet& subset) {
    std::vector<Vec> rows;
    for (const auto& id : subset) rows.push_back(d.color(id).pairing);
    return rows;
}

bool is_parabolic(const SphericalDatum& d, const ColorSet& subset) {
    return feasible({rows_of(d, subset), sigma_tests(d, Rel::GT), CoefMode::Nonneg}).feasible;
}

bool is_distinguished(const SphericalDatum& d, const ColorSet& subset) {
    return feasible({rows_of(d, subset), sigma_tests(d, Rel::GE), CoefMode::StrictlyPositive}).feasible;
}

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// gcd of the maximal minors is 1, i.e. the columns span a saturated sublattice
bool saturated(const std::vector<Vec>& cols) {
    if (cols.empty()) return true;
    const std::size_t n = cols[0].size(), m = cols.size();
    if (rank(cols) != m) return false;
    mpz_class g = 0;
    for_each_combination(n, m, [&](const std::vector<std::size_t>& rows) {
        Mat minor(m, zeros(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) minor[i][j] = cols[j][rows[i]];
        Q det = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_num_mpz_t());
    });
    return g == 1;
}

bool contains_all(const ColorSet& big, const ColorSet& small) {
    return std::all_of(small.begin(), small.end(), [&](const std::string& s) {
        return std::find(big.begin(), big.end(), s) != big.end();
    });
}

}  // namespace

ColorSet normalize_subset(const SphericalDatum& d, const ColorSet& subset) {
    std::set<std::size_t> idx;
    for (const auto& id : subset)
        if (!idx.insert(d.color_index(id)).second)
            throw std::invalid_argument("color '" + id + "' listed twice");
    ColorSet out;
    for (auto i : idx) out.push_back(d.colors[i].id);
    return out;
}

SubsetVerdict classify_subset(const SphericalDatum& d, const ColorSet& subset) {
    SubsetVerdict v;
    v.subset = normalize_subset(d, subset);
    auto rows = rows_of(d, v.subset);
    auto dist = feasible({rows, sigma_tests(d, Rel::GE), CoefMode::StrictlyPositive});
    auto para = feasible({rows, sigma_tests(d, Rel::GT), CoefMode::Nonneg});
    v.distinguished = dist.feasible;
    v.parabolic = para.feasible;
    if (para.feasible) v.witness = para.witness;
    else if (dist.feasible) v.witness = dist.witness;
    return v;
}

ColorSet mandatory_colors(const SphericalDatum& d) {
    ColorSet out;
    for (const auto& c : d.colors)
        if (c.moved_by.size() >= 2) out.push_back(c.id);
    return out;
}

std::vector<ColorSet> minimal_parabolic_subsets(const SphericalDatum& d, bool mandatory_filter) {
    ColorSet fixed = mandatory_filter ? mandatory_colors(d) : ColorSet{};
    ColorSet free;
    for (const auto& c : d.colors)
        if (std::find(fixed.begin(), fixed.end(), c.id) == fixed.end()) free.push_back(c.id);
    std::vector<ColorSet> found;
    for (std::size_t k = 0; k <= free.size(); ++k) {
        for_each_combination(free.size(), k, [&](const std::vector<std::size_t>& idx) {
            ColorSet s = fixed;
            for (auto i : idx) s.push_back(free[i]);
            s = normalize_subset(d, s);
            for (const auto& f : found)
                if (contains_all(s, f)) return;
            if (is_parabolic(d, s)) found.push_back(s);
        });
    }
    return found;
}

std::vector<ColorSet> all_subsets(const SphericalDatum& d, SubsetKind kind) {
    std::vector<ColorSet> out;
    auto ids = d.color_ids();
    for (std::size_t k = 0; k <= ids.size(); ++k)
        for_each_combination(ids.size(), k, [&](const std::vector<std::size_t>& idx) {
            ColorSet s;
            for (auto i : idx) s.push_back(ids[i]);
            bool ok = kind == SubsetKind::Parabolic ? is_parabolic(d, s) : is_distinguished(d, s);
            if (ok) out.push_back(s);
        });
    return out;
}

std::vector<Vec> quotient_spherical_roots(const SphericalDatum& d, const ColorSet& subset) {
    if (!is_distinguished(d, normalize_subset(d, subset)))
        throw std::invalid_argument("quotient_spherical_roots needs a distinguished subset");
    const std::size_t ns = d.sigma.size();
    std::vector<Vec> axes;
    for (std::size_t s = 0; s < ns; ++s) axes.push_back(unit(ns, s));
    auto rays = cone_subspace_intersection(axes, rows_of(d, subset));
    std::vector<Vec> out;
    for (const auto& x : rays) {
        Vec v = zeros(d.ambient.rank());
        for (std::size_t s = 0; s < ns; ++s) v += x[s] * d.sigma[s];
        auto lat = d.in_lattice_basis(v);
        if (!lat) throw std::logic_error("quotient ray outside the lattice span");
        Vec p = primitive(*lat);
        Q scale = 0;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0) {
                scale = p[k] / (*lat)[k];
                break;
            }
        out.push_back(scale * v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool check_morphism_data(const SphericalDatum& dx, const ColorSet& subset, const SphericalDatum& dy,
                         const std::map<std::string, std::string>& psi, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    ColorSet sub = normalize_subset(dx, subset);
    std::set<std::string> targets;
    for (const auto& c : dy.colors) {
        auto it = psi.find(c.id);
        if (it == psi.end()) throw std::invalid_argument("psi misses color " + c.id);
        dx.color(it->second);
        if (std::find(sub.begin(), sub.end(), it->second) != sub.end())
            throw std::invalid_argument("psi maps " + c.id + " into the subset");
        if (!targets.insert(it->second).second) throw std::invalid_argument("psi is not injective");
    }
    if (psi.size() != dy.colors.size()) throw std::invalid_argument("psi has extra entries");
    if (targets.size() + sub.size() != dx.colors.size()) throw std::invalid_argument("psi is not onto");
    if (!(dx.ambient == dy.ambient)) return fail("different ambient groups");

    if (dy.sigma.size() != dy.xi_rank() || (!dy.sigma.empty() && rank(dy.sigma) != dy.xi_rank()))
        return fail("Span Σ(Y) != Ξ(Y)");
    if (!is_distinguished(dx, sub)) return fail("subset is not distinguished");
    auto q = quotient_spherical_roots(dx, sub);
    for (const auto& s : dy.sigma)
        if (!in_nonneg_span(s, q)) return fail("σ(Y) " + to_string(s) + " outside the quotient cone");
    for (const auto& r : q)
        if (!in_nonneg_span(r, dy.sigma)) return fail("quotient ray " + to_string(r) + " outside cone Σ(Y)");

    Mat sx = transpose(dx.sigma);
    std::vector<Vec> yl;
    for (const auto& b : dy.lattice_basis()) {
        auto x = dx.in_lattice_basis(b);
        if (!x || !is_integral(*x)) return fail("Ξ(Y) is not contained in Ξ(X)");
        auto in_sigma = solve(sx, b);
        if (!in_sigma) return fail("Ξ(Y) outside Span Σ(X)");
        for (const auto& id : sub)
            if (dot(*in_sigma, dx.color(id).pairing) != 0) return fail("ρ(" + id + ") does not vanish on Ξ(Y)");
        yl.push_back(*x);
    }
    if (!saturated(yl)) return fail("Ξ(Y) is smaller than Ξ(X) ∩ ker ρ(Δ')");

    for (const auto& e : dy.colors) {
        const auto& dcol = dx.color(psi.at(e.id));
        std::set<std::size_t> a(e.moved_by.begin(), e.moved_by.end());
        std::set<std::size_t> b(dcol.moved_by.begin(), dcol.moved_by.end());
        if (a != b) return fail("moving roots differ for " + e.id + " and " + dcol.id);
        for (std::size_t t = 0; t < dy.sigma.size(); ++t) {
            auto x = solve(sx, dy.sigma[t]);
            if (!x) return fail("σ(Y) outside Span Σ(X)");
            if (dot(*x, dcol.pairing) != e.pairing[t])
                return fail("ρ mismatch between " + e.id + " and " + dcol.id);
        }
    }
    return true;
}

bool check_parabolic_in_H(const SphericalDatum& dx, const SphericalDatum& dy) {
    if (dx.sigma.size() != dx.xi_rank() || dy.sigma.size() != dy.xi_rank()) return false;
    const std::size_t n = dx.sigma.size();
    if (n == 0) return true;
    // cones are monotone, so the maximal proper subsets decide
    for (std::size_t skip = 0; skip < n; ++skip) {
        std::vector<Vec> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (i != skip) sub.push_back(dx.sigma[i]);
        bool escapes = std::any_of(dy.sigma.begin(), dy.sigma.end(),
                                   [&](const Vec& s) { return !in_nonneg_span(s, sub); });
        if (!escapes) return false;
    }
    return true;
}

}  // namespace ewm
