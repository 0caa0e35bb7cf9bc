#include "ewm/generators.hpp"

#include "ewm/linalg.hpp"

#include <algorithm>

namespace ewm {

Vec RestrictionContext::apply(const Vec& omega) const {
    Vec out = zeros(space.dim());
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (omega[i] == 0) continue;
        if (i >= restrict.size() || !restrict[i])
            throw GeneratorError("restriction of fundamental weight " + std::to_string(i + 1) +
                                 " is not specified");
        out += omega[i] * *restrict[i];
    }
    return out;
}

RestrictionContext make_context(const SphericalDatum& d, const ColorSet& subset, PCharSpace space,
                                std::vector<std::optional<Vec>> restrict) {
    RestrictionContext ctx;
    ctx.space = std::move(space);
    ctx.restrict = std::move(restrict);
    for (const auto& r : ctx.restrict)
        if (r && r->size() != ctx.space.dim())
            throw GeneratorError("restriction image has the wrong dimension");
    ColorSet sub = normalize_subset(d, subset);
    for (const auto& c : d.colors) {
        if (std::find(sub.begin(), sub.end(), c.id) != sub.end()) continue;
        if (c.moved_by.size() != 1)
            throw GeneratorError("boundary color " + c.id + " is moved by " +
                                 std::to_string(c.moved_by.size()) + " simple roots");
        ctx.boundary_root_of[c.id] = c.moved_by[0];
    }
    return ctx;
}

const Generator& GeneratorTable::at(const std::string& id) const { return entries.at(index(id)); }

std::size_t GeneratorTable::index(const std::string& id) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].id == id) return i;
    throw std::invalid_argument("unknown generator '" + id + "'");
}

Vec GeneratorTable::stacked(std::size_t i) const {
    Vec v = entries.at(i).omega;
    v.insert(v.end(), entries[i].chi.begin(), entries[i].chi.end());
    return v;
}

Vec omega_of_color(const SphericalDatum& d, const std::string& id) {
    const auto& c = d.color(id);
    Vec w = zeros(d.ambient.rank());
    bool doubled = false;
    for (auto a : c.moved_by) {
        w[a] += 1;
        doubled = doubled || d.doubled_simple_root(a);
    }
    return doubled ? Q(2) * w : w;
}

std::map<std::string, Vec> boundary_chi(const SphericalDatum& d, const ColorSet& subset,
                                        const RestrictionContext& ctx) {
    ColorSet sub = normalize_subset(d, subset);
    std::map<std::string, Vec> out;
    for (const auto& c : d.colors) {
        if (std::find(sub.begin(), sub.end(), c.id) != sub.end()) continue;
        auto it = ctx.boundary_root_of.find(c.id);
        if (it == ctx.boundary_root_of.end()) throw GeneratorError("no boundary root for " + c.id);
        if (c.moved_by.size() != 1 || c.moved_by[0] != it->second)
            throw GeneratorError("boundary color " + c.id + " is not moved by exactly its boundary root");
        Vec wa = unit(d.ambient.rank(), it->second);
        if (omega_of_color(d, c.id) != wa)
            throw GeneratorError("boundary color " + c.id + ": omega_D differs from " +
                                 d.ambient.weight_name(it->second));
        out[c.id] = -ctx.apply(wa);
    }
    return out;
}

GeneratorTable solve_generators(const SphericalDatum& d, const ColorSet& subset,
                                const RestrictionContext& ctx) {
    ColorSet sub = normalize_subset(d, subset);
    const std::size_t p = ctx.space.dim();
    GeneratorTable t;
    t.rank = d.ambient.rank();
    t.pdim = p;
    for (const auto& c : d.colors) t.entries.push_back({c.id, omega_of_color(d, c.id), zeros(p)});

    for (std::size_t s = 0; s < d.sigma.size(); ++s) {
        Vec sum = zeros(t.rank);
        for (const auto& g : t.entries) sum += d.color(g.id).pairing[s] * g.omega;
        if (sum != d.ambient.root_to_fund(d.sigma[s]))
            throw GeneratorError("first component identity fails for σ" + std::to_string(s + 1));
    }

    auto known = boundary_chi(d, sub, ctx);
    for (auto& g : t.entries) {
        auto it = known.find(g.id);
        if (it != known.end()) g.chi = it->second;
    }
    if (sub.empty()) return t;

    Mat a(d.sigma.size(), zeros(sub.size()));
    for (std::size_t s = 0; s < d.sigma.size(); ++s)
        for (std::size_t j = 0; j < sub.size(); ++j) a[s][j] = d.color(sub[j]).pairing[s];
    if (rank(a) != sub.size())
        throw GeneratorError("rank of the pairing matrix on the subset is " + std::to_string(rank(a)) +
                             ", expected " + std::to_string(sub.size()));
    for (std::size_t k = 0; k < p; ++k) {
        Vec rhs = zeros(d.sigma.size());
        for (std::size_t s = 0; s < d.sigma.size(); ++s)
            for (const auto& [id, chi] : known) rhs[s] -= d.color(id).pairing[s] * chi[k];
        auto x = solve(a, rhs);
        if (!x) {
            // locate the first equation that breaks consistency
            for (std::size_t s = 1; s <= d.sigma.size(); ++s) {
                Mat a2(a.begin(), a.begin() + s);
                Vec r2(rhs.begin(), rhs.begin() + s);
                if (!solve(a2, r2))
                    throw GeneratorError("inconsistent system at σ" + std::to_string(s) + " in " +
                                         ctx.space.labels[k]);
            }
            throw GeneratorError("inconsistent system");
        }
        for (std::size_t j = 0; j < sub.size(); ++j) t.entries[t.index(sub[j])].chi[k] = (*x)[j];
    }
    for (std::size_t s = 0; s < d.sigma.size(); ++s)
        if (!is_zero(sphroot_residual(t, d, s)))
            throw GeneratorError("nonzero residual at σ" + std::to_string(s + 1));
    return t;
}

bool generators_independent(const GeneratorTable& t) {
    Mat m;
    for (std::size_t i = 0; i < t.entries.size(); ++i) m.push_back(t.stacked(i));
    return m.empty() || rank(m) == m.size();
}

Vec sphroot_residual(const GeneratorTable& t, const SphericalDatum& d, std::size_t s) {
    Vec r = d.ambient.root_to_fund(d.sigma.at(s));
    r.resize(t.rank + t.pdim, Q(0));
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        r -= d.color(t.entries[i].id).pairing[s] * t.stacked(i);
    return r;
}

std::size_t pairing_rank(const SphericalDatum& d, const ColorSet& subset) {
    Mat a;
    for (const auto& id : subset) a.push_back(d.color(id).pairing);
    return a.empty() ? 0 : rank(a);
}

std::optional<std::vector<long>> membership(const GeneratorTable& t, const Vec& lambda, const Vec& chi) {
    if (lambda.size() != t.rank || chi.size() != t.pdim)
        throw std::invalid_argument("membership target has the wrong shape");
    const std::size_t n = t.entries.size();
    Mat a(t.rank + t.pdim, zeros(n));
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = t.stacked(j);
        for (std::size_t i = 0; i < col.size(); ++i) a[i][j] = col[i];
    }
    Vec b = lambda;
    b.insert(b.end(), chi.begin(), chi.end());
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    if (mat_vec(a, *x) != b) return std::nullopt;
    std::vector<long> out;
    for (const auto& v : *x) {
        if (!is_integer(v) || v < 0) return std::nullopt;
        out.push_back(v.get_num().get_si());
    }
    return out;
}

std::string to_string(Check c) {
    switch (c) {
        case Check::Pass: return "pass";
        case Check::Fail: return "fail";
        case Check::NotApplicable: return "not applicable";
    }
    return "?";
}

RankReport rank_identities(const GeneratorTable&, const SphericalDatum& d, long rk_xp,
                           const ColorSet& subset) {
    RankReport r;
    ColorSet sub = normalize_subset(d, subset);
    long ncolors = static_cast<long>(d.colors.size());
    long xi = static_cast<long>(d.xi_rank());
    r.character_rank = rk_xp == ncolors - xi ? Check::Pass : Check::Fail;
    r.detail = "rk X(P) = " + std::to_string(rk_xp) + ", |Δ| - rk Ξ = " + std::to_string(ncolors - xi);
    if (sub.size() == d.colors.size()) {
        r.detail += "; no boundary colors";
        return r;
    }
    long span;
    if (d.sigma.size() == static_cast<std::size_t>(xi)) {
        span = static_cast<long>(pairing_rank(d, sub));
    } else {
        Mat m;
        for (const auto& id : sub) {
            if (!d.color(id).rho) {
                r.detail += "; rho missing on Ξ beyond Span Σ";
                return r;
            }
            m.push_back(*d.color(id).rho);
        }
        span = static_cast<long>(m.empty() ? 0 : rank(m));
    }
    long rk_xq = ncolors - static_cast<long>(sub.size());
    r.quotient_rank = xi - span == rk_xq - rk_xp ? Check::Pass : Check::Fail;
    r.detail += "; rk Ξ - dim ρ(Δ') = " + std::to_string(xi - span) +
                ", rk X(Q) - rk X(P) = " + std::to_string(rk_xq - rk_xp);
    return r;
}

}  // namespace ewm
