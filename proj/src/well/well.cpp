#include "ewm/well.hpp"

#include "ewm/cones.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ewm {

namespace {

// all a >= 0 supported on vars with sum a <= bound and sum a_D chi_D == target
void enumerate(const GeneratorTable& t, const std::vector<std::size_t>& vars, long bound, const Vec& target,
               const std::function<void(const std::vector<long>&)>& emit) {
    std::vector<long> a(t.entries.size(), 0);
    Vec acc = zeros(t.pdim);
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
        if (k == vars.size()) {
            if (acc == target) emit(a);
            return;
        }
        const Vec& chi = t.entries[vars[k]].chi;
        for (long c = 0; c <= left; ++c) {
            a[vars[k]] = c;
            rec(k + 1, left - c);
            acc += chi;
        }
        acc -= Q(left + 1) * chi;
        a[vars[k]] = 0;
    };
    rec(0, bound);
}

std::vector<std::size_t> indices(const GeneratorTable& t, const ColorSet& ids) {
    std::vector<std::size_t> out;
    for (const auto& id : ids) out.push_back(t.index(id));
    return out;
}

long coeff_sum(const std::vector<long>& a) {
    long s = 0;
    for (auto x : a) s += x;
    return s;
}

// largest coefficient sum on vars solving the character equation; nullopt if infeasible
std::optional<long> max_sum(const GeneratorTable& t, const std::vector<std::size_t>& vars, const Vec& target) {
    if (vars.empty()) return is_zero(target) ? std::optional<long>(0) : std::nullopt;
    std::vector<LPRow> rows;
    for (std::size_t k = 0; k < t.pdim; ++k) {
        LPRow r{zeros(vars.size()), RowRel::EQ, target[k]};
        for (std::size_t j = 0; j < vars.size(); ++j) r.a[j] = t.entries[vars[j]].chi[k];
        rows.push_back(r);
    }
    auto res = lp_minimize(rows, Vec(vars.size(), Q(-1)));
    if (res.status == LPStatus::Infeasible) return std::nullopt;
    if (res.status == LPStatus::Unbounded) throw WellError("the bottom is not finite for this character");
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), Q(-res.value).get_num_mpz_t(), Q(-res.value).get_den_mpz_t());
    return f.get_si();
}

}  // namespace

ColorSet WellCase::h_colors() const {
    ColorSet out = h_trivial;
    if (h_pair) {
        out.push_back(h_pair->first);
        out.push_back(h_pair->second);
    }
    out.insert(out.end(), h_extra.begin(), h_extra.end());
    return out;
}

WellCase make_well_case(GeneratorTable table, ColorSet h_trivial,
                        std::optional<std::pair<std::string, std::string>> h_pair, ColorSet h_extra,
                        int center_dim) {
    WellCase w;
    w.table = std::move(table);
    w.h_trivial = std::move(h_trivial);
    w.h_pair = std::move(h_pair);
    w.h_extra = std::move(h_extra);
    w.center_dim = center_dim;
    std::set<std::string> seen;
    for (const auto& id : w.h_colors()) {
        w.table.index(id);
        if (!seen.insert(id).second) throw WellError("color " + id + " is in two classes");
    }
    for (const auto& g : w.table.entries)
        if (!seen.count(g.id)) w.e_colors.push_back(g.id);
    for (const auto& id : w.h_trivial)
        if (!is_zero(w.table.at(id).chi)) throw WellError("h_trivial color " + id + " has nonzero character");
    if (center_dim != 0 && center_dim != 1) throw WellError("center_dim must be 0 or 1");
    if (center_dim == 1) {
        if (!w.h_pair) throw WellError("center_dim 1 needs h_pair");
        const Vec& c0 = w.table.at(w.h_pair->first).chi;
        const Vec& c1 = w.table.at(w.h_pair->second).chi;
        if (is_zero(c0) || c0 != -c1) throw WellError("h_pair characters must be opposite and nonzero");
    } else if (w.h_pair) {
        throw WellError("h_pair given with center_dim 0");
    }
    return w;
}

Vec combine(const GeneratorTable& t, const std::vector<long>& coeffs) {
    Vec v = zeros(t.rank);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) v += Q(coeffs[i]) * t.entries[i].omega;
    return v;
}

ChiWellResult chi_well(const WellCase& w, const Vec& chi, long bound) {
    const auto& t = w.table;
    if (chi.size() != t.pdim) throw WellError("character has the wrong dimension");
    std::vector<std::size_t> free = indices(t, w.h_trivial), rest;
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        if (std::find(free.begin(), free.end(), i) == free.end()) rest.push_back(i);
    ChiWellResult r;
    r.chi = chi;
    Vec target = -chi;
    enumerate(t, rest, bound, target, [&](const std::vector<long>& a) {
        long left = bound - coeff_sum(a);
        enumerate(t, free, left, zeros(t.pdim), [&](const std::vector<long>& b) {
            std::vector<long> c = a;
            for (auto i : free) c[i] = b[i];
            r.lambdas.push_back({combine(t, c), c});
        });
    });
    std::sort(r.lambdas.begin(), r.lambdas.end(),
              [](const WellElement& x, const WellElement& y) { return x.lambda < y.lambda; });
    return r;
}

std::vector<std::vector<long>> zero_well_generators(const WellCase& w) {
    const auto& t = w.table;
    std::vector<std::size_t> all(t.entries.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::vector<long>> found;
    enumerate(t, all, 2 * static_cast<long>(all.size()), zeros(t.pdim),
              [&](const std::vector<long>& a) { found.push_back(a); });
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        return coeff_sum(x) != coeff_sum(y) ? coeff_sum(x) < coeff_sum(y) : x < y;
    });
    std::vector<std::vector<long>> minimal;
    for (const auto& a : found) {
        if (coeff_sum(a) == 0) continue;
        bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const std::vector<long>& m) {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (m[i] > a[i]) return false;
            return true;
        });
        if (!dominated) minimal.push_back(a);
    }
    return minimal;
}

std::vector<WellElement> bottom_elements(const WellCase& w, const Vec& chi) {
    const auto& t = w.table;
    if (!w.h_extra.empty()) throw WellError("bottom criterion needs every pulled-back color classified");
    if (chi.size() != t.pdim) throw WellError("character has the wrong dimension");
    std::vector<std::vector<std::size_t>> supports;
    auto e = indices(t, w.e_colors);
    if (w.center_dim == 1) {
        auto s0 = e, s1 = e;
        s0.push_back(t.index(w.h_pair->first));
        s1.push_back(t.index(w.h_pair->second));
        supports = {s0, s1};
    } else {
        supports = {e};
    }
    Vec target = -chi;
    std::set<std::vector<long>> coeffs;
    long widest = 0;
    for (auto& s : supports) {
        std::sort(s.begin(), s.end());
        auto m = max_sum(t, s, target);
        if (!m) continue;
        widest = std::max(widest, *m);
        enumerate(t, s, *m, target, [&](const std::vector<long>& a) { coeffs.insert(a); });
    }
    std::vector<WellElement> out;
    for (const auto& a : coeffs) out.push_back({combine(t, a), a});
    std::sort(out.begin(), out.end(), [](const WellElement& x, const WellElement& y) { return x.lambda < y.lambda; });

    // guard against the raw definition
    auto zero = zero_well_generators(w);
    long reach = 0;
    for (const auto& z : zero) reach = std::max(reach, coeff_sum(z));
    for (const auto& el : out)
        for (const auto& z : zero)
            if (membership(t, el.lambda - combine(t, z), target))
                throw WellError("bottom criterion disagrees with the definition at " + to_string(el.lambda));
    auto well = chi_well(w, chi, widest + reach);
    for (const auto& el : well.lambdas) {
        bool minimal = std::none_of(zero.begin(), zero.end(), [&](const std::vector<long>& z) {
            return membership(t, el.lambda - combine(t, z), target).has_value();
        });
        bool listed = std::any_of(out.begin(), out.end(), [&](const WellElement& b) { return b.lambda == el.lambda; });
        if (minimal != listed)
            throw WellError("bottom criterion disagrees with the definition at " + to_string(el.lambda));
    }
    return out;
}

std::vector<Vec> bottom(const WellCase& w, const Vec& chi) {
    std::vector<Vec> out;
    for (const auto& el : bottom_elements(w, chi)) out.push_back(el.lambda);
    return out;
}

Decomposition decompose(const WellCase& w, const Vec& chi, const Vec& lambda) {
    const auto& t = w.table;
    if (!w.h_extra.empty()) throw WellError("decomposition needs every pulled-back color classified");
    auto a = membership(t, lambda, -chi);
    if (!a) throw WellError("weight " + to_string(lambda) + " is not in the well");
    Decomposition d;
    d.b_coeffs = *a;
    d.s_coeffs.assign(a->size(), 0);
    for (const auto& id : w.h_trivial) {
        auto i = t.index(id);
        d.s_coeffs[i] = d.b_coeffs[i];
        d.b_coeffs[i] = 0;
    }
    if (w.h_pair) {
        auto i0 = t.index(w.h_pair->first), i1 = t.index(w.h_pair->second);
        long m = std::min(d.b_coeffs[i0], d.b_coeffs[i1]);
        for (auto i : {i0, i1}) {
            d.s_coeffs[i] = m;
            d.b_coeffs[i] -= m;
        }
    }
    d.b = combine(t, d.b_coeffs);
    d.s = combine(t, d.s_coeffs);
    return d;
}

long d_chi(const WellCase& w, const Vec& chi) { return static_cast<long>(bottom(w, chi).size()); }

bool free_monoid_check(const WellCase& w) {
    long n = 0;
    for (const auto& id : w.h_colors())
        if (!is_zero(w.table.at(id).chi)) ++n;
    return n <= 2;
}

}  // namespace ewm
