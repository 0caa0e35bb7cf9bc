#include "ewm/sphdata.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ewm {

std::size_t SphericalDatum::color_index(const std::string& id) const {
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i].id == id) return i;
    throw std::invalid_argument("unknown color '" + id + "'");
}

const Color& SphericalDatum::color(const std::string& id) const { return colors[color_index(id)]; }

std::vector<std::string> SphericalDatum::color_ids() const {
    std::vector<std::string> ids;
    for (const auto& c : colors) ids.push_back(c.id);
    return ids;
}

const std::vector<Vec>& SphericalDatum::lattice_basis() const {
    return xi_basis.empty() ? sigma : xi_basis;
}

std::size_t SphericalDatum::xi_rank() const {
    const auto& b = lattice_basis();
    return b.empty() ? 0 : rank(b);
}

std::optional<Vec> SphericalDatum::in_lattice_basis(const Vec& v) const {
    const auto& b = lattice_basis();
    if (b.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return solve(transpose(b), v);
}

std::optional<std::size_t> SphericalDatum::sigma_simple_index(std::size_t i) const {
    Vec a = unit(ambient.rank(), i);
    for (std::size_t s = 0; s < sigma.size(); ++s)
        if (sigma[s] == a) return s;
    return std::nullopt;
}

bool SphericalDatum::doubled_simple_root(std::size_t i) const {
    Vec a = Q(2) * unit(ambient.rank(), i);
    return std::find(sigma.begin(), sigma.end(), a) != sigma.end();
}

std::vector<std::string> validate(const SphericalDatum& d) {
    std::vector<std::string> out;
    const std::size_t r = d.ambient.rank();
    std::set<std::string> ids;
    for (const auto& c : d.colors) {
        if (!ids.insert(c.id).second) out.push_back("duplicate color id " + c.id);
        if (c.moved_by.empty()) out.push_back("color " + c.id + " is moved by no simple root");
        for (auto a : c.moved_by)
            if (a >= r) out.push_back("color " + c.id + " names a simple root out of range");
        if (c.pairing.size() != d.sigma.size())
            out.push_back("color " + c.id + " has a pairing row of the wrong length");
    }
    for (const auto& s : d.sigma)
        if (s.size() != r) out.push_back("spherical root " + to_string(s) + " has the wrong length");
    for (const auto& b : d.xi_basis)
        if (b.size() != r) out.push_back("lattice vector " + to_string(b) + " has the wrong length");
    if (!out.empty()) return out;

    if (!d.xi_basis.empty() && rank(d.xi_basis) != d.xi_basis.size())
        out.push_back("xi basis is linearly dependent");

    for (std::size_t a = 0; a < r; ++a) {
        std::size_t n = 0;
        for (const auto& c : d.colors)
            if (std::count(c.moved_by.begin(), c.moved_by.end(), a)) ++n;
        bool in_sigma = d.sigma_simple_index(a).has_value();
        bool in_sp = std::count(d.sp.begin(), d.sp.end(), a) > 0;
        const std::string name = d.ambient.root_name(a);
        if (in_sigma && n != 2)
            out.push_back(name + " ∈ S∩Σ moves " + std::to_string(n) + " color" + (n == 1 ? "" : "s"));
        if (!in_sigma && n == 2) out.push_back(name + " ∉ Σ moves 2 colors");
        if (n > 2) out.push_back(name + " moves " + std::to_string(n) + " colors");
        if (in_sp && n != 0) out.push_back(name + " ∈ S^p moves " + std::to_string(n) + " colors");
        if (!in_sp && n == 0) out.push_back(name + " moves no color but is not in S^p");
    }

    for (std::size_t s = 0; s < d.sigma.size(); ++s) {
        auto x = d.in_lattice_basis(d.sigma[s]);
        if (!x || !is_integral(*x)) {
            out.push_back("σ" + std::to_string(s + 1) + " = " + to_string(d.sigma[s]) + " not in Ξ");
            continue;
        }
        if (primitive(*x) != *x) out.push_back("σ" + std::to_string(s + 1) + " not primitive in Ξ");
    }

    if (d.wonderful) {
        if (!d.sigma.empty() && rank(d.sigma) != d.sigma.size())
            out.push_back("wonderful datum with linearly dependent Σ");
        if (d.sigma.size() != d.xi_rank()) {
            out.push_back("wonderful datum with |Σ| != rk Ξ");
        } else if (!d.sigma.empty()) {
            Mat m;
            for (const auto& s : d.sigma) m.push_back(*d.in_lattice_basis(s));
            auto inv = inverse(m);
            if (!inv || !std::all_of(inv->begin(), inv->end(), [](const Vec& v) { return is_integral(v); }))
                out.push_back("wonderful datum: Σ is not a basis of Ξ");
        }
    }

    for (const auto& c : d.colors) {
        if (!c.rho) continue;
        if (c.rho->size() != d.lattice_basis().size()) {
            out.push_back("color " + c.id + " has rho of the wrong length");
            continue;
        }
        for (std::size_t s = 0; s < d.sigma.size(); ++s) {
            auto x = d.in_lattice_basis(d.sigma[s]);
            if (x && dot(*c.rho, *x) != c.pairing[s])
                out.push_back("color " + c.id + ": rho disagrees with c(D,σ" + std::to_string(s + 1) + ")");
        }
    }

    if (!d.simply_connected)
        for (std::size_t a = 0; a < r; ++a)
            if (d.doubled_simple_root(a))
                out.push_back("non simply connected ambient with 2" + d.ambient.root_name(a) + " ∈ Σ");
    return out;
}

std::vector<std::string> colors_moved_by(const SphericalDatum& d, std::size_t alpha) {
    if (alpha >= d.ambient.rank()) throw std::out_of_range("simple root index out of range");
    std::vector<std::string> ids;
    for (const auto& c : d.colors)
        if (std::count(c.moved_by.begin(), c.moved_by.end(), alpha)) ids.push_back(c.id);
    return ids;
}

Q cartan_pairing(const SphericalDatum& d, const std::string& id, std::size_t s) {
    const auto& c = d.color(id);
    if (s >= c.pairing.size()) throw std::out_of_range("spherical root index out of range");
    return c.pairing[s];
}

}  // namespace ewm
