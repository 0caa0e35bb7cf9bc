#pragma once

#include "ewm/rootlat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ewm {

struct Color {
    std::string id;
    std::vector<std::size_t> moved_by;  // 0-based simple root indices
    Vec pairing;                        // c(D, sigma) in the order of SphericalDatum::sigma
    std::optional<Vec> rho;             // functional on the xi basis
};

struct SphericalDatum {
    RootSystem ambient;
    std::vector<std::size_t> sp;  // S^p
    std::vector<Vec> sigma;       // root coordinates
    std::vector<Vec> xi_basis;    // root coordinates; empty means Z-span of sigma
    std::vector<Color> colors;
    bool wonderful = false;
    bool simply_connected = true;

    std::size_t color_index(const std::string& id) const;
    const Color& color(const std::string& id) const;
    std::vector<std::string> color_ids() const;
    const std::vector<Vec>& lattice_basis() const;
    std::size_t xi_rank() const;
    // sigma expressed in the lattice basis, nullopt if outside its span
    std::optional<Vec> in_lattice_basis(const Vec& root_coords) const;
    // index of sigma equal to alpha_i, if any
    std::optional<std::size_t> sigma_simple_index(std::size_t i) const;
    bool doubled_simple_root(std::size_t i) const;  // 2 alpha_i in Sigma
};

std::vector<std::string> validate(const SphericalDatum& d);
std::vector<std::string> colors_moved_by(const SphericalDatum& d, std::size_t alpha);
Q cartan_pairing(const SphericalDatum& d, const std::string& id, std::size_t sigma_index);

}  // namespace ewm
