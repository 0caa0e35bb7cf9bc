#pragma once

#include "ewm/cones.hpp"
#include "ewm/sphdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ewm {

using ColorSet = std::vector<std::string>;

struct SubsetVerdict {
    ColorSet subset;
    bool distinguished = false;
    bool parabolic = false;
    std::optional<Vec> witness;  // parabolic witness if parabolic, else distinguished witness
};

SubsetVerdict classify_subset(const SphericalDatum& d, const ColorSet& subset);

// colors moved by two or more simple roots
ColorSet mandatory_colors(const SphericalDatum& d);

std::vector<ColorSet> minimal_parabolic_subsets(const SphericalDatum& d, bool mandatory_filter = true);

// every subset of the given kind, in order of size then datum order
enum class SubsetKind { Distinguished, Parabolic };
std::vector<ColorSet> all_subsets(const SphericalDatum& d, SubsetKind kind);

// root coordinates, primitive in the lattice
std::vector<Vec> quotient_spherical_roots(const SphericalDatum& d, const ColorSet& subset);

bool check_morphism_data(const SphericalDatum& dx, const ColorSet& subset, const SphericalDatum& dy,
                         const std::map<std::string, std::string>& psi, std::string* why = nullptr);

bool check_parabolic_in_H(const SphericalDatum& dx, const SphericalDatum& dy);

// datum order, duplicates and unknown ids rejected
ColorSet normalize_subset(const SphericalDatum& d, const ColorSet& subset);

}  // namespace ewm
