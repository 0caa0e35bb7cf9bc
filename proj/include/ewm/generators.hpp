#pragma once

#include "ewm/morph.hpp"
#include "ewm/sphdata.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ewm {

struct PCharSpace {
    std::vector<std::string> labels;
    std::size_t dim() const { return labels.size(); }
};

struct RestrictionContext {
    PCharSpace space;
    // image of each ambient fundamental weight; nullopt when the case leaves it unspecified
    std::vector<std::optional<Vec>> restrict;
    std::map<std::string, std::size_t> boundary_root_of;

    Vec apply(const Vec& omega) const;
};

// boundary_root_of derived from the datum: the colors outside the subset
RestrictionContext make_context(const SphericalDatum& d, const ColorSet& subset, PCharSpace space,
                                std::vector<std::optional<Vec>> restrict);

struct Generator {
    std::string id;
    Vec omega;  // fundamental coordinates
    Vec chi;    // PCharSpace coordinates
};

struct GeneratorTable {
    std::vector<Generator> entries;
    std::size_t rank = 0;  // ambient rank
    std::size_t pdim = 0;  // PCharSpace dimension

    const Generator& at(const std::string& id) const;
    std::size_t index(const std::string& id) const;
    Vec stacked(std::size_t i) const;  // (omega, chi)
};

class GeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Vec omega_of_color(const SphericalDatum& d, const std::string& id);
std::map<std::string, Vec> boundary_chi(const SphericalDatum& d, const ColorSet& subset,
                                        const RestrictionContext& ctx);
GeneratorTable solve_generators(const SphericalDatum& d, const ColorSet& subset,
                                const RestrictionContext& ctx);

bool generators_independent(const GeneratorTable& t);
// (sigma, 0) - sum_D c(D, sigma) (omega_D, chi_D)
Vec sphroot_residual(const GeneratorTable& t, const SphericalDatum& d, std::size_t sigma_index);
std::size_t pairing_rank(const SphericalDatum& d, const ColorSet& subset);

// coefficients in table order, or nullopt
std::optional<std::vector<long>> membership(const GeneratorTable& t, const Vec& lambda, const Vec& chi);

enum class Check { Pass, Fail, NotApplicable };
std::string to_string(Check c);

struct RankReport {
    Check character_rank = Check::NotApplicable;  // rk X(P) = |Delta| - rk Xi
    Check quotient_rank = Check::NotApplicable;   // rk Xi - dim span rho(Delta') = rk X(Q) - rk X(P)
    std::string detail;
};

RankReport rank_identities(const GeneratorTable& t, const SphericalDatum& d, long rk_xp,
                           const ColorSet& subset);

}  // namespace ewm
