#pragma once

#include "ewm/generators.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ewm {

struct WellCase {
    GeneratorTable table;
    ColorSet h_trivial;
    std::optional<std::pair<std::string, std::string>> h_pair;
    // pulled-back colors that fit neither class; blocks the bottom criterion
    ColorSet h_extra;
    ColorSet e_colors;
    int center_dim = 0;

    ColorSet h_colors() const;
};

class WellError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// e_colors left empty are filled with the remaining ids; throws WellError on a bad partition
WellCase make_well_case(GeneratorTable table, ColorSet h_trivial,
                        std::optional<std::pair<std::string, std::string>> h_pair, ColorSet h_extra,
                        int center_dim);

struct WellElement {
    Vec lambda;
    std::vector<long> coeffs;  // table order
};

struct ChiWellResult {
    Vec chi;
    std::vector<WellElement> lambdas;
    std::vector<Vec> bottom;
    long d_chi = 0;
};

// coefficient sums <= bound, sorted by lambda
ChiWellResult chi_well(const WellCase& w, const Vec& chi, long bound);

// minimal nonzero coefficient vectors with zero character
std::vector<std::vector<long>> zero_well_generators(const WellCase& w);

std::vector<Vec> bottom(const WellCase& w, const Vec& chi);
std::vector<WellElement> bottom_elements(const WellCase& w, const Vec& chi);

struct Decomposition {
    Vec b;
    Vec s;
    std::vector<long> b_coeffs;
    std::vector<long> s_coeffs;
};
Decomposition decompose(const WellCase& w, const Vec& chi, const Vec& lambda);

long d_chi(const WellCase& w, const Vec& chi);

bool free_monoid_check(const WellCase& w);

Vec combine(const GeneratorTable& t, const std::vector<long>& coeffs);  // sum a_D omega_D

}  // namespace ewm
