#pragma once

#include "ewm/linalg.hpp"
#include "ewm/rational.hpp"

#include <string>
#include <vector>

namespace ewm {

struct Factor {
    char type;
    int rank;
};

enum class Basis { Fundamental, Root };

struct Weight {
    Vec coords;
    Basis basis = Basis::Fundamental;
};

class RootSystem {
public:
    RootSystem() = default;
    static RootSystem build(const std::vector<Factor>& factors);
    // "G2", "C2xC1", "A1xA1xA1"
    static RootSystem parse(const std::string& spec);

    std::size_t rank() const { return cartan_.size(); }
    const std::vector<Factor>& factors() const { return factors_; }
    std::string spec() const;

    // cartan(i, j) = <alpha_j, alpha_i^vee>; column j is alpha_j in the fundamental basis
    long cartan(std::size_t i, std::size_t j) const { return cartan_.at(i).at(j); }
    const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_; }

    std::size_t factor_of(std::size_t i) const { return factor_of_.at(i); }
    std::size_t offset(std::size_t factor) const { return offsets_.at(factor); }

    // display names: alpha1, alpha'1, omega1, omega'1 (unicode)
    std::string root_name(std::size_t i) const;
    std::string weight_name(std::size_t i) const;

    Vec simple_root(std::size_t i) const;  // fundamental coordinates
    Vec root_to_fund(const Vec& v) const;
    Vec fund_to_root(const Vec& v) const;
    Vec to_fund(const Weight& w) const;
    Vec to_root(const Weight& w) const;

    // squared length of alpha_i; long roots of each factor have length 2
    const Q& root_length(std::size_t i) const { return lengths_.at(i); }
    Q inner(const Vec& a, const Vec& b) const;  // both in fundamental coordinates

    // positive roots, root coordinates, ordered by height
    const std::vector<Vec>& positive_roots() const { return positive_; }
    const std::vector<Vec>& positive_roots_fund() const { return positive_fund_; }

    // index permutation of -w0 on fundamental weights
    std::vector<std::size_t> dual_permutation() const;

    bool operator==(const RootSystem& o) const { return spec() == o.spec(); }

private:
    std::vector<Factor> factors_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> factor_of_;
    std::vector<std::vector<long>> cartan_;
    Mat cartan_q_;
    Mat cartan_inv_;
    Vec lengths_;
    std::vector<Vec> positive_;
    std::vector<Vec> positive_fund_;
};

std::vector<std::vector<long>> bourbaki_cartan(char type, int rank);
std::size_t expected_positive_root_count(char type, int rank);

Q pair(const RootSystem& r, const Weight& w, std::size_t i);
bool dominance_leq(const RootSystem& r, const Vec& lambda, const Vec& mu);
bool is_dominant_integral(const Vec& lambda);
Z weyl_dimension(const RootSystem& r, const Vec& lambda);

// Linear combinations of labels: "3*w1", "2*eps+1*w2", "-1/2*w3", "w0-w3", "0".
Vec parse_label_expr(const std::string& expr, const std::vector<std::string>& labels);
std::string format_label_expr(const Vec& v, const std::vector<std::string>& labels);

}  // namespace ewm
