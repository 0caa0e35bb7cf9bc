#pragma once

#include "ewm/rootlat.hpp"
#include "ewm/well.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ewm {

using IWeight = std::vector<long>;

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CharacterTable {
    std::map<IWeight, long long> entries;  // fundamental coordinates
    long long total() const;
};

// multiplicities of the dominant weights only
std::map<IWeight, long long> dominant_multiplicities(const RootSystem& r, const IWeight& lambda,
                                                     std::size_t rank_cap = 6);
CharacterTable freudenthal(const RootSystem& r, const IWeight& lambda, std::size_t rank_cap = 6);
IWeight dominant_conjugate(const RootSystem& r, IWeight v);

struct BranchingSetup {
    RootSystem g;
    RootSystem h;
    // row i: image of the i-th G fundamental weight as (H fundamental coords, central coords)
    Mat torus_map;
    // oracle coordinates of a P-character; empty means identity
    Mat chi_map;
    std::vector<std::size_t> p_levi;  // H simple roots in the Levi of P, 0-based

    std::size_t central_dim() const;
    std::size_t dim() const { return h.rank() + central_dim(); }
    Vec restrict(const IWeight& w) const;
    Vec chi_to_oracle(const Vec& chi) const;
};

using Branching = std::map<Vec, long long>;

class Brancher {
public:
    explicit Brancher(BranchingSetup s) : setup_(std::move(s)) {}
    Branching operator()(const IWeight& lambda);
    const BranchingSetup& setup() const { return setup_; }

private:
    const CharacterTable& h_character(const IWeight& mu);
    BranchingSetup setup_;
    std::map<IWeight, CharacterTable> cache_;
};

Branching branch(const BranchingSetup& s, const IWeight& lambda);
long long well_membership_oracle(const BranchingSetup& s, const IWeight& lambda, const Vec& chi_oracle);

struct CrosscheckMismatch {
    IWeight lambda;
    bool predicted = false;
    long long multiplicity = 0;
};

struct CrosscheckReport {
    long checked = 0;
    bool skipped = false;  // neither the character nor its dual extends to P
    bool dual = false;     // membership tested on the dual pair
    std::vector<CrosscheckMismatch> mismatches;
    std::vector<CrosscheckMismatch> high_multiplicity;
    bool ok() const { return !skipped && mismatches.empty() && high_multiplicity.empty(); }
};

// every G-dominant lambda with coordinate sum <= bound
CrosscheckReport crosscheck(const BranchingSetup& s, const WellCase& w, const Vec& chi, long bound);

std::vector<IWeight> dominant_weights_up_to(std::size_t rank, long bound);

}  // namespace ewm
