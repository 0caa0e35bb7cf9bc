#pragma once

#include "ewm/rational.hpp"

#include <vector>

namespace ewm {

// exact two-phase simplex, all variables non-negative
enum class RowRel { GE, LE, EQ };
struct LPRow {
    Vec a;
    RowRel rel;
    Q b;
};
enum class LPStatus { Optimal, Infeasible, Unbounded };
struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Vec x;
    Q value;
};
LPResult lp_minimize(const std::vector<LPRow>& rows, const Vec& cost);

enum class Rel { GE, GT };
enum class CoefMode { Nonneg, StrictlyPositive };

struct ConeTest {
    Vec f;
    Rel rel;
};

struct FeasibilityProblem {
    std::vector<Vec> generators;
    std::vector<ConeTest> tests;
    CoefMode mode = CoefMode::Nonneg;
};

struct Feasibility {
    bool feasible = false;
    Vec witness;  // primitive integer coefficients minimizing their sum
};

Feasibility feasible(const FeasibilityProblem& p);

std::vector<Vec> cone_subspace_intersection(const std::vector<Vec>& rays,
                                            const std::vector<Vec>& kernels);

bool in_nonneg_span(const Vec& v, const std::vector<Vec>& rays);

}  // namespace ewm
