#include "doctest.h"

#include "ewm/cones.hpp"
#include "ewm/linalg.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace ewm;

TEST_CASE("lp basics") {
    // min x+y s.t. x+2y >= 4, 3x+y >= 6
    std::vector<LPRow> rows{{qv({1, 2}), RowRel::GE, 4}, {qv({3, 1}), RowRel::GE, 6}};
    auto r = lp_minimize(rows, qv({1, 1}));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Q(14, 5));
    CHECK(lp_minimize({{qv({1}), RowRel::LE, -1}}, qv({1})).status == LPStatus::Infeasible);
    CHECK(lp_minimize({{qv({1, -1}), RowRel::EQ, 0}}, qv({-1, 0})).status == LPStatus::Unbounded);
}

TEST_CASE("distinguished example") {
    FeasibilityProblem p;
    p.generators = {qv({0, 1, -1}), qv({0, -1, 1})};
    for (std::size_t i = 0; i < 3; ++i) p.tests.push_back({unit(3, i), Rel::GE});
    p.mode = CoefMode::StrictlyPositive;
    auto f = feasible(p);
    REQUIRE(f.feasible);
    CHECK(f.witness == qv({1, 1}));
}

TEST_CASE("non-parabolic example") {
    FeasibilityProblem p;
    p.generators = {qv({1, -1, 0}), qv({-1, 1, 1}), qv({0, -1, 1})};
    for (std::size_t i = 0; i < 3; ++i) p.tests.push_back({unit(3, i), Rel::GT});
    CHECK_FALSE(feasible(p).feasible);
}

TEST_CASE("vacuous tests") {
    FeasibilityProblem p;
    p.generators = {qv({1, 2})};
    auto f = feasible(p);
    CHECK(f.feasible);
    p.mode = CoefMode::StrictlyPositive;
    f = feasible(p);
    CHECK(f.feasible);
    CHECK(f.witness == qv({1}));
}

TEST_CASE("nonnegative span") {
    std::vector<Vec> s = {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})};
    Vec v = {Q(1, 2), Q(1), Q(1, 2)};
    CHECK(in_nonneg_span(v, s));
    CHECK_FALSE(in_nonneg_span(v, {s[0], s[1]}));
    CHECK(in_nonneg_span(qv({0, 0}), {}));
    CHECK_FALSE(in_nonneg_span(qv({-1, 0, 0}), s));
}

TEST_CASE("cone intersection small examples") {
    CHECK(cone_subspace_intersection({qv({1, 0}), qv({0, 1})}, {qv({1, 0}), qv({-1, 1})}).empty());
    std::vector<Vec> rays{qv({0, 1}), qv({1, 0})};
    CHECK(cone_subspace_intersection(rays, {}) == std::vector<Vec>{qv({0, 1}), qv({1, 0})});
    // Sigma coordinates of the Spin(2n+2) data, kernels rho(Dn), rho(Dn+1)
    auto out = cone_subspace_intersection({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})},
                                          {qv({0, 1, -1}), qv({0, -1, 1})});
    CHECK(out == std::vector<Vec>{qv({0, 1, 1}), qv({1, 0, 0})});
}

namespace {

// lattice points of cone(rays) in the subspace, found by scanning coefficients
std::vector<Vec> scan(const std::vector<Vec>& rays, const std::vector<Vec>& kernels, long bound) {
    std::vector<Vec> pts;
    std::vector<long> c(rays.size(), 0);
    while (true) {
        Vec v = zeros(rays[0].size());
        for (std::size_t i = 0; i < rays.size(); ++i) v += Q(c[i]) * rays[i];
        bool in = true;
        for (const auto& k : kernels) in = in && dot(k, v) == 0;
        if (in && !is_zero(v)) pts.push_back(v);
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound) c[i++] = 0;
        if (i == c.size()) break;
        ++c[i];
    }
    return pts;
}

}  // namespace

TEST_CASE("cone intersection agrees with a coefficient scan") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t dim = 3 + trial % 2, n = 3 + trial % 3;
        std::vector<Vec> rays(n, zeros(dim));
        for (auto& r : rays)
            for (auto& x : r) x = e(rng);
        std::vector<Vec> kernels(1 + trial % 2, zeros(dim));
        for (auto& k : kernels)
            for (auto& x : k) x = e(rng);
        bool degenerate = false;
        for (const auto& r : rays) degenerate = degenerate || is_zero(r);
        if (degenerate) continue;
        auto out = cone_subspace_intersection(rays, kernels);
        for (const auto& r : out) {
            CHECK(in_nonneg_span(r, rays));
            for (const auto& k : kernels) CHECK(dot(k, r) == 0);
        }
        // every scanned point lies in the cone spanned by the output
        for (const auto& p : scan(rays, kernels, 3)) CHECK(in_nonneg_span(p, out));
        // no output ray is redundant
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::vector<Vec> others;
            for (std::size_t j = 0; j < out.size(); ++j)
                if (j != i) others.push_back(out[j]);
            CHECK_FALSE(in_nonneg_span(out[i], others));
        }
    }
}
