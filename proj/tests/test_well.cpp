#include "doctest.h"

#include "ewm/well.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace ewm;

namespace {

struct Fixture {
    CaseFile c;
    WellCase w;
};

Fixture fixture(const std::string& name) {
    auto c = load_named(name);
    auto t = compute_generators(c).table;
    auto w = well_case_of(c, t);
    return {std::move(c), std::move(w)};
}

std::vector<Vec> lambdas(const ChiWellResult& r) {
    std::vector<Vec> out;
    for (const auto& e : r.lambdas) out.push_back(e.lambda);
    return out;
}

// every a with sum <= bound whose character is -chi, by a plain odometer
std::set<Vec> brute_well(const GeneratorTable& t, const Vec& chi, long bound) {
    std::set<Vec> out;
    std::vector<long> a(t.entries.size(), 0);
    while (true) {
        long sum = 0;
        for (auto x : a) sum += x;
        if (sum <= bound) {
            Vec c = zeros(t.pdim);
            for (std::size_t i = 0; i < a.size(); ++i) c += Q(a[i]) * t.entries[i].chi;
            if (c == -chi) out.insert(combine(t, a));
        }
        std::size_t i = 0;
        while (i < a.size() && a[i] == bound) a[i++] = 0;
        if (i == a.size()) break;
        ++a[i];
    }
    return out;
}

// bottom straight from the definition, within a degree window
std::set<Vec> brute_bottom(const GeneratorTable& t, const Vec& chi, long bound) {
    auto well = brute_well(t, chi, bound);
    auto zero = brute_well(t, zeros(t.pdim), bound);
    std::set<Vec> out;
    for (const auto& l : well) {
        bool minimal = true;
        for (const auto& z : zero)
            if (!is_zero(z) && membership(t, l - z, -chi)) minimal = false;
        if (minimal) out.insert(l);
    }
    return out;
}

}  // namespace

TEST_CASE("G2 well listing") {
    auto f = fixture("sph5S_g2_sl3.json");
    auto r = chi_well(f.w, f.c.parse_chi("3*w1"), 6);
    std::vector<Vec> want;
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= 3; ++b) {
            long c = 3 - b;
            if (a + b + c <= 6) want.push_back(qv({a + b, c}));
        }
    std::sort(want.begin(), want.end());
    CHECK(lambdas(r) == want);
    CHECK(lambdas(chi_well(f.w, f.c.parse_chi("0"), 0)) == std::vector<Vec>{qv({0, 0})});
}

TEST_CASE("well listing agrees with brute force") {
    for (auto name : {"sph5S_g2_sl3.json", "table1_row2_sp4.json", "sym7aS_sp8_p2q2.json"}) {
        auto f = fixture(name);
        for (auto chi : {"0", "w1", "2*w1", "mu", "2*mu", "-mu"}) {
            Vec x;
            try {
                x = f.c.parse_chi(chi);
            } catch (const std::exception&) {
                continue;
            }
            auto got = lambdas(chi_well(f.w, x, 4));
            auto want = brute_well(f.w.table, x, 4);
            CHECK_MESSAGE(std::set<Vec>(got.begin(), got.end()) == want, name, " ", chi);
            CHECK(got.size() == want.size());
        }
    }
}

TEST_CASE("bottoms") {
    auto g = fixture("sph5S_g2_sl3.json");
    CHECK(bottom(g.w, g.c.parse_chi("3*w1")) == std::vector<Vec>{qv({0, 3}), qv({1, 2}), qv({2, 1}), qv({3, 0})});
    CHECK(d_chi(g.w, g.c.parse_chi("3*w1")) == 4);
    CHECK(bottom(g.w, g.c.parse_chi("0")) == std::vector<Vec>{qv({0, 0})});
    CHECK(d_chi(g.w, g.c.parse_chi("w1")) == 2);
    CHECK(bottom(g.w, g.c.parse_chi("w2")).empty());

    auto s = fixture("table1_row2_sp4.json");
    CHECK(bottom(s.w, s.c.parse_chi("2*mu")) == std::vector<Vec>{qv({2, 0})});
    CHECK(bottom(s.w, s.c.parse_chi("-mu")) == std::vector<Vec>{qv({1, 0})});
}

TEST_CASE("bottom agrees with the definition") {
    for (auto name : {"sph5S_g2_sl3.json", "table1_row2_sp4.json", "sph6aS_sp4xsp4_m2n2.json"}) {
        auto f = fixture(name);
        for (const auto& lab : f.c.space.labels)
            for (long k : {1, 2, 3}) {
                Vec chi = Q(k) * f.c.parse_chi(lab);
                auto got = bottom(f.w, chi);
                auto want = brute_bottom(f.w.table, chi, 6);
                CHECK_MESSAGE(std::set<Vec>(got.begin(), got.end()) == want, name, " ", k, "*", lab);
            }
    }
}

TEST_CASE("decomposition") {
    auto f = fixture("sph5S_g2_sl3.json");
    Vec chi = f.c.parse_chi("3*w1");
    auto d = decompose(f.w, chi, qv({4, 3}));
    CHECK(d.b == qv({0, 3}));
    CHECK(d.s == qv({4, 0}));
    d = decompose(f.w, chi, qv({5, 0}));
    CHECK(d.b == qv({3, 0}));
    CHECK(d.s == qv({2, 0}));
    d = decompose(f.w, chi, qv({1, 2}));
    CHECK(d.b == qv({1, 2}));
    CHECK(d.s == qv({0, 0}));
    CHECK_THROWS_AS(decompose(f.w, chi, qv({1, 0})), WellError);
}

TEST_CASE("decomposition is unique") {
    for (auto name : {"sph5S_g2_sl3.json", "table1_row2_sp4.json"}) {
        auto f = fixture(name);
        const auto& t = f.w.table;
        for (const auto& lab : f.c.space.labels)
            for (long k : {-2, -1, 0, 1, 2, 3}) {
                Vec chi = Q(k) * f.c.parse_chi(lab);
                auto bot = bottom(f.w, chi);
                for (const auto& e : chi_well(f.w, chi, 8).lambdas) {
                    long pairs = 0;
                    Vec found_b;
                    for (const auto& b : bot)
                        if (membership(t, e.lambda - b, zeros(t.pdim))) {
                            ++pairs;
                            found_b = b;
                        }
                    CHECK_MESSAGE(pairs == 1, name, " ", to_string(e.lambda));
                    auto d = decompose(f.w, chi, e.lambda);
                    CHECK(d.b == found_b);
                    CHECK(d.b + d.s == e.lambda);
                }
            }
    }
}

TEST_CASE("free monoid check") {
    CHECK(free_monoid_check(fixture("table1_row2_sp4.json").w));
    CHECK_FALSE(free_monoid_check(fixture("table1_row1_sl5.json").w));
    CHECK_FALSE(free_monoid_check(fixture("table1_row3_spin10.json").w));
    CHECK(free_monoid_check(fixture("sph5S_g2_sl3.json").w));
}

TEST_CASE("well case partition") {
    auto t = fixture("table1_row2_sp4.json").w.table;
    CHECK_NOTHROW(make_well_case(t, {"D2"}, std::make_pair(std::string("D0"), std::string("D1")), {}, 1));
    CHECK_THROWS_AS(make_well_case(t, {"D2"}, std::make_pair(std::string("D0"), std::string("D1")), {}, 0),
                    WellError);
    CHECK_THROWS_AS(make_well_case(t, {"D0"}, std::nullopt, {}, 0), WellError);
    CHECK_THROWS_AS(make_well_case(t, {"D2", "D2"}, std::nullopt, {}, 0), WellError);
    CHECK_THROWS_AS(make_well_case(t, {"D2"}, std::make_pair(std::string("D0"), std::string("D2")), {}, 1),
                    WellError);
    auto w = make_well_case(t, {"D2"}, std::nullopt, {}, 0);
    CHECK(w.e_colors == ColorSet{"D0", "D1"});

    auto row1 = fixture("table1_row1_sl5.json");
    CHECK_THROWS_AS(bottom(row1.w, row1.c.parse_chi("eps")), WellError);
}

TEST_CASE("zero well generators") {
    auto s = fixture("table1_row2_sp4.json");
    auto z = zero_well_generators(s.w);
    // (omega1, mu) + (omega1, -mu) and (omega2, 0)
    CHECK(z == std::vector<std::vector<long>>{{0, 0, 1}, {1, 1, 0}});
}
