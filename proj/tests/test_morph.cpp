#include "doctest.h"

#include "ewm/morph.hpp"
#include "support.hpp"

using namespace ewm;

namespace {

// SL(4)/Sp(4): one spherical root, one color moved by alpha2
SphericalDatum sl4_sp4() {
    SphericalDatum d;
    d.ambient = RootSystem::parse("A3");
    d.sp = {0, 2};
    d.sigma = {{Q(1, 2), Q(1), Q(1, 2)}};
    d.colors = {{"D2'", {1}, qv({1}), std::nullopt}};
    d.wonderful = true;
    return d;
}

bool still_parabolic_without_one(const SphericalDatum& d, const ColorSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        ColorSet t = s;
        t.erase(t.begin() + static_cast<long>(i));
        if (classify_subset(d, t).parabolic) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("subset verdicts on the Spin(2n+2) data") {
    for (auto name : {"sec8_spin8_n3.json", "sec8_spin10_n4.json"}) {
        auto d = datum_named(name);
        auto n = d.ambient.rank() - 1;
        std::string dn = "D" + std::to_string(n), dn1 = "D" + std::to_string(n + 1);
        auto v = classify_subset(d, {dn, dn1});
        CHECK(v.distinguished);
        CHECK_FALSE(v.parabolic);
        CHECK_FALSE(classify_subset(d, {"D1+", "D2", dn1}).parabolic);
        CHECK(classify_subset(d, {"D1+", "D2", dn}).parabolic);
    }
}

TEST_CASE("F4 witness") {
    auto d = datum_named("sym8cS_f4.json");
    auto v = classify_subset(d, {"D1", "D3", "D4+"});
    REQUIRE(v.parabolic);
    CHECK(*v.witness == qv({1, 2, 3}));
    CHECK(minimal_parabolic_subsets(d) == std::vector<ColorSet>{{"D1", "D3", "D4+"}});
}

TEST_CASE("minimal parabolic subsets") {
    auto g2 = datum_named("sph5S_g2_sl3.json");
    CHECK(minimal_parabolic_subsets(g2) == std::vector<ColorSet>{{"D1+", "D2"}});

    auto s26 = datum_named("sym2-6S_sl6_p1q3.json");
    auto m = minimal_parabolic_subsets(s26);
    CHECK(std::find(m.begin(), m.end(), ColorSet{"D1+", "D1-", "D2", "D3-", "D4"}) != m.end());
    CHECK(std::find(m.begin(), m.end(), ColorSet{"D1+", "D1-", "E2", "D3-", "E4"}) != m.end());

    for (const auto& p : case_files(EWM_CASE_DIR)) {
        auto c = load_case(p);
        if (!c.datum) continue;
        for (const auto& s : minimal_parabolic_subsets(*c.datum)) {
            CHECK_MESSAGE(classify_subset(*c.datum, s).parabolic, c.id);
            CHECK_MESSAGE(!still_parabolic_without_one(*c.datum, s), c.id);
        }
    }
}

TEST_CASE("mandatory colors") {
    CHECK(mandatory_colors(datum_named("sym8bS_f4.json")) == ColorSet{"D1+", "D1-"});
    CHECK(mandatory_colors(datum_named("sph5S_g2_sl3.json")).empty());
}

TEST_CASE("subset enumeration") {
    auto g2 = datum_named("sph5S_g2_sl3.json");
    auto par = all_subsets(g2, SubsetKind::Parabolic);
    for (const auto& s : par) CHECK(classify_subset(g2, s).parabolic);
    CHECK(std::find(par.begin(), par.end(), ColorSet{"D1+", "D2"}) != par.end());
    CHECK(par.back() == ColorSet{"D1+", "D1-", "D2"});
    for (const auto& s : all_subsets(g2, SubsetKind::Distinguished)) CHECK(classify_subset(g2, s).distinguished);
}

TEST_CASE("quotient spherical roots") {
    auto g2 = datum_named("sph5S_g2_sl3.json");
    CHECK(quotient_spherical_roots(g2, {"D1+", "D2"}).empty());
    auto all = quotient_spherical_roots(g2, {});
    CHECK(all.size() == 2);
    auto s8 = datum_named("sec8_spin8_n3.json");
    auto q = quotient_spherical_roots(s8, {"D3", "D4"});
    // alpha1 and sigma1+sigma2
    CHECK(q == std::vector<Vec>{qv({0, 2, 1, 1}), qv({1, 0, 0, 0})});
}

TEST_CASE("morphism data") {
    auto dx = datum_named("sym1cS_sl4.json");
    auto dy = sl4_sp4();
    ColorSet sub{"D1+", "D1-", "D2-", "D3-"};
    std::string why;
    CHECK(check_morphism_data(dx, sub, dy, {{"D2'", "D2+"}}, &why));

    auto doubled = dy;
    doubled.sigma = {qv({1, 2, 1})};
    doubled.colors[0].pairing = qv({2});
    CHECK_FALSE(check_morphism_data(dx, sub, doubled, {{"D2'", "D2+"}}, &why));

    auto moved = dy;
    moved.colors[0].moved_by = {0};
    why.clear();
    CHECK_FALSE(check_morphism_data(dx, sub, moved, {{"D2'", "D2+"}}, &why));
    CHECK(why.find("moving roots") != std::string::npos);

    CHECK_THROWS(check_morphism_data(dx, sub, dy, {{"D2'", "D1-"}}));
}

TEST_CASE("parabolic in H") {
    auto dx = datum_named("sym1cS_sl4.json");
    CHECK(check_parabolic_in_H(dx, sl4_sp4()));

    auto a1 = sl4_sp4();
    a1.sp = {2};
    a1.sigma = {qv({1, 0, 0})};
    a1.xi_basis = {};
    a1.colors = {{"D1+", {0}, qv({1}), std::nullopt}, {"D1-", {0}, qv({1}), std::nullopt},
                 {"D2", {1}, qv({-1}), std::nullopt}};
    CHECK_FALSE(check_parabolic_in_H(dx, a1));

    auto empty = a1;
    empty.sigma.clear();
    CHECK_FALSE(check_parabolic_in_H(dx, empty));
    auto point = empty;
    CHECK(check_parabolic_in_H(point, empty));
}

TEST_CASE("subset normalization") {
    auto g2 = datum_named("sph5S_g2_sl3.json");
    CHECK(normalize_subset(g2, {"D2", "D1+"}) == ColorSet{"D1+", "D2"});
    CHECK_THROWS(normalize_subset(g2, {"D2", "D2"}));
    CHECK_THROWS(normalize_subset(g2, {"X"}));
}
