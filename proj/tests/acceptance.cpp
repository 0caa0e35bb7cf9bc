#include "ewm/cases.hpp"
#include "ewm/morph.hpp"
#include "ewm/oracle.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>

using namespace ewm;

namespace {

using Clock = std::chrono::steady_clock;

std::string dir = EWM_CASE_DIR;

CaseFile named(const std::string& f) { return load_case(dir + "/" + f); }

WellCase well_of(const CaseFile& c) { return well_case_of(c, compute_generators(c).table); }

std::set<std::pair<Vec, Vec>> pairs(const GeneratorTable& t) {
    std::set<std::pair<Vec, Vec>> s;
    for (const auto& g : t.entries) s.insert({g.omega, g.chi});
    return s;
}

bool criterion1(std::string& why) {
    auto c = named("sph5S_g2_sl3.json");
    auto t = compute_generators(c).table;
    std::set<std::pair<Vec, Vec>> want{{from_ints(std::vector<long>{1, 0}), c.parse_chi("0")},
                                       {from_ints(std::vector<long>{1, 0}), c.parse_chi("-w1")},
                                       {from_ints(std::vector<long>{0, 1}), c.parse_chi("-w1")}};
    if (t.entries.size() != 3 || pairs(t) != want) {
        why = "generator set differs";
        return false;
    }
    return true;
}

bool criterion2(std::string& why) {
    for (long n : {3, 4}) {
        auto c = named("sec8_spin" + std::to_string(2 * n + 2) + "_n" + std::to_string(n) + ".json");
        auto t = compute_generators(c).table;
        const std::size_t r = static_cast<std::size_t>(n + 1);
        auto w = [&](std::size_t i) { return unit(r, i - 1); };
        std::string wn = "w" + std::to_string(n);
        std::vector<std::tuple<std::string, Vec, std::string>> rows{
            {"D1+", w(1), "w0"},
            {"D1-", w(1), "-w0"},
            {"D2", w(2), "0"},
            {"D" + std::to_string(n), w(n), "w0-" + wn},
            {"D" + std::to_string(n + 1), w(n + 1), "-" + wn}};
        for (const auto& [id, omega, chi] : rows) {
            const auto& g = t.at(id);
            if (g.omega != omega || g.chi != c.parse_chi(chi)) {
                why = "n=" + std::to_string(n) + " color " + id;
                return false;
            }
        }
        if (t.entries.size() != 5) {
            why = "n=" + std::to_string(n) + " table size";
            return false;
        }
    }
    return true;
}

bool criterion3(std::string& why) {
    auto all = run_corpus(dir);
    long data = 0;
    for (const auto& e : all) {
        if (!e.report) {
            why = e.error;
            return false;
        }
        const auto& r = *e.report;
        if (!r.pass) {
            why = r.id + ": " + (r.failures.empty() ? "" : r.failures.front());
            return false;
        }
        if (r.ranks) {
            ++data;
            if (r.ranks->character_rank != Check::Pass || r.ranks->quotient_rank != Check::Pass) {
                why = r.id + ": rank identity " + r.ranks->detail;
                return false;
            }
        }
    }
    if (data < 14) {
        why = "only " + std::to_string(data) + " datum cases";
        return false;
    }
    return true;
}

bool criterion4(std::string& why) {
    auto c = named("sph5S_g2_sl3.json");
    auto w = well_of(c);
    auto b = bottom(w, c.parse_chi("3*w1"));
    std::set<Vec> got(b.begin(), b.end());
    std::set<Vec> want;
    for (long k = 0; k <= 3; ++k) want.insert(from_ints(std::vector<long>{3 - k, k}));
    if (got != want || b.size() != 4 || d_chi(w, c.parse_chi("3*w1")) != 4) {
        why = "bottom differs";
        return false;
    }
    return true;
}

bool criterion5(std::string& why) {
    auto c = named("sph5S_g2_sl3.json");
    auto w = well_of(c);
    for (auto chi : {"0", "w1", "w2", "3*w1"}) {
        auto rep = crosscheck(*c.branching, w, c.parse_chi(chi), 6);
        if (!rep.ok()) {
            why = std::string("χ = ") + chi + ": " + std::to_string(rep.mismatches.size()) + " mismatches, " +
                  std::to_string(rep.high_multiplicity.size()) + " multiplicities >= 2";
            return false;
        }
    }
    return true;
}

bool criterion6(std::string& why) {
    std::mt19937 rng(6);
    std::vector<RootSystem> sys;
    for (auto s : {"A2", "B2", "C2", "G2", "A3"}) sys.push_back(RootSystem::parse(s));
    std::uniform_int_distribution<long> coord(0, 3);
    for (int i = 0; i < 50; ++i) {
        const auto& r = sys[static_cast<std::size_t>(i) % sys.size()];
        IWeight lam(r.rank());
        for (auto& x : lam) x = coord(rng);
        if (Z(static_cast<long>(freudenthal(r, lam).total())) != weyl_dimension(r, from_ints(lam))) {
            why = r.spec() + " " + to_string(from_ints(lam));
            return false;
        }
    }
    return true;
}

bool parabolic_after_removal(const SphericalDatum& d, const ColorSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        ColorSet t = s;
        t.erase(t.begin() + static_cast<long>(i));
        if (classify_subset(d, t).parabolic) return true;
    }
    return false;
}

bool criterion7(std::string& why) {
    for (const auto& p : case_files(dir)) {
        auto c = load_case(p);
        if (!c.datum) continue;
        auto comp = compute_generators(c);
        for (std::size_t s = 0; s < c.datum->sigma.size(); ++s)
            if (!is_zero(sphroot_residual(comp.table, *c.datum, s))) {
                why = "(a) " + c.id;
                return false;
            }
        if (pairing_rank(*c.datum, comp.subset) != comp.subset.size()) {
            why = "(b) " + c.id;
            return false;
        }
        if (!generators_independent(comp.table)) {
            why = "(c) " + c.id;
            return false;
        }
        for (const auto& s : minimal_parabolic_subsets(*c.datum))
            if (!classify_subset(*c.datum, s).parabolic || parabolic_after_removal(*c.datum, s)) {
                why = "(e) " + c.id;
                return false;
            }
    }
    // (d): every well element splits as bottom + zero-well in exactly one way
    auto c = named("sph5S_g2_sl3.json");
    auto w = well_of(c);
    const auto& t = w.table;
    for (long k = 0; k <= 4; ++k)
        for (const auto& lab : c.space.labels) {
            Vec chi = Q(k) * c.parse_chi(lab);
            auto bot = bottom(w, chi);
            for (const auto& e : chi_well(w, chi, 8).lambdas) {
                long splits = 0;
                Vec found;
                for (const auto& b : bot)
                    if (membership(t, e.lambda - b, zeros(t.pdim))) {
                        ++splits;
                        found = b;
                    }
                auto d = decompose(w, chi, e.lambda);
                if (splits != 1 || d.b != found || d.b + d.s != e.lambda) {
                    why = "(d) " + to_string(e.lambda);
                    return false;
                }
            }
        }
    return true;
}

bool criterion8(std::string& why) {
    for (long n : {3, 4}) {
        auto d = *named("sec8_spin" + std::to_string(2 * n + 2) + "_n" + std::to_string(n) + ".json").datum;
        std::string dn = "D" + std::to_string(n), dn1 = "D" + std::to_string(n + 1);
        if (!classify_subset(d, {dn, dn1}).distinguished) {
            why = "{Dn, Dn+1} not distinguished, n=" + std::to_string(n);
            return false;
        }
        if (classify_subset(d, {"D1+", "D2", dn1}).parabolic) {
            why = "{D1+, D2, Dn+1} parabolic, n=" + std::to_string(n);
            return false;
        }
    }
    auto f = *named("sym8cS_f4.json").datum;
    auto v = classify_subset(f, {"D1", "D3", "D4+"});
    if (!v.parabolic || !v.witness || *v.witness != from_ints(std::vector<long>{1, 2, 3})) {
        why = "F4 witness";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Item {
        int n;
        const char* what;
        double limit;  // seconds
        std::function<bool(std::string&)> run;
    };
    std::vector<Item> items{
        {1, "G2/SL(3) generators", 1, criterion1},
        {2, "Spin(2n+2) closed forms, n = 3, 4", 1, criterion2},
        {3, "corpus regression with rank identities", 10, criterion3},
        {4, "bottom of the 3w1-well on G2", 0, criterion4},
        {5, "oracle equivalence on G2 > SL(3), bound 6", 120, criterion5},
        {6, "Freudenthal totals equal Weyl dimensions", 30, criterion6},
        {7, "property suite (a)-(e)", 0, criterion7},
        {8, "recorded subset verdicts", 0, criterion8},
    };
    int failed = 0;
    for (const auto& it : items) {
        std::string why;
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = it.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (ok && it.limit > 0 && secs > it.limit) {
            ok = false;
            why = "took longer than " + std::to_string(static_cast<int>(it.limit)) + " s";
        }
        std::cout << "criterion " << it.n << ": " << (ok ? "PASS" : "FAIL") << "  " << it.what << "  (" << std::fixed
                  << std::setprecision(3) << secs << " s)";
        if (!ok) std::cout << "  " << why;
        std::cout << "\n";
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
