#include "ewm/cases.hpp"
#include "ewm/morph.hpp"
#include "ewm/oracle.hpp"
#include "ewm/well.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ewm;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

std::string case_dir() {
    const char* env = std::getenv("EWMTOOL_CASE_DIR");
    return env && *env ? env : "cases";
}

// a bare name falls back to the corpus directory
std::string resolve(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    fs::path alt = fs::path(case_dir()) / path;
    if (fs::exists(alt)) return alt.string();
    return path;
}

std::vector<std::string> weight_names(const RootSystem& r) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(r.weight_name(i));
    return out;
}

std::vector<std::string> root_names(const RootSystem& r) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(r.root_name(i));
    return out;
}

json rational_json(const Q& q) {
    if (is_integer(q)) return q.get_num().get_si();
    return to_string(q);
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

void print_table(std::ostream& os, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(head.size());
    auto width = [](const std::string& s) {
        std::size_t n = 0;
        for (unsigned char ch : s)
            if ((ch & 0xC0) != 0x80) ++n;
        return n;
    };
    for (std::size_t k = 0; k < head.size(); ++k) w[k] = width(head[k]);
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], width(r[k]));
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            os << r[k];
            if (k + 1 < r.size()) os << std::string(w[k] - width(r[k]) + 2, ' ');
        }
        os << "\n";
    };
    line(head);
    for (const auto& r : rows) line(r);
}

std::string join(const ColorSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i];
    return out + "}";
}

std::string coeff_text(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out + ")";
}

WellCase require_well(const CaseFile& c, const GeneratorTable& t) {
    if (!c.well) throw CaseError(c.path + ": well_case: missing field");
    return well_case_of(c, t);
}

int cmd_generators(const std::string& path, const std::string& format) {
    auto c = load_case(resolve(path));
    auto comp = compute_generators(c);
    const auto& t = comp.table;
    auto wn = weight_names(c.ambient);
    if (format == "json") {
        json j;
        j["id"] = c.id;
        j["root_system"] = c.ambient.spec();
        j["p_char_basis"] = c.space.labels;
        j["delta_prime"] = comp.subset;
        j["generators"] = json::array();
        for (const auto& g : t.entries)
            j["generators"].push_back({{"id", g.id}, {"omega", vec_json(g.omega)},
                                       {"chi", format_label_expr(g.chi, c.space.labels)}});
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << c.id << "  " << c.ambient.spec();
    if (c.datum) std::cout << "  Δ' = " << join(comp.subset);
    std::cout << "\n\n";
    std::vector<std::string> head{"D"};
    if (c.datum)
        for (const auto& s : c.datum->sigma) head.push_back(format_label_expr(s, root_names(c.ambient)));
    head.push_back("ω_D");
    head.push_back("χ_D");
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : t.entries) {
        std::vector<std::string> r{g.id};
        if (c.datum)
            for (const auto& x : c.datum->color(g.id).pairing) r.push_back(to_string(x));
        r.push_back(format_label_expr(g.omega, wn));
        r.push_back(format_label_expr(g.chi, c.space.labels));
        rows.push_back(r);
    }
    print_table(std::cout, head, rows);
    return kOk;
}

int cmd_subsets(const std::string& path, const std::string& kind, bool minimal, const std::vector<std::string>& subset,
                bool subset_given) {
    auto c = load_case(resolve(path));
    if (!c.datum) throw CaseError(c.path + ": subsets need a datum case");
    const auto& d = *c.datum;
    const bool para = kind == "parabolic";
    if (subset_given) {
        auto v = classify_subset(d, subset);
        bool verdict = para ? v.parabolic : v.distinguished;
        std::cout << join(v.subset) << " " << kind << ": " << (verdict ? "true" : "false");
        if (verdict && v.witness && (para || !v.parabolic)) std::cout << "  witness " << coeff_text(*v.witness);
        std::cout << "\n";
        return kOk;
    }
    std::vector<ColorSet> list;
    if (minimal) {
        if (!para) throw std::invalid_argument("--minimal applies to --kind parabolic");
        list = minimal_parabolic_subsets(d);
    } else {
        list = all_subsets(d, para ? SubsetKind::Parabolic : SubsetKind::Distinguished);
    }
    for (const auto& s : list) std::cout << join(s) << "\n";
    std::cout << list.size() << " " << (minimal ? "minimal " : "") << kind << " subset" << (list.size() == 1 ? "" : "s")
              << "\n";
    return kOk;
}

int cmd_well(const std::string& path, const std::string& chi_text, long bound, bool only_bottom) {
    auto c = load_case(resolve(path));
    auto comp = compute_generators(c);
    auto w = require_well(c, comp.table);
    Vec chi = c.parse_chi(chi_text);
    auto wn = weight_names(c.ambient);
    const bool classified = w.h_extra.empty();
    if (only_bottom) {
        auto b = bottom(w, chi);
        for (const auto& l : b) std::cout << format_label_expr(l, wn) << "\n";
        std::cout << "d_χ = " << b.size() << "\n";
        return kOk;
    }
    auto r = chi_well(w, chi, bound);
    std::vector<std::vector<std::string>> rows;
    std::vector<Vec> bot;
    if (classified) bot = bottom(w, chi);
    for (const auto& e : r.lambdas) {
        std::string coeffs;
        for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
            if (e.coeffs[i] == 0) continue;
            if (!coeffs.empty()) coeffs += " + ";
            coeffs += (e.coeffs[i] == 1 ? "" : std::to_string(e.coeffs[i])) + w.table.entries[i].id;
        }
        std::string mark;
        if (classified) mark = std::find(bot.begin(), bot.end(), e.lambda) != bot.end() ? "bottom" : "";
        rows.push_back({format_label_expr(e.lambda, wn), coeffs.empty() ? "0" : coeffs, mark});
    }
    print_table(std::cout, {"λ", "coefficients", ""}, rows);
    std::cout << r.lambdas.size() << " weight" << (r.lambdas.size() == 1 ? "" : "s") << " with coefficient sum <= "
              << bound << "\n";
    if (classified) std::cout << "d_χ = " << bot.size() << "\n";
    return kOk;
}

int cmd_verify(const std::string& path, const std::string& chi_text, long bound) {
    auto c = load_case(resolve(path));
    if (!c.branching) throw CaseError(c.path + ": branching_setup: missing field");
    auto comp = compute_generators(c);
    auto w = require_well(c, comp.table);
    auto rep = crosscheck(*c.branching, w, c.parse_chi(chi_text), bound);
    if (rep.skipped) {
        std::cout << "skipped: neither χ nor its dual extends to P\n";
        return kInputError;
    }
    auto wn = weight_names(c.ambient);
    for (const auto& m : rep.mismatches)
        std::cout << "mismatch at " << format_label_expr(from_ints(m.lambda), wn) << ": well says "
                  << (m.predicted ? "member" : "absent") << ", multiplicity " << m.multiplicity << "\n";
    for (const auto& m : rep.high_multiplicity)
        std::cout << "multiplicity " << m.multiplicity << " at " << format_label_expr(from_ints(m.lambda), wn) << "\n";
    std::cout << rep.checked << " weights checked" << (rep.dual ? " (dual pair)" : "") << ", "
              << rep.mismatches.size() << " mismatches\n";
    return rep.ok() ? kOk : kMismatch;
}

int cmd_regress(const std::string& dir, bool oracle) {
    auto all = run_corpus(dir, {oracle});
    if (all.empty()) {
        std::cerr << "no case files in " << dir << "\n";
        return kInputError;
    }
    long passed = 0, broken = 0;
    for (const auto& e : all) {
        if (!e.report) {
            ++broken;
            std::cout << "ERROR " << e.error << "\n";
            continue;
        }
        const auto& r = *e.report;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.id << "\n";
        for (const auto& f : r.failures) std::cout << "      " << f << "\n";
        if (r.pass) ++passed;
    }
    std::cout << passed << "/" << all.size() << " cases passed\n";
    if (broken) return kInputError;
    return passed == static_cast<long>(all.size()) ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ewmtool: weight monoids and wells of spherical data"};
    app.require_subcommand(1);

    std::string path, format = "text", kind = "parabolic", chi = "0", dir;
    long bound = 6;
    bool minimal = false, only_bottom = false, no_oracle = false;
    std::vector<std::string> subset;

    auto* gen = app.add_subcommand("generators", "generator table of a case");
    gen->add_option("case", path, "case file")->required();
    gen->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* sub = app.add_subcommand("subsets", "distinguished and parabolic subsets of colors");
    sub->add_option("case", path, "case file")->required();
    sub->add_option("--kind", kind, "distinguished or parabolic")->check(CLI::IsMember({"distinguished", "parabolic"}));
    sub->add_flag("--minimal", minimal, "only minimal parabolic subsets");
    auto* subset_opt = sub->add_option("--subset", subset, "classify one subset (comma separated ids)")->delimiter(',');

    auto* well = app.add_subcommand("well", "list a χ-well");
    well->add_option("case", path, "case file")->required();
    well->add_option("--chi", chi, "character, e.g. 3*w1")->required();
    well->add_option("--bound", bound, "largest coefficient sum")->check(CLI::NonNegativeNumber);
    well->add_flag("--bottom", only_bottom, "print the bottom only");

    auto* ver = app.add_subcommand("verify", "compare the well with branching multiplicities");
    ver->add_option("case", path, "case file")->required();
    ver->add_option("--chi", chi, "character")->required();
    ver->add_option("--bound", bound, "largest coordinate sum of λ")->check(CLI::NonNegativeNumber);

    auto* reg = app.add_subcommand("regress", "run every case in a directory");
    reg->add_option("dir", dir, "case directory (default $EWMTOOL_CASE_DIR or ./cases)");
    reg->add_flag("--no-oracle", no_oracle, "skip the branching crosschecks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*gen) return cmd_generators(path, format);
        if (*sub) return cmd_subsets(path, kind, minimal, subset, subset_opt->count() > 0);
        if (*well) return cmd_well(path, chi, bound, only_bottom);
        if (*ver) return cmd_verify(path, chi, bound);
        if (*reg) return cmd_regress(dir.empty() ? case_dir() : dir, !no_oracle);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
