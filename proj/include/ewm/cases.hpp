#pragma once

#include "ewm/generators.hpp"
#include "ewm/oracle.hpp"
#include "ewm/sphdata.hpp"
#include "ewm/well.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ewm {

inline constexpr int kSchemaVersion = 1;

// message starts with the offending field path, e.g. "colors[2].pairing[1]: ..."
class CaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WellSpec {
    ColorSet h_trivial;
    std::optional<std::pair<std::string, std::string>> h_pair;
    ColorSet h_extra;
    int center_dim = 0;
};

struct WellFixture {
    Vec chi;
    std::string chi_text;
    std::optional<std::vector<Vec>> bottom;
    std::optional<long> d_chi;
};

struct SubsetExpectation {
    ColorSet subset;
    std::optional<bool> distinguished;
    std::optional<bool> parabolic;
    std::optional<Vec> witness;
};

struct OracleCheck {
    Vec chi;
    std::string chi_text;
    long bound = 0;
};

struct CaseFile {
    std::string path;
    std::string id;
    std::string citation;
    std::string kind;  // "datum" or "monoid"
    RootSystem ambient;
    std::optional<SphericalDatum> datum;
    std::optional<ColorSet> delta_prime;  // nullopt means "auto"
    PCharSpace space;
    std::vector<std::optional<Vec>> restriction;
    std::map<std::string, std::size_t> boundary_root_of;  // declared, may be empty
    long rk_xp = 0;
    std::vector<Generator> expected;  // datum: expected table; monoid: the generators
    std::optional<WellSpec> well;
    std::vector<WellFixture> well_fixtures;
    std::optional<bool> free_monoid;
    std::vector<SubsetExpectation> subset_verdicts;
    std::optional<std::vector<ColorSet>> minimal_subsets;
    std::optional<BranchingSetup> branching;
    std::vector<std::string> branching_labels;
    std::vector<OracleCheck> oracle_checks;

    Vec parse_chi(const std::string& expr) const;
    GeneratorTable expected_table() const;
};

CaseFile load_case(const std::string& path);
CaseFile parse_case(const std::string& text, const std::string& origin = "<string>");
std::vector<std::string> case_files(const std::string& dir);  // sorted *.json

struct RegressionReport {
    std::string id;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    ColorSet subset;
    std::optional<GeneratorTable> table;
    std::optional<RankReport> ranks;

    void fail(const std::string& m) {
        pass = false;
        failures.push_back(m);
    }
};

struct RegressionOptions {
    bool oracle = true;
};

// the computed table for a datum case, or the declared one for a monoid case
struct Computed {
    ColorSet subset;
    GeneratorTable table;
};
Computed compute_generators(const CaseFile& c);
WellCase well_case_of(const CaseFile& c, const GeneratorTable& t);

bool same_generator_set(const GeneratorTable& a, const std::vector<Generator>& b);

RegressionReport run_regression(const CaseFile& c, const RegressionOptions& opt = {});

struct CorpusEntry {
    std::string path;
    std::optional<RegressionReport> report;
    std::string error;  // load failure, report absent
    bool pass() const { return report && report->pass; }
};

// every *.json in dir, run concurrently; ordered by id, load failures last by path
std::vector<CorpusEntry> run_corpus(const std::string& dir, const RegressionOptions& opt = {});

}  // namespace ewm
