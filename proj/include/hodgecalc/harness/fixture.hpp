#pragma once

#include "hodgecalc/sl2hodge.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hodgecalc::harness {

/// A fixture that cannot be run as written: unknown names, wrong kinds,
/// malformed arguments. Distinct from a check that fails.
class FixtureInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Verdict { pass, fail, alarm };

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

struct OperatorRecord {
    Matrix matrix;
    int twist = 0;
};

struct SubspaceRecord {
    Subspace space;
};

/// Sl2 data as written; X is optional and completed from the grading and Y
/// when absent, H is always the grading operator. Resolution is deferred to
/// check time so a bad triple is a failing check, not a parse error.
struct Sl2Record {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    int central_weight = 0;
    Grading grading;
    Matrix y;
    std::optional<Matrix> x;

    Sl2HodgeData resolve() const;
};

struct BiSl2Record {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    int central_weight = 0;
    Bigrading bigrading;
    Matrix x1, y1, x2, y2;

    BiSl2HodgeData resolve() const;
};

struct ConeRecord {
    ConeData data;
    std::uint64_t seed = 0;
    std::size_t sample_budget = 5;
};

/// Input of twist_by_grading: H = ⊕ H_j with H_j pure of weight j.
struct GradedRecord {
    std::size_t dim = 0;
    DecreasingFiltration fprime;
    DecreasingFiltration fsecond;
    Grading grading;
    Matrix raising;
};

using Structure = std::variant<OperatorRecord, SubspaceRecord, IncreasingFiltration, PureHodge, MixedHodge,
                               SesquilinearForm, RealStructureWitness, Sl2Record, BiSl2Record, HodgeLefschetzData,
                               ConeRecord, GradedRecord>;

struct Check {
    std::string op;
    nlohmann::json args = nlohmann::json::array();
    Verdict expect = Verdict::pass;
};

struct Fixture {
    int format_version = 1;
    std::map<std::string, Structure> structures;
    std::vector<Check> checks;
};

/// Throws ParseError with "origin:line:col" for syntax errors and
/// "origin: at <json pointer>" for malformed records.
Fixture parse_fixture(std::string_view text, const std::string& origin = "<input>");
/// Canonical text: sorted keys, two-space indent, trailing newline, scalars
/// in the exact grammar, filtrations by their jumps only.
std::string serialize_fixture(const Fixture& f);

nlohmann::json to_json(const Structure& s);
Structure structure_from_json(const nlohmann::json& j, const std::string& where);

struct CheckOutcome {
    std::size_t index = 0;
    std::string op;
    std::string label; // op(args)
    Verdict expected = Verdict::pass;
    std::optional<Verdict> actual; // empty on input error
    Report report;
    std::string message; // exception text for alarms, failures by exception and input errors
    double seconds = 0;

    bool matched() const { return actual && *actual == expected; }
};

struct FixtureRun {
    std::string origin;
    std::vector<CheckOutcome> checks;
    bool input_error = false;
    std::string error; // parse error, if any
    double seconds = 0;

    bool all_matched() const;
};

/// Runs every check in order. Input errors inside a check are recorded on
/// that check and flag the run.
FixtureRun run_fixture(const Fixture& f, const std::string& origin);
/// Parses first; a parse error yields a run with input_error set.
FixtureRun run_fixture_text(std::string_view text, const std::string& origin);

/// 0 if every run matched, 2 if any had an input error, 1 otherwise.
int exit_code(const std::vector<FixtureRun>& runs);

nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const FixtureRun& run);
/// One line per check; reports of mismatched checks (all checks if verbose).
void print_run(std::ostream& os, const FixtureRun& run, bool verbose = false);

/// Fixtures compiled into the library, by file name.
const std::vector<std::pair<std::string, std::string_view>>& bundled_fixtures();
/// nullopt if there is no bundled fixture of that name (with or without the
/// ".fixture" suffix).
std::optional<std::string_view> bundled_fixture(std::string_view name);

} // namespace hodgecalc::harness
