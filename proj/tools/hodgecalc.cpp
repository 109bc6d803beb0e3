// hodgecalc: batch front end for fixtures, weight filtrations, cone
// reduction and the sign sweeps.

#include "hodgecalc/errors.hpp"
#include "hodgecalc/harness/fixture.hpp"
#include "hodgecalc/harness/oracle.hpp"
#include "hodgecalc/signcalc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

using namespace hodgecalc;
using namespace hodgecalc::harness;
using nlohmann::json;

namespace {

constexpr int kInputError = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FixtureInputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path)
{
    std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

int report_runs(const std::vector<FixtureRun>& runs, bool as_json, bool verbose)
{
    if (as_json) {
        json out = json::array();
        for (const auto& r : runs)
            out.push_back(to_json(r));
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& r : runs)
            print_run(std::cout, r, verbose);
    }
    return exit_code(runs);
}

int cmd_verify(const std::vector<std::string>& files, bool as_json, bool verbose)
{
    std::vector<std::future<FixtureRun>> jobs;
    for (const auto& path : files)
        jobs.push_back(std::async(std::launch::async, [path] {
            std::string text;
            try {
                text = read_file(path);
            } catch (const std::exception& e) {
                FixtureRun run;
                run.origin = path;
                run.input_error = true;
                run.error = e.what();
                return run;
            }
            return run_fixture_text(text, path);
        }));
    std::vector<FixtureRun> runs;
    for (auto& j : jobs)
        runs.push_back(j.get());
    return report_runs(runs, as_json, verbose);
}

int cmd_demo(const std::string& name, bool list, bool as_json, bool verbose)
{
    if (list || name.empty()) {
        for (const auto& [file, text] : bundled_fixtures())
            std::cout << file << '\n';
        return 0;
    }
    std::vector<FixtureRun> runs;
    if (name == "all") {
        for (const auto& [file, text] : bundled_fixtures())
            runs.push_back(run_fixture_text(text, file));
    } else {
        auto text = bundled_fixture(name);
        if (!text) {
            std::cerr << "no bundled fixture named " << name << '\n';
            return kInputError;
        }
        runs.push_back(run_fixture_text(*text, name));
    }
    return report_runs(runs, as_json, verbose);
}

int cmd_canon(const std::string& path, bool in_place)
{
    std::string text = read_file(path);
    std::string canon = serialize_fixture(parse_fixture(text, path));
    if (in_place) {
        std::ofstream out(path, std::ios::binary);
        out << canon;
    } else {
        std::cout << canon;
    }
    return 0;
}

Matrix matrix_from_file(const std::string& path)
{
    json doc = read_json(path);
    if (doc.is_object()) {
        json rec = doc;
        if (!rec.contains("kind"))
            rec["kind"] = "operator";
        auto s = structure_from_json(rec, path);
        if (auto* op = std::get_if<OperatorRecord>(&s))
            return op->matrix;
        throw FixtureInputError(path + " does not hold an operator");
    }
    auto s = structure_from_json(json{{"kind", "operator"}, {"matrix", doc}}, path);
    return std::get<OperatorRecord>(s).matrix;
}

int cmd_weightfil(const std::string& path, int center, bool as_json)
{
    Matrix n = matrix_from_file(path);
    IncreasingFiltration w = weight_filtration(n, center);
    Report check = check_weight_filtration(n, w, center);
    std::optional<bool> oracle;
    if (n.rows() <= 6)
        oracle = oracle_weight_filtration(n, center) == w;
    if (as_json) {
        json out = {{"center", center},
                    {"weightfil", to_json(Structure{w})},
                    {"check", to_json(check)},
                    {"oracle_agrees", oracle ? json(*oracle) : json(nullptr)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "W(N) centered at " << center << " on dimension " << n.rows() << '\n';
        for (const auto& [k, s] : w.jumps())
            std::cout << "  W_" << k << " (dim " << s.dim() << "): " << to_string(s.basis()) << '\n';
        check.print(std::cout, 1);
        if (oracle)
            std::cout << "  oracle " << (*oracle ? "agrees" : "DISAGREES") << '\n';
    }
    return check.passed && oracle.value_or(true) ? 0 : 1;
}

ConeRecord cone_from_file(const std::string& path, const std::string& name)
{
    json doc = read_json(path);
    if (doc.contains("structures")) {
        Fixture f = parse_fixture(doc.dump(), path);
        for (const auto& [key, s] : f.structures)
            if (auto* c = std::get_if<ConeRecord>(&s); c && (name.empty() || key == name))
                return *c;
        throw FixtureInputError(path + ": no cone structure" + (name.empty() ? "" : " named " + name));
    }
    if (!doc.contains("kind"))
        doc["kind"] = "cone";
    auto s = structure_from_json(doc, path);
    if (auto* c = std::get_if<ConeRecord>(&s))
        return *c;
    throw FixtureInputError(path + " does not hold a cone");
}

int cmd_reduce(const std::string& path, const std::string& name, int h, std::optional<std::uint64_t> seed,
               std::optional<std::size_t> samples, bool as_json)
{
    ConeRecord c = cone_from_file(path, name);
    if (seed)
        c.seed = *seed;
    if (samples)
        c.sample_budget = *samples;
    ReducedCone r = reduce_cone(c.data, h, c.sample_budget, c.seed);
    ConeRecord out{r.structure, c.seed, c.sample_budget};
    if (as_json) {
        std::cout << json{{"h", h}, {"reduced", to_json(Structure{out})}, {"report", to_json(r.report)}}.dump(2)
                  << '\n';
    } else {
        std::cout << "reduction at relative grade " << h << ": dimension " << r.structure.dim << ", "
                  << r.structure.generators.size() << " remaining generators\n";
        r.report.print(std::cout, 1);
        std::cout << to_json(Structure{out}).dump(2) << '\n';
    }
    return r.report.passed ? 0 : 1;
}

int cmd_signs(int box, bool as_json)
{
    Report cocycle = check_epsilon_cocycle(box);
    Report pushforward = check_pushforward_model(box);
    Report godement = check_godement(box);
    auto rows = godement_table(box);
    if (as_json) {
        json eps = json::array();
        for (int k = -box; k <= box; ++k)
            eps.push_back({{"k", k}, {"epsilon", epsilon(k)}});
        json table = json::array();
        for (const auto& r : rows)
            table.push_back({{"i", r.degrees[0]}, {"j", r.degrees[1]}, {"k", r.degrees[2]}, {"l", r.degrees[3]},
                             {"defect", r.defect}});
        std::cout << json{{"box", box},
                          {"epsilon", eps},
                          {"godement", table},
                          {"reports", {to_json(cocycle), to_json(pushforward), to_json(godement)}}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "k      ";
        for (int k = -box; k <= box; ++k)
            std::cout << (k < 0 ? "" : " ") << k << ' ';
        std::cout << "\neps(k) ";
        for (int k = -box; k <= box; ++k)
            std::cout << (epsilon(k) < 0 ? "-1 " : "+1 ");
        std::cout << "\n\n i j k l defect\n";
        for (const auto& r : rows)
            std::cout << ' ' << r.degrees[0] << ' ' << r.degrees[1] << ' ' << r.degrees[2] << ' ' << r.degrees[3]
                      << (r.defect < 0 ? "  -1" : "  +1") << '\n';
        std::cout << '\n';
        cocycle.print(std::cout);
        pushforward.print(std::cout);
        godement.print(std::cout);
    }
    return cocycle.passed && pushforward.passed && godement.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for Hodge structures, sl2 data and weight filtrations over Q(i)"};
    app.require_subcommand(1);
    bool as_json = false;
    bool verbose = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("-v,--verbose", verbose, "print every report, not only mismatches");

    std::vector<std::string> files;
    auto* verify = app.add_subcommand("verify", "run fixture files");
    verify->add_option("files", files, "fixture files")->required();

    std::string matrix_file;
    int center = 0;
    auto* weightfil = app.add_subcommand("weightfil", "monodromy weight filtration of a nilpotent matrix");
    weightfil->add_option("matrix-file", matrix_file, "JSON matrix or operator record")->required();
    weightfil->add_option("--center", center, "central index")->required();

    std::string cone_file;
    std::string cone_name;
    int h = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    auto* reduce = app.add_subcommand("reduce", "reduce a polarized cone at relative grade h");
    reduce->set_help_flag("--help", "print this help message and exit");
    reduce->add_option("cone-file", cone_file, "cone record or fixture file")->required();
    reduce->add_option("--h", h, "grade relative to the central weight")->required();
    reduce->add_option("--seed", seed, "sampling seed (default: from the file)");
    reduce->add_option("--samples", samples, "random cone samples (default: from the file)");
    reduce->add_option("--name", cone_name, "cone to use when the file is a fixture");

    int box = 3;
    auto* signs = app.add_subcommand("signs", "epsilon and Godement sign sweeps");
    signs->add_option("--box", box, "degree bound")->required()->check(CLI::NonNegativeNumber);

    std::string demo_name;
    bool list = false;
    auto* demo = app.add_subcommand("demo", "run a bundled fixture ('all' runs every one)");
    demo->add_option("name", demo_name, "fixture name");
    demo->add_flag("--list", list, "list bundled fixtures");

    std::string canon_file;
    bool in_place = false;
    auto* canon = app.add_subcommand("canon", "rewrite a fixture in canonical form");
    canon->add_option("file", canon_file, "fixture file")->required();
    canon->add_flag("-i,--in-place", in_place, "overwrite the file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*verify)
            return cmd_verify(files, as_json, verbose);
        if (*weightfil)
            return cmd_weightfil(matrix_file, center, as_json);
        if (*reduce)
            return cmd_reduce(cone_file, cone_name, h, seed, samples, as_json);
        if (*signs)
            return cmd_signs(box, as_json);
        if (*demo)
            return cmd_demo(demo_name, list, as_json, verbose);
        if (*canon)
            return cmd_canon(canon_file, in_place);
    } catch (const InvalidStructure& e) {
        std::cerr << "invalid structure: " << e.what() << '\n';
        return 1;
    } catch (const CounterexampleAlarm& e) {
        std::cerr << "counterexample alarm: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
