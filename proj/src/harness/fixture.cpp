#include "hodgecalc/harness/fixture.hpp"

#include "hodgecalc/errors.hpp"

#include <charconv>
#include <cstdio>
#include <set>
#include <tuple>

namespace hodgecalc::harness {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what)
{
    throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

void expect_keys(const json& j, const std::string& where, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {})
{
    if (!j.is_object())
        bad(where, "expected an object");
    std::set<std::string> allowed;
    for (const char* k : required) {
        allowed.insert(k);
        if (!j.contains(k))
            bad(where, std::string("missing key \"") + k + "\"");
    }
    for (const char* k : optional)
        allowed.insert(k);
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            bad(where, "unknown key \"" + item.key() + "\"");
}

long integer(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        bad(where, "expected an integer");
    return j.get<long>();
}

std::size_t count(const json& j, const std::string& where)
{
    long v = integer(j, where);
    if (v < 0)
        bad(where, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

int index_key(const std::string& key, const std::string& where)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size() || key.empty())
        bad(where, "index \"" + key + "\" is not a decimal integer");
    return v;
}

Scalar scalar(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    if (!j.is_string())
        bad(where, "expected a scalar string");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        bad(where, e.what());
    }
}

json to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Rows of a matrix; cols is required when known (and for empty matrices).
Matrix matrix(const json& j, const std::string& where, std::optional<std::size_t> rows,
              std::optional<std::size_t> cols)
{
    if (!j.is_array())
        bad(where, "expected a matrix (array of rows)");
    if (rows && j.size() != *rows)
        bad(where, "expected " + std::to_string(*rows) + " rows, found " + std::to_string(j.size()));
    std::size_t width = cols ? *cols : (j.empty() ? 0 : j[0].size());
    Matrix m(j.size(), width);
    for (std::size_t r = 0; r < j.size(); ++r) {
        std::string rw = where + "/" + std::to_string(r);
        if (!j[r].is_array())
            bad(rw, "expected a row (array of scalars)");
        if (j[r].size() != width)
            bad(rw, "row has " + std::to_string(j[r].size()) + " entries, expected " + std::to_string(width));
        for (std::size_t c = 0; c < width; ++c)
            m(r, c) = scalar(j[r][c], rw + "/" + std::to_string(c));
    }
    return m;
}

Matrix square(const json& j, const std::string& where, std::size_t n) { return matrix(j, where, n, n); }

Subspace subspace(const json& j, const std::string& where, std::size_t dim)
{
    return Subspace(dim, matrix(j, where, std::nullopt, dim));
}

std::map<int, Subspace> steps(const json& j, const std::string& where, std::size_t dim)
{
    if (!j.is_object())
        bad(where, "expected an object from index to basis rows");
    std::map<int, Subspace> out;
    for (const auto& item : j.items()) {
        std::string w = where + "/" + item.key();
        out.emplace(index_key(item.key(), w), subspace(item.value(), w, dim));
    }
    return out;
}

template <class F>
F filtration(const json& j, const std::string& where, std::size_t dim)
{
    auto s = steps(j, where, dim);
    try {
        return F(dim, s);
    } catch (const InvalidStructure& e) {
        bad(where, e.what());
    }
}

json steps_json(const std::map<int, Subspace>& s)
{
    json out = json::object();
    for (const auto& [k, sub] : s)
        out[std::to_string(k)] = to_json(sub.basis());
    return out;
}

json filtration_json(const DecreasingFiltration& f) { return steps_json(f.jumps()); }
json filtration_json(const IncreasingFiltration& f) { return steps_json(f.jumps()); }

std::string kind_of(const Structure& s)
{
    static const char* names[] = {"operator", "subspace", "increasing_filtration", "pure", "mixed", "pairing",
                                  "real_structure", "sl2", "bisl2", "hodge_lefschetz", "cone", "graded"};
    return names[s.index()];
}

std::pair<int, int> line_col(std::string_view text, std::size_t byte)
{
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::alarm:
        return "alarm";
    }
    return "?";
}

std::optional<Verdict> parse_verdict(std::string_view s)
{
    if (s == "pass")
        return Verdict::pass;
    if (s == "fail")
        return Verdict::fail;
    if (s == "alarm")
        return Verdict::alarm;
    return std::nullopt;
}

Sl2HodgeData Sl2Record::resolve() const
{
    Sl2HodgeData d{dim, fprime, fsecond, central_weight, grading, {}};
    validate_grading(grading, dim);
    if (x)
        d.triple = Sl2Triple{*x, grading_operator(grading, dim), y};
    else
        d.triple = complete_sl2(grading, y);
    return d;
}

BiSl2HodgeData BiSl2Record::resolve() const
{
    Grading g1;
    Grading g2;
    for (const auto& [key, piece] : bigrading) {
        for (auto [g, k] : {std::pair{&g1, key.first}, std::pair{&g2, key.second}}) {
            auto it = g->find(k);
            if (it == g->end())
                g->emplace(k, piece);
            else
                it->second = sum(it->second, piece);
        }
    }
    validate_grading(g1, dim);
    validate_grading(g2, dim);
    return BiSl2HodgeData{dim,
                          fprime,
                          fsecond,
                          central_weight,
                          bigrading,
                          Sl2Triple{x1, grading_operator(g1, dim), y1},
                          Sl2Triple{x2, grading_operator(g2, dim), y2}};
}

json to_json(const Structure& s)
{
    json j = json::object();
    j["kind"] = kind_of(s);
    std::visit(
        [&j](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, OperatorRecord>) {
                j["matrix"] = to_json(v.matrix);
                j["twist"] = v.twist;
            } else if constexpr (std::is_same_v<T, SubspaceRecord>) {
                j["dim"] = v.space.ambient_dim();
                j["basis"] = to_json(v.space.basis());
            } else if constexpr (std::is_same_v<T, IncreasingFiltration>) {
                j["dim"] = v.ambient_dim();
                j["steps"] = filtration_json(v);
            } else if constexpr (std::is_same_v<T, PureHodge>) {
                j["dim"] = v.dim;
                j["fprime"] = filtration_json(v.fprime);
                j["fsecond"] = filtration_json(v.fsecond);
                j["weight"] = v.weight;
            } else if constexpr (std::is_same_v<T, MixedHodge>) {
                j["dim"] = v.dim;
                j["fprime"] = filtration_json(v.fprime);
                j["fsecond"] = filtration_json(v.fsecond);
                j["weightfil"] = filtration_json(v.weightfil);
            } else if constexpr (std::is_same_v<T, SesquilinearForm>) {
                j["gram"] = to_json(v.gram);
                j["target_twist"] = v.target_twist;
            } else if constexpr (std::is_same_v<T, RealStructureWitness>) {
                j["j"] = to_json(v.j);
            } else if constexpr (std::is_same_v<T, Sl2Record>) {
                j["dim"] = v.dim;
                j["fprime"] = filtration_json(v.fprime);
                j["fsecond"] = filtration_json(v.fsecond);
                j["central_weight"] = v.central_weight;
                j["grading"] = steps_json(v.grading);
                j["y"] = to_json(v.y);
                if (v.x)
                    j["x"] = to_json(*v.x);
            } else if constexpr (std::is_same_v<T, BiSl2Record>) {
                j["dim"] = v.dim;
                j["fprime"] = filtration_json(v.fprime);
                j["fsecond"] = filtration_json(v.fsecond);
                j["central_weight"] = v.central_weight;
                json pieces = json::array();
                for (const auto& [key, piece] : v.bigrading)
                    pieces.push_back({{"i", key.first}, {"j", key.second}, {"basis", to_json(piece.basis())}});
                j["bigrading"] = pieces;
                j["first"] = {{"x", to_json(v.x1)}, {"y", to_json(v.y1)}};
                j["second"] = {{"x", to_json(v.x2)}, {"y", to_json(v.y2)}};
            } else if constexpr (std::is_same_v<T, HodgeLefschetzData>) {
                j["dim"] = v.dim;
                j["fprime"] = filtration_json(v.fprime);
                j["fsecond"] = filtration_json(v.fsecond);
                j["central_weight"] = v.central_weight;
                j["n"] = to_json(v.n);
            } else if constexpr (std::is_same_v<T, ConeRecord>) {
                j["space"] = v.data.dim;
                j["fprime"] = filtration_json(v.data.fprime);
                j["fsecond"] = filtration_json(v.data.fsecond);
                j["weightfil"] = filtration_json(v.data.weightfil);
                j["pairing"] = {{"gram", to_json(v.data.pairing.gram)},
                                {"target_twist", v.data.pairing.target_twist}};
                json gens = json::array();
                for (const auto& g : v.data.generators)
                    gens.push_back(to_json(g));
                j["generators"] = gens;
                j["seed"] = v.seed;
                j["sample_budget"] = v.sample_budget;
            } else if constexpr (std::is_same_v<T, GradedRecord>) {
                j["dim"] = v.dim;
                j["fprime"] = filtration_json(v.fprime);
                j["fsecond"] = filtration_json(v.fsecond);
                j["grading"] = steps_json(v.grading);
                j["raising"] = to_json(v.raising);
            }
        },
        s);
    return j;
}

Structure structure_from_json(const json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        bad(where, "expected an object with a string \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    auto at = [&where](const char* key) { return where + "/" + key; };
    auto dim_of = [&](const char* key = "dim") {
        return count(j[key], at(key));
    };
    auto dec = [&](const char* key, std::size_t n) { return filtration<DecreasingFiltration>(j[key], at(key), n); };
    auto inc = [&](const char* key, std::size_t n) { return filtration<IncreasingFiltration>(j[key], at(key), n); };
    auto grading = [&](const char* key, std::size_t n) { return steps(j[key], at(key), n); };

    if (kind == "operator") {
        expect_keys(j, where, {"kind", "matrix"}, {"twist"});
        OperatorRecord r;
        r.matrix = matrix(j["matrix"], at("matrix"), std::nullopt, std::nullopt);
        if (j.contains("twist"))
            r.twist = static_cast<int>(integer(j["twist"], at("twist")));
        return r;
    }
    if (kind == "subspace") {
        expect_keys(j, where, {"kind", "dim", "basis"});
        return SubspaceRecord{subspace(j["basis"], at("basis"), dim_of())};
    }
    if (kind == "increasing_filtration") {
        expect_keys(j, where, {"kind", "dim", "steps"});
        return inc("steps", dim_of());
    }
    if (kind == "pure") {
        expect_keys(j, where, {"kind", "dim", "fprime", "fsecond", "weight"});
        std::size_t n = dim_of();
        return PureHodge{n, dec("fprime", n), dec("fsecond", n), static_cast<int>(integer(j["weight"], at("weight")))};
    }
    if (kind == "mixed") {
        expect_keys(j, where, {"kind", "dim", "fprime", "fsecond", "weightfil"});
        std::size_t n = dim_of();
        return MixedHodge{n, dec("fprime", n), dec("fsecond", n), inc("weightfil", n)};
    }
    if (kind == "pairing") {
        expect_keys(j, where, {"kind", "gram", "target_twist"});
        Matrix g = matrix(j["gram"], at("gram"), std::nullopt, std::nullopt);
        if (!g.is_square())
            bad(at("gram"), "Gram matrix must be square");
        return SesquilinearForm{g, static_cast<int>(integer(j["target_twist"], at("target_twist")))};
    }
    if (kind == "real_structure") {
        expect_keys(j, where, {"kind", "j"});
        Matrix m = matrix(j["j"], at("j"), std::nullopt, std::nullopt);
        if (!m.is_square())
            bad(at("j"), "real structure must be square");
        return RealStructureWitness{m};
    }
    if (kind == "sl2") {
        expect_keys(j, where, {"kind", "dim", "fprime", "fsecond", "central_weight", "grading", "y"}, {"x"});
        Sl2Record r;
        r.dim = dim_of();
        r.fprime = dec("fprime", r.dim);
        r.fsecond = dec("fsecond", r.dim);
        r.central_weight = static_cast<int>(integer(j["central_weight"], at("central_weight")));
        r.grading = grading("grading", r.dim);
        r.y = square(j["y"], at("y"), r.dim);
        if (j.contains("x"))
            r.x = square(j["x"], at("x"), r.dim);
        return r;
    }
    if (kind == "bisl2") {
        expect_keys(j, where, {"kind", "dim", "fprime", "fsecond", "central_weight", "bigrading", "first", "second"});
        BiSl2Record r;
        r.dim = dim_of();
        r.fprime = dec("fprime", r.dim);
        r.fsecond = dec("fsecond", r.dim);
        r.central_weight = static_cast<int>(integer(j["central_weight"], at("central_weight")));
        const json& pieces = j["bigrading"];
        if (!pieces.is_array())
            bad(at("bigrading"), "expected an array of {i, j, basis}");
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            std::string w = at("bigrading") + "/" + std::to_string(p);
            expect_keys(pieces[p], w, {"i", "j", "basis"});
            std::pair<int, int> key{static_cast<int>(integer(pieces[p]["i"], w + "/i")),
                                    static_cast<int>(integer(pieces[p]["j"], w + "/j"))};
            if (!r.bigrading.emplace(key, subspace(pieces[p]["basis"], w + "/basis", r.dim)).second)
                bad(w, "bidegree listed twice");
        }
        for (auto [key, x, y] : {std::tuple{"first", &r.x1, &r.y1}, std::tuple{"second", &r.x2, &r.y2}}) {
            expect_keys(j[key], at(key), {"x", "y"});
            *x = square(j[key]["x"], at(key) + "/x", r.dim);
            *y = square(j[key]["y"], at(key) + "/y", r.dim);
        }
        return r;
    }
    if (kind == "hodge_lefschetz") {
        expect_keys(j, where, {"kind", "dim", "fprime", "fsecond", "central_weight", "n"});
        std::size_t n = dim_of();
        return HodgeLefschetzData{n, dec("fprime", n), dec("fsecond", n),
                                  static_cast<int>(integer(j["central_weight"], at("central_weight"))),
                                  square(j["n"], at("n"), n)};
    }
    if (kind == "cone") {
        expect_keys(j, where,
                    {"kind", "space", "fprime", "fsecond", "weightfil", "pairing", "generators", "seed",
                     "sample_budget"});
        ConeRecord r;
        std::size_t n = dim_of("space");
        r.data.dim = n;
        r.data.fprime = dec("fprime", n);
        r.data.fsecond = dec("fsecond", n);
        r.data.weightfil = inc("weightfil", n);
        expect_keys(j["pairing"], at("pairing"), {"gram", "target_twist"});
        r.data.pairing.gram = square(j["pairing"]["gram"], at("pairing") + "/gram", n);
        r.data.pairing.target_twist =
            static_cast<int>(integer(j["pairing"]["target_twist"], at("pairing") + "/target_twist"));
        const json& gens = j["generators"];
        if (!gens.is_array())
            bad(at("generators"), "expected an array of matrices");
        for (std::size_t g = 0; g < gens.size(); ++g)
            r.data.generators.push_back(square(gens[g], at("generators") + "/" + std::to_string(g), n));
        long seed = integer(j["seed"], at("seed"));
        if (seed < 0)
            bad(at("seed"), "seed must be non-negative");
        r.seed = static_cast<std::uint64_t>(seed);
        r.sample_budget = count(j["sample_budget"], at("sample_budget"));
        return r;
    }
    if (kind == "graded") {
        expect_keys(j, where, {"kind", "dim", "fprime", "fsecond", "grading", "raising"});
        GradedRecord r;
        r.dim = dim_of();
        r.fprime = dec("fprime", r.dim);
        r.fsecond = dec("fsecond", r.dim);
        r.grading = grading("grading", r.dim);
        r.raising = square(j["raising"], at("raising"), r.dim);
        return r;
    }
    bad(at("kind"), "unknown kind \"" + kind + "\"");
}

Fixture parse_fixture(std::string_view text, const std::string& origin)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        std::string what = e.what();
        auto cut = what.find("error: ");
        throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         (cut == std::string::npos ? what : what.substr(cut + 7)));
    }
    try {
        expect_keys(doc, "", {"format_version", "structures", "checks"});
        Fixture f;
        f.format_version = static_cast<int>(integer(doc["format_version"], "/format_version"));
        if (f.format_version != 1)
            bad("/format_version", "unsupported format version " + std::to_string(f.format_version));
        if (!doc["structures"].is_object())
            bad("/structures", "expected an object of named structures");
        for (const auto& item : doc["structures"].items())
            f.structures.emplace(item.key(), structure_from_json(item.value(), "/structures/" + item.key()));
        const json& checks = doc["checks"];
        if (!checks.is_array())
            bad("/checks", "expected an array of checks");
        for (std::size_t i = 0; i < checks.size(); ++i) {
            std::string w = "/checks/" + std::to_string(i);
            expect_keys(checks[i], w, {"op", "expect"}, {"args"});
            Check c;
            if (!checks[i]["op"].is_string())
                bad(w + "/op", "expected a string");
            c.op = checks[i]["op"].get<std::string>();
            if (checks[i].contains("args")) {
                c.args = checks[i]["args"];
                if (!c.args.is_array())
                    bad(w + "/args", "expected an array");
            }
            auto v = checks[i]["expect"].is_string() ? parse_verdict(checks[i]["expect"].get<std::string>())
                                                     : std::nullopt;
            if (!v)
                bad(w + "/expect", "expected \"pass\", \"fail\" or \"alarm\"");
            c.expect = *v;
            f.checks.push_back(std::move(c));
        }
        return f;
    } catch (const ParseError& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

std::string serialize_fixture(const Fixture& f)
{
    json doc = json::object();
    doc["format_version"] = f.format_version;
    json structures = json::object();
    for (const auto& [name, s] : f.structures)
        structures[name] = to_json(s);
    doc["structures"] = structures;
    json checks = json::array();
    for (const auto& c : f.checks)
        checks.push_back({{"op", c.op}, {"args", c.args}, {"expect", to_string(c.expect)}});
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

bool FixtureRun::all_matched() const
{
    if (input_error)
        return false;
    for (const auto& c : checks)
        if (!c.matched())
            return false;
    return true;
}

int exit_code(const std::vector<FixtureRun>& runs)
{
    int code = 0;
    for (const auto& r : runs) {
        if (r.input_error)
            return 2;
        if (!r.all_matched())
            code = 1;
    }
    return code;
}

json to_json(const Report& r)
{
    json j = {{"name", r.name}, {"passed", r.passed}};
    if (!r.passed)
        j["witness"] = r.witness;
    if (!r.notes.empty())
        j["notes"] = r.notes;
    if (!r.parts.empty()) {
        json parts = json::array();
        for (const auto& p : r.parts)
            parts.push_back(to_json(p));
        j["parts"] = parts;
    }
    return j;
}

json to_json(const FixtureRun& run)
{
    json checks = json::array();
    std::size_t matched = 0;
    for (const auto& c : run.checks) {
        json cj = {{"index", c.index}, {"op", c.op},           {"label", c.label},
                   {"expect", to_string(c.expected)}, {"matched", c.matched()}, {"seconds", c.seconds}};
        cj["actual"] = c.actual ? json(to_string(*c.actual)) : json(nullptr);
        if (!c.message.empty())
            cj["message"] = c.message;
        if (!c.report.name.empty())
            cj["report"] = to_json(c.report);
        checks.push_back(std::move(cj));
        matched += c.matched() ? 1 : 0;
    }
    json j = {{"origin", run.origin},       {"input_error", run.input_error}, {"all_matched", run.all_matched()},
              {"matched", matched},         {"total", run.checks.size()},     {"seconds", run.seconds},
              {"checks", std::move(checks)}};
    if (!run.error.empty())
        j["error"] = run.error;
    return j;
}

void print_run(std::ostream& os, const FixtureRun& run, bool verbose)
{
    std::size_t matched = 0;
    for (const auto& c : run.checks)
        matched += c.matched() ? 1 : 0;
    if (!run.error.empty()) {
        os << run.origin << ": input error: " << run.error << '\n';
        return;
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", run.seconds);
    os << run.origin << ": " << matched << "/" << run.checks.size() << " checks matched (" << timing << ")\n";
    for (const auto& c : run.checks) {
        std::snprintf(timing, sizeof timing, "%.3f s", c.seconds);
        if (!c.actual) {
            os << "  [INPUT] #" << c.index << ' ' << c.label << ": " << c.message << '\n';
            continue;
        }
        os << (c.matched() ? "  [ok] #" : "  [MISMATCH] #") << c.index << ' ' << c.label << ": expected "
           << to_string(c.expected) << ", got " << to_string(*c.actual) << " (" << timing << ")\n";
        if (!c.matched() || verbose) {
            if (!c.message.empty())
                os << "      " << c.message << '\n';
            if (!c.report.name.empty())
                c.report.print(os, 3);
        }
    }
}

std::optional<std::string_view> bundled_fixture(std::string_view name)
{
    for (const auto& [file, text] : bundled_fixtures()) {
        std::string_view f = file;
        if (f == name || (f.size() > 8 && f.substr(0, f.size() - 8) == name))
            return text;
    }
    return std::nullopt;
}

} // namespace hodgecalc::harness
