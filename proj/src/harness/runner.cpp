#include "hodgecalc/errors.hpp"
#include "hodgecalc/harness/fixture.hpp"
#include "hodgecalc/harness/oracle.hpp"
#include "hodgecalc/signcalc.hpp"

#include <chrono>
#include <functional>
#include <set>

namespace hodgecalc::harness {

using nlohmann::json;

namespace {

struct Args {
    const Fixture& f;
    const json& a;

    void arity(std::size_t lo, std::size_t hi) const
    {
        if (a.size() < lo || a.size() > hi)
            throw FixtureInputError("expected " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) +
                                    " arguments, got " + std::to_string(a.size()));
    }
    bool has(std::size_t i) const { return i < a.size(); }

    const Structure& any(std::size_t i) const
    {
        if (!has(i) || !a[i].is_string())
            throw FixtureInputError("argument " + std::to_string(i + 1) + " must name a structure");
        auto it = f.structures.find(a[i].get<std::string>());
        if (it == f.structures.end())
            throw FixtureInputError("unknown structure \"" + a[i].get<std::string>() + "\"");
        return it->second;
    }

    template <class T>
    const T& get(std::size_t i, const char* kind) const
    {
        const T* v = std::get_if<T>(&any(i));
        if (!v)
            throw FixtureInputError("\"" + a[i].get<std::string>() + "\" is not of kind " + kind);
        return *v;
    }

    long integer(std::size_t i) const
    {
        if (!has(i) || !a[i].is_number_integer())
            throw FixtureInputError("argument " + std::to_string(i + 1) + " must be an integer");
        return a[i].get<long>();
    }
    int small(std::size_t i) const { return static_cast<int>(integer(i)); }
};

Report verdict_report(std::string name, bool ok, const std::string& why)
{
    Report r(std::move(name));
    if (!ok)
        r.fail(why);
    return r;
}

std::string first_difference(const std::map<int, Subspace>& a, const std::map<int, Subspace>& b,
                             const std::function<Subspace(int)>& at_a, const std::function<Subspace(int)>& at_b)
{
    std::set<int> keys;
    for (const auto& e : a)
        keys.insert(e.first);
    for (const auto& e : b)
        keys.insert(e.first);
    for (int k : keys)
        if (!(at_a(k) == at_b(k)))
            return "differ at index " + std::to_string(k) + " (dims " + std::to_string(at_a(k).dim()) + " and " +
                   std::to_string(at_b(k).dim()) + ")";
    return "";
}

std::string compare(const DecreasingFiltration& x, const DecreasingFiltration& y)
{
    return first_difference(x.jumps(), y.jumps(), [&x](int k) { return x.at(k); }, [&y](int k) { return y.at(k); });
}

std::string compare(const IncreasingFiltration& x, const IncreasingFiltration& y)
{
    return first_difference(x.jumps(), y.jumps(), [&x](int k) { return x.at(k); }, [&y](int k) { return y.at(k); });
}

Report weight_filtration_check(const Args& args)
{
    args.arity(2, 3);
    const Matrix& n = args.get<OperatorRecord>(0, "operator").matrix;
    int center = args.small(1);
    Report r("W(N) centered at " + std::to_string(center));
    IncreasingFiltration w = weight_filtration(n, center);
    std::string dims;
    for (const auto& [k, s] : w.jumps())
        dims += (dims.empty() ? "" : ", ") + std::string("W_") + std::to_string(k) + " dim " + std::to_string(s.dim());
    r.note(dims.empty() ? "zero space" : dims);
    r.add(check_weight_filtration(n, w, center));
    if (n.rows() <= 6) {
        std::string diff = compare(w, oracle_weight_filtration(n, center));
        r.add(verdict_report("agrees with the exhaustive oracle", diff.empty(), "filtrations " + diff));
    }
    if (args.has(2)) {
        std::string diff = compare(w, args.get<IncreasingFiltration>(2, "increasing_filtration"));
        r.add(verdict_report("equals " + args.a[2].get<std::string>(), diff.empty(), "filtrations " + diff));
    }
    return r;
}

template <class H>
Report twist_equals(const H& twisted, const H& expected, const std::string& name)
{
    Report r("twist equals " + name);
    if (twisted.dim != expected.dim) {
        r.fail("dimensions differ");
        return r;
    }
    if (auto d = compare(twisted.fprime, expected.fprime); !d.empty())
        r.fail("F' " + d);
    else if (auto e = compare(twisted.fsecond, expected.fsecond); !e.empty())
        r.fail("F'' " + e);
    if constexpr (std::is_same_v<H, PureHodge>) {
        if (twisted.weight != expected.weight)
            r.fail("weight " + std::to_string(twisted.weight) + ", expected " + std::to_string(expected.weight));
    } else {
        if (auto d = compare(twisted.weightfil, expected.weightfil); !d.empty())
            r.fail("W " + d);
    }
    return r;
}

using Handler = std::function<Report(const Args&)>;

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table = {
        {"check_pure",
         [](const Args& a) {
             a.arity(1, 1);
             return check_pure(a.get<PureHodge>(0, "pure"));
         }},
        {"check_mixed",
         [](const Args& a) {
             a.arity(1, 1);
             return check_mixed(a.get<MixedHodge>(0, "mixed"));
         }},
        {"check_real_structure",
         [](const Args& a) {
             a.arity(2, 2);
             return check_real_structure(a.get<PureHodge>(0, "pure"), a.get<RealStructureWitness>(1, "real_structure"));
         }},
        {"check_polarization",
         [](const Args& a) {
             a.arity(2, 2);
             return check_polarization(a.get<PureHodge>(0, "pure"), a.get<SesquilinearForm>(1, "pairing"));
         }},
        {"check_morphism",
         [](const Args& a) {
             a.arity(3, 4);
             const OperatorRecord& f = a.get<OperatorRecord>(0, "operator");
             int twist = a.has(3) ? a.small(3) : f.twist;
             const Structure& src = a.any(1);
             if (auto* s = std::get_if<PureHodge>(&src))
                 return check_morphism(f.matrix, *s, a.get<PureHodge>(2, "pure"), twist);
             if (auto* s = std::get_if<MixedHodge>(&src))
                 return check_morphism(f.matrix, *s, a.get<MixedHodge>(2, "mixed"), twist);
             throw FixtureInputError("check_morphism needs pure or mixed structures");
         }},
        {"tate_twist",
         [](const Args& a) {
             a.arity(3, 3);
             int l = a.small(1);
             std::string name = a.a[2].is_string() ? a.a[2].get<std::string>() : "";
             if (auto* s = std::get_if<PureHodge>(&a.any(0)))
                 return twist_equals(tate_twist(*s, l), a.get<PureHodge>(2, "pure"), name);
             return twist_equals(tate_twist(a.get<MixedHodge>(0, "pure or mixed"), l), a.get<MixedHodge>(2, "mixed"),
                                 name);
         }},
        {"deligne_weil",
         [](const Args& a) {
             a.arity(2, 2);
             Matrix c = deligne_weil(a.get<PureHodge>(0, "pure"));
             const Matrix& expected = a.get<OperatorRecord>(1, "operator").matrix;
             return verdict_report("Deligne-Weil operator equals " + a.a[1].get<std::string>(), c == expected,
                                   "computed " + to_string(c));
         }},
        {"weight_filtration", weight_filtration_check},
        {"check_sl2_hodge",
         [](const Args& a) {
             a.arity(1, 1);
             return check_sl2_hodge(a.get<Sl2Record>(0, "sl2").resolve());
         }},
        {"check_sl2_polarization",
         [](const Args& a) {
             a.arity(2, 2);
             return check_sl2_polarization(a.get<Sl2Record>(0, "sl2").resolve(),
                                           a.get<SesquilinearForm>(1, "pairing"));
         }},
        {"check_sl2_polarization_lowering",
         [](const Args& a) {
             a.arity(2, 2);
             return check_sl2_polarization_lowering(a.get<Sl2Record>(0, "sl2").resolve(),
                                                    a.get<SesquilinearForm>(1, "pairing"));
         }},
        {"check_equivalent_polarization_criterion",
         [](const Args& a) {
             a.arity(2, 2);
             bool v = check_equivalent_polarization_criterion(a.get<Sl2Record>(0, "sl2").resolve(),
                                                              a.get<SesquilinearForm>(1, "pairing"));
             return verdict_report("raising and lowering criteria agree on a polarization", v,
                                   "both criteria reject the pairing");
         }},
        {"hard_lefschetz",
         [](const Args& a) {
             a.arity(1, 1);
             Sl2HodgeData d = a.get<Sl2Record>(0, "sl2").resolve();
             return hard_lefschetz(d.triple, d.grading);
         }},
        {"check_bisl2",
         [](const Args& a) {
             a.arity(1, 1);
             return check_bisl2(a.get<BiSl2Record>(0, "bisl2").resolve());
         }},
        {"check_bisl2_polarization",
         [](const Args& a) {
             a.arity(2, 2);
             return check_bisl2_polarization(a.get<BiSl2Record>(0, "bisl2").resolve(),
                                             a.get<SesquilinearForm>(1, "pairing"));
         }},
        {"merge_bisl2",
         [](const Args& a) {
             a.arity(1, 2);
             std::optional<SesquilinearForm> s;
             if (a.has(1))
                 s = a.get<SesquilinearForm>(1, "pairing");
             return merge_bisl2(a.get<BiSl2Record>(0, "bisl2").resolve(), s).report;
         }},
        {"check_hodge_lefschetz",
         [](const Args& a) {
             a.arity(1, 2);
             std::optional<SesquilinearForm> s;
             if (a.has(1))
                 s = a.get<SesquilinearForm>(1, "pairing");
             return check_hodge_lefschetz(a.get<HodgeLefschetzData>(0, "hodge_lefschetz"), s);
         }},
        {"check_cone_polarization",
         [](const Args& a) {
             a.arity(1, 1);
             const ConeRecord& c = a.get<ConeRecord>(0, "cone");
             return check_cone_polarization(c.data, c.sample_budget, c.seed);
         }},
        {"reduce_cone",
         [](const Args& a) {
             a.arity(2, 2);
             const ConeRecord& c = a.get<ConeRecord>(0, "cone");
             ReducedCone r = reduce_cone(c.data, a.small(1), c.sample_budget, c.seed);
             r.report.note("reduced space has dimension " + std::to_string(r.structure.dim) + " and " +
                           std::to_string(r.structure.generators.size()) + " generators");
             return r.report;
         }},
        {"reduce_cone_iterated",
         [](const Args& a) {
             a.arity(1, 1);
             const ConeRecord& c = a.get<ConeRecord>(0, "cone");
             return reduce_cone_iterated(c.data, c.sample_budget, c.seed);
         }},
        {"lefschetz_ratio_positive",
         [](const Args& a) {
             a.arity(4, 4);
             return lefschetz_ratio_positive(a.get<OperatorRecord>(0, "operator").matrix,
                                             a.get<OperatorRecord>(1, "operator").matrix,
                                             a.get<SubspaceRecord>(2, "subspace").space,
                                             a.get<SubspaceRecord>(3, "subspace").space);
         }},
        {"twist_by_grading",
         [](const Args& a) {
             a.arity(1, 1);
             const GradedRecord& g = a.get<GradedRecord>(0, "graded");
             TwistedGraded t = twist_by_grading(g.fprime, g.fsecond, g.grading, g.raising);
             t.report.note("twisted structure is centered at weight " + std::to_string(t.center));
             return t.report;
         }},
        {"epsilon",
         [](const Args& a) {
             a.arity(2, 2);
             int e = epsilon(a.integer(0));
             return verdict_report("epsilon(" + std::to_string(a.integer(0)) + ")", e == a.integer(1),
                                   "value " + std::to_string(e));
         }},
        {"epsilon_cocycle",
         [](const Args& a) {
             a.arity(1, 1);
             return check_epsilon_cocycle(a.small(0));
         }},
        {"pushforward_sign",
         [](const Args& a) {
             a.arity(1, 1);
             return check_pushforward_model(a.small(0));
         }},
        {"triple_composition",
         [](const Args& a) {
             a.arity(1, 1);
             return check_triple_composition(a.small(0));
         }},
        {"godement_defect",
         [](const Args& a) {
             a.arity(5, 5);
             int d = godement_diagram_defect(a.small(0), a.small(1), a.small(2), a.small(3));
             return verdict_report("Godement defect", d == a.integer(4), "value " + std::to_string(d));
         }},
        {"godement",
         [](const Args& a) {
             a.arity(1, 1);
             return check_godement(a.small(0));
         }},
    };
    return table;
}

std::string label_of(const Check& c)
{
    std::string s = c.op + "(";
    for (std::size_t i = 0; i < c.args.size(); ++i)
        s += (i ? ", " : "") + (c.args[i].is_string() ? c.args[i].get<std::string>() : c.args[i].dump());
    return s + ")";
}

} // namespace

FixtureRun run_fixture(const Fixture& f, const std::string& origin)
{
    using clock = std::chrono::steady_clock;
    FixtureRun run;
    run.origin = origin;
    auto t0 = clock::now();
    for (std::size_t i = 0; i < f.checks.size(); ++i) {
        const Check& c = f.checks[i];
        CheckOutcome out;
        out.index = i;
        out.op = c.op;
        out.label = label_of(c);
        out.expected = c.expect;
        auto t1 = clock::now();
        try {
            auto it = handlers().find(c.op);
            if (it == handlers().end())
                throw FixtureInputError("unknown check \"" + c.op + "\"");
            out.report = it->second(Args{f, c.args});
            out.actual = out.report.passed ? Verdict::pass : Verdict::fail;
        } catch (const InvalidStructure& e) {
            out.actual = Verdict::fail;
            out.message = std::string("invalid structure: ") + e.what();
        } catch (const CounterexampleAlarm& e) {
            out.actual = Verdict::alarm;
            out.message = std::string("counterexample alarm: ") + e.what();
        } catch (const ConventionError& e) {
            out.actual = Verdict::alarm;
            out.message = std::string("convention error: ") + e.what();
        } catch (const std::exception& e) {
            out.message = e.what();
            run.input_error = true;
        }
        out.seconds = std::chrono::duration<double>(clock::now() - t1).count();
        run.checks.push_back(std::move(out));
    }
    run.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return run;
}

FixtureRun run_fixture_text(std::string_view text, const std::string& origin)
{
    Fixture f;
    try {
        f = parse_fixture(text, origin);
    } catch (const ParseError& e) {
        FixtureRun run;
        run.origin = origin;
        run.input_error = true;
        run.error = e.what();
        return run;
    } catch (const std::exception& e) {
        FixtureRun run;
        run.origin = origin;
        run.input_error = true;
        run.error = origin + ": " + e.what();
        return run;
    }
    return run_fixture(f, origin);
}

} // namespace hodgecalc::harness
