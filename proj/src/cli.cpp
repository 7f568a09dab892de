#include "bicat/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <ostream>

#include "bicat/conditions.hpp"
#include "bicat/presentation.hpp"

namespace bicat {

namespace {

using nlohmann::json;

json to_json(const Binding& b) {
    return {{"role", b.role}, {"kind", kind_name(b.kind)}, {"side", b.side}, {"index", b.index}, {"name", b.name}};
}

json to_json(const std::vector<Binding>& bs) {
    json out = json::array();
    for (const auto& b : bs) out.push_back(to_json(b));
    return out;
}

json to_json(const ConditionReport& r) {
    json j = {{"condition", r.tag},
              {"verdict", verdict_name(r.verdict)},
              {"inputs", r.inputs},
              {"candidates", r.candidates}};
    if (r.verdict == Verdict::Pass) j["witness"] = to_json(r.witness);
    if (r.verdict == Verdict::Fail) j["counterexample"] = to_json(r.counterexample);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string to_text(const ConditionReport& r) {
    std::string s = fmt::format("{:<4} {:<12} inputs={} candidates={}", r.tag, verdict_name(r.verdict), r.inputs,
                                r.candidates);
    if (r.verdict == Verdict::Pass && !r.witness.empty()) s += "\n     witness: " + format_bindings(r.witness);
    if (r.verdict == Verdict::Fail) s += "\n     counterexample: " + format_bindings(r.counterexample);
    if (!r.note.empty()) s += "\n     note: " + r.note;
    return s;
}

int exit_for(const std::vector<ConditionReport>& rs) {
    int code = kExitPass;
    for (const auto& r : rs) {
        if (r.verdict == Verdict::Precondition) return kExitPrecondition;
        if (r.verdict == Verdict::Fail) code = kExitFail;
    }
    return code;
}

struct UsageError : Error {
    using Error::Error;
};

// One command invocation: shared options, workspace, and the two output forms.
class Session {
public:
    Session(std::ostream& out, SearchOptions opt, bool machine)
        : out_(out), opt_(opt), machine_(machine), ws_(opt) {}

    void line(const std::string& s) {
        if (!machine_) out_ << s << "\n";
    }
    json& doc() { return doc_; }
    const SearchOptions& opt() const { return opt_; }
    Workspace& ws() { return ws_; }

    int finish(int code) {
        if (machine_) {
            doc_["exit_code"] = code;
            out_ << doc_.dump(2) << "\n";
        }
        return code;
    }

    void reports(const std::string& heading, const std::vector<ConditionReport>& rs) {
        line(heading);
        json arr = json::array();
        for (const auto& r : rs) {
            line("  " + to_text(r));
            arr.push_back(to_json(r));
        }
        doc_["reports"].insert(doc_["reports"].end(), arr.begin(), arr.end());
    }

private:
    std::ostream& out_;
    SearchOptions opt_;
    bool machine_;
    Workspace ws_;
    json doc_ = {{"reports", json::array()}};
};

int cmd_validate(Session& s, const std::string& file) {
    const Document& d = s.ws().load(file);
    auto r = validate_bicat(*d.bicat);
    s.doc()["command"] = "validate";
    s.doc()["pass"] = r.pass;
    s.doc()["strict"] = r.strict;
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"law", x.law}, {"detail", x.detail}});
    s.doc()["violations"] = v;
    s.line(fmt::format("{}: {} objects, {} 1-cells, {} 2-cells{}", d.name, d.bicat->object_count(),
                       d.bicat->one_count(), d.bicat->two_count(), r.strict ? " (strict)" : ""));
    for (const auto& x : r.violations) s.line("  violation " + x.law + ": " + x.detail);
    s.line(r.pass ? "valid" : "invalid");
    return s.finish(r.pass ? kExitPass : kExitFail);
}

int cmd_check_bf(Session& s, const std::string& file, const std::string& cls) {
    const Document& d = s.ws().load(file);
    WClass w = resolve_class(d, cls);
    const BfReport& r = w.bf(s.opt());
    s.doc()["command"] = "check-bf";
    s.doc()["class"] = w.describe();
    json ax = json::array();
    s.line("class " + w.describe());
    for (const auto& a : r.axioms) {
        ax.push_back({{"axiom", a.name}, {"pass", a.pass}, {"detail", a.detail}});
        s.line(fmt::format("  {:<5} {}{}", a.name, a.pass ? "pass" : "fail", a.detail.empty() ? "" : "  " + a.detail));
    }
    s.doc()["axioms"] = ax;
    s.doc()["pass"] = r.pass();
    s.doc()["contains_all_equivalences"] = r.contains_all_equivalences;
    return s.finish(r.pass() ? kExitPass : kExitFail);
}

int cmd_saturate(Session& s, const std::string& file, const std::string& cls) {
    const Document& d = s.ws().load(file);
    const FinBicat& b = *d.bicat;
    WClass w = resolve_class(d, cls);
    Saturation sat = saturate_with_witnesses(w);
    s.doc()["command"] = "saturate";
    s.doc()["class"] = w.describe();
    json members = json::array();
    s.line("class " + w.describe());
    s.line("saturation " + sat.cls.describe());
    for (OneId f : sat.cls.cells()) {
        const auto& wt = sat.witnesses.at(f);
        members.push_back({{"member", b.name(f)}, {"g", b.name(wt.g)}, {"h", b.name(wt.h)}});
        s.line(fmt::format("  {}  via g={}, h={}", b.name(f), b.name(wt.g), b.name(wt.h)));
    }
    s.doc()["saturation"] = members;
    return s.finish(kExitPass);
}

int cmd_localize(Session& s, const std::string& file, const std::string& cls, const std::string& out_file) {
    const Document& d = s.ws().load(file);
    WClass w = resolve_class(d, cls);
    FractionBicat fb = materialize_fractions(w, s.opt());
    auto v = validate_bicat(*fb.bicat);
    auto u = validate_psfun(universal_pseudofunctor(fb));
    s.doc()["command"] = "localize";
    s.doc()["class"] = w.describe();
    s.doc()["one_cells"] = fb.spans.size();
    s.doc()["two_cells"] = fb.classes.size();
    s.doc()["coherent"] = v.pass;
    s.doc()["universal_valid"] = u.pass;
    s.line(fmt::format("localization at {}: {} objects, {} spans, {} 2-cell classes", w.describe(),
                       fb.bicat->object_count(), fb.spans.size(), fb.classes.size()));
    for (std::size_t i = 0; i < fb.spans.size(); ++i) s.line("  " + fb.bicat->name(OneId(i)));
    for (const auto& x : v.violations) s.line("  violation " + x.law + ": " + x.detail);
    for (const auto& x : u.violations) s.line("  universal violation " + x.law + ": " + x.detail);
    s.line(std::string("coherence ") + (v.pass ? "pass" : "fail") + ", universal pseudofunctor " +
           (u.pass ? "pass" : "fail"));
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw UsageError("cannot write '" + out_file + "'");
        f << export_document(*fb.bicat);
        s.line("wrote " + out_file);
    }
    return s.finish(v.pass && u.pass ? kExitPass : kExitFail);
}

struct PsFunArgs {
    std::string file;
    std::string psfun;
    std::string class_src;
    std::string class_tgt = "min";
};

struct Resolved {
    ResolvedPsFun r;
    WClass wa;
    WClass wb;
};

Resolved resolve(Session& s, const PsFunArgs& a) {
    const Document& d = s.ws().load(a.file);
    ResolvedPsFun r = s.ws().psfun(d, a.psfun);
    WClass wa = resolve_class(d, a.class_src.empty() ? r.source_class : a.class_src);
    WClass wb = r.target_class(a.class_tgt);
    return {std::move(r), std::move(wa), std::move(wb)};
}

int cmd_check(Session& s, const PsFunArgs& a, const std::string& which) {
    if (which != "A" && which != "B" && which != "EF" && which != "X" && which != "all")
        throw UsageError("--conditions must be one of A, B, EF, X, all");
    Resolved x = resolve(s, a);
    const PsFun& F = x.r.fun;
    s.doc()["command"] = "check";
    s.doc()["psfun"] = F.name;
    s.doc()["class_src"] = x.wa.describe();
    s.doc()["class_tgt"] = x.wb.describe();
    s.line(fmt::format("pseudofunctor {} with W_A = {}, W_B = {}", F.name, x.wa.describe(), x.wb.describe()));
    std::vector<ConditionReport> all;
    auto run = [&](const std::string& heading, std::vector<ConditionReport> rs) {
        s.reports(heading, rs);
        all.insert(all.end(), rs.begin(), rs.end());
    };
    bool every = which == "all";
    if (every || which == "A") run("A conditions", check_A_all(F, x.wa, x.wb, s.opt()));
    if (every || which == "B") run("B conditions", check_B_all(F, x.wa, s.opt()));
    if (every || which == "EF") run("EF conditions", check_EF_all(F, x.wa, s.opt()));
    if (every || which == "X") run("X conditions", is_weak_equivalence(F, s.opt()).reports);
    return s.finish(exit_for(all));
}

int cmd_cross_validate(Session& s, const PsFunArgs& a) {
    Resolved x = resolve(s, a);
    TheoremReport t = cross_validate_theorems(x.r.fun, x.wa, x.wb, s.opt());
    s.doc()["command"] = "cross-validate";
    s.doc()["psfun"] = x.r.fun.name;
    json checks = json::array();
    s.line(fmt::format("pseudofunctor {} with W_A = {}, W_B = {}", x.r.fun.name, x.wa.describe(), x.wb.describe()));
    for (const auto& c : t.checks) {
        checks.push_back({{"check", c.name}, {"evaluated", c.evaluated}, {"agree", c.agree}, {"detail", c.detail}});
        s.line(fmt::format("  {:<24} {:<8} {}", c.name, !c.evaluated ? "skipped" : c.agree ? "agree" : "FINDING",
                           c.detail));
    }
    s.doc()["checks"] = checks;
    s.doc()["findings"] = t.findings;
    for (const auto& f : t.findings) s.line("FINDING " + f);
    return s.finish(t.consistent() ? kExitPass : kExitFail);
}

std::vector<Verdict> verdicts(const std::vector<ConditionReport>& rs) {
    std::vector<Verdict> v;
    for (const auto& r : rs) v.push_back(r.verdict);
    return v;
}

int cmd_demo(Session& s, const std::string& which) {
    if (which != "appendix-toy") throw UsageError("unknown demo '" + which + "' (available: appendix-toy)");
    s.doc()["command"] = "demo appendix-toy";
    json checks = json::array();
    bool ok = true;
    auto expect = [&](const std::string& what, bool holds, const std::string& detail) {
        ok = ok && holds;
        checks.push_back({{"check", what}, {"holds", holds}, {"detail", detail}});
        s.line(fmt::format("[{}] {}{}", holds ? "ok" : "FAILED", what, detail.empty() ? "" : ": " + detail));
    };

    std::vector<std::vector<Verdict>> runs;
    for (const char* fixture : {"appx-toy", "appx-toy-idem"}) {
        const Document& d = s.ws().load(fixture);
        const FinBicat& b = *d.bicat;
        WClass w = resolve_class(d, "W");
        s.line(fmt::format("== {} with W = {}", fixture, w.describe()));
        expect("W satisfies the fraction axioms", w.bf(s.opt()).pass(), "");

        FractionBicat fb = materialize_fractions(w, s.opt());
        PsFun U = universal_pseudofunctor(fb, "U_W");
        TwoId g = *b.find_two("γ");
        TwoId i = *b.find_two("i_idB");
        expect("U_W identifies γ and i_idB", U.two(g) == U.two(i),
               fmt::format("U(γ) = {}, U(i_idB) = {}", fb.bicat->name(U.two(g)), fb.bicat->name(U.two(i))));

        ConditionReport ef3 = check_EF(U, w, 3, s.opt());
        auto p1 = ef3.cell("preimage_1");
        auto p2 = ef3.cell("preimage_2");
        bool pair = p1 && p2 && std::minmax(*p1, *p2) == std::minmax(g.value, i.value);
        expect("EF3 fails on the pair (γ, i_idB)", ef3.verdict == Verdict::Fail && pair,
               format_bindings(ef3.counterexample));

        auto bs = check_B_all(U, w, s.opt());
        s.reports("B conditions for U_W", bs);
        expect("B1..B5 hold for U_W", exit_for(bs) == kExitPass, "");

        std::vector<ConditionReport> all = bs;
        all.push_back(ef3);
        runs.push_back(verdicts(all));
    }
    expect("both toy variants give identical verdicts", runs[0] == runs[1], "");
    s.doc()["checks"] = checks;
    return s.finish(ok ? kExitPass : kExitFail);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite bicategory workbench: fraction axioms, localizations and equivalence conditions", "bicat"};
    app.require_subcommand(1);

    int jobs = 1;
    bool strict_fast_path = false;
    std::string format = "text";
    app.add_option("--jobs", jobs, "worker threads for exhaustive searches")->check(CLI::PositiveNumber);
    app.add_flag("--strict-fast-path", strict_fast_path, "trust the strict flag of a document");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}));

    std::string file, cls, out_file, demo_name, conditions;
    PsFunArgs pf;

    auto* validate = app.add_subcommand("validate", "check the bicategory laws of a document");
    validate->add_option("file", file)->required();

    auto* bf = app.add_subcommand("check-bf", "check the fraction axioms for a class");
    bf->add_option("file", file)->required();
    bf->add_option("--class", cls)->required();

    auto* sat = app.add_subcommand("saturate", "print the saturation of a class with witnesses");
    sat->add_option("file", file)->required();
    sat->add_option("--class", cls)->required();

    auto* loc = app.add_subcommand("localize", "materialize the bicategory of fractions");
    loc->add_option("file", file)->required();
    loc->add_option("--class", cls)->required();
    loc->add_option("--out", out_file, "write the localization as a document");

    auto add_psfun_args = [&](CLI::App* c) {
        c->add_option("file", pf.file)->required();
        c->add_option("--psfun", pf.psfun)->required();
        c->add_option("--class-src", pf.class_src, "W_A (default: the class of the declaration, else ids)");
        c->add_option("--class-tgt", pf.class_tgt, "W_B (default: min)");
    };
    auto* check = app.add_subcommand("check", "decide equivalence conditions for a pseudofunctor");
    check->add_option("--conditions", conditions)->required()->check(CLI::IsMember({"A", "B", "EF", "X", "all"}));
    add_psfun_args(check);

    auto* cross = app.add_subcommand("cross-validate", "compare the theorems' two sides on a configuration");
    add_psfun_args(cross);

    auto* demo = app.add_subcommand("demo", "run a worked example");
    demo->add_option("name", demo_name)->required();

    for (auto* c : {validate, bf, sat, loc, check, cross, demo}) c->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    SearchOptions opt;
    opt.jobs = static_cast<unsigned>(jobs);
    opt.strict_fast_path = strict_fast_path;
    Session s(out, opt, format == "machine");
    try {
        if (*validate) return cmd_validate(s, file);
        if (*bf) return cmd_check_bf(s, file, cls);
        if (*sat) return cmd_saturate(s, file, cls);
        if (*loc) return cmd_localize(s, file, cls, out_file);
        if (*check) return cmd_check(s, pf, conditions);
        if (*cross) return cmd_cross_validate(s, pf);
        if (*demo) return cmd_demo(s, demo_name);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace bicat
