#include "nakhom/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nakhom/jsonio.hpp"

namespace nakhom {

namespace {

struct Common {
    std::string kupisch;
    std::vector<std::string> modules;
    std::string format = "text";
    std::string field_text;
    bool timing = false;
};

struct Bounds {
    int n = 6, c = 6;
};

Bounds parse_bounds(const std::string& text) {
    // "n=6,c=6" in either order
    Bounds b;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) fail("ParseError", "bounds expect n=<..>,c=<..>");
        const std::string key = tok.substr(0, eq);
        const int val = std::stoi(tok.substr(eq + 1));
        if (key == "n") b.n = val;
        else if (key == "c") b.c = val;
        else fail("ParseError", "unknown bound '" + key + "'");
    }
    if (b.n < 1 || b.c < 1) fail("ParseError", "bounds must be positive");
    return b;
}

FieldSpec field_of(const Common& common) {
    if (!common.field_text.empty()) return FieldSpec::parse(common.field_text);
    if (const char* env = std::getenv("NAKHOM_FIELD")) return FieldSpec::parse(env);
    return FieldSpec::rationals();
}

KupischSeries series_of(const Common& common) {
    if (common.kupisch.empty())
        fail("UsageError", "this command needs --kupisch \"<linear|cyclic>:<c list>\"");
    return parse_kupisch(common.kupisch);
}

std::vector<IntervalModule> modules_of(const Common& common) {
    std::vector<IntervalModule> out;
    for (const auto& s : common.modules) out.push_back(IntervalModule::parse(s));
    return out;
}

/* Output envelope shared by every command. */
class Emitter {
public:
    Emitter(const Common& common, std::string command, std::ostream& out)
        : common_(common), command_(std::move(command)), out_(out),
          start_(std::chrono::steady_clock::now()) {
        input_ = ojson::object();
        if (!common.kupisch.empty()) input_["kupisch"] = common.kupisch;
        if (!common.modules.empty()) input_["modules"] = common.modules;
    }

    void input(const std::string& key, const ojson& value) { input_[key] = value; }
    void warn(const std::string& w) { warnings_.push_back(w); }

    /* text_fn prints the human-readable form of the payload. */
    template <class TextFn>
    void emit(const ojson& result, TextFn&& text_fn) {
        if (common_.format == "json") {
            ojson env{{"tool", "nakhom"},
                      {"version", kToolVersion},
                      {"command", command_},
                      {"input", input_},
                      {"result", result},
                      {"warnings", warnings_}};
            if (common_.timing) env["timing_ms"] = elapsed_ms();
            out_ << env.dump(2) << "\n";
        } else {
            text_fn(out_);
            for (const auto& w : warnings_) out_ << "warning: " << w << "\n";
            if (common_.timing)
                out_ << "elapsed: " << std::fixed << std::setprecision(1) << elapsed_ms()
                     << " ms\n";
        }
    }

private:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }
    const Common& common_;
    std::string command_;
    std::ostream& out_;
    ojson input_;
    std::vector<std::string> warnings_;
    std::chrono::steady_clock::time_point start_;
};

/* Fixed-width text table. */
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
    void print(std::ostream& out) const {
        std::vector<size_t> w(header_.size(), 0);
        auto grow = [&](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < cells.size() && i < w.size(); ++i)
                w[i] = std::max(w[i], cells[i].size());
        };
        grow(header_);
        for (const auto& r : rows_) grow(r);
        auto line = [&](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < w.size(); ++i)
                out << std::left << std::setw(static_cast<int>(w[i]) + 2)
                    << (i < cells.size() ? cells[i] : "");
            out << "\n";
        };
        line(header_);
        std::vector<std::string> rule;
        for (size_t i = 0; i < w.size(); ++i) rule.push_back(std::string(w[i], '-'));
        line(rule);
        for (const auto& r : rows_) line(r);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string joined(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int cmd_validate(const Common& common, std::ostream& out) {
    const KupischSeries K = series_of(common);
    Emitter em(common, "validate", out);
    em.emit(to_json(K), [&](std::ostream& o) {
        o << "valid " << orientation_str(K.orientation()) << " series, n = " << K.n()
          << ", dim = " << K.dim() << "\n"
          << "c = [" << joined(K.c()) << "]\n"
          << "d = [" << joined(K.d()) << "]\n";
    });
    return 0;
}

int cmd_info(const Common& common, std::ostream& out) {
    const KupischSeries K = series_of(common);
    Emitter em(common, "info", out);
    const ExtNat dd = domdim_algebra(K);
    const ExtNat gd = gldim(K);
    const GorensteinReport gor = gorenstein(K);
    const ClassificationFlags flags = classify(K);
    const auto faithful = minimal_faithful_vertices(K);
    const OppositeResult op = opposite(K);

    ojson j = to_json(K);
    j["minimal_faithful_vertices"] = std::vector<int>(faithful.begin(), faithful.end());
    j["domdim"] = to_json(dd);
    j["gldim"] = to_json(gd);
    j["gorenstein_dimension"] = to_json(gor.gdim);
    j["classification"] = to_json(flags);
    j["opposite"] = op.series.str();

    em.emit(j, [&](std::ostream& o) {
        o << K.str() << ": n = " << K.n() << ", dim = " << K.dim() << "\n"
          << "d = [" << joined(K.d()) << "]\n"
          << "minimal faithful vertices: {";
        bool first = true;
        for (int v : faithful) {
            o << (first ? "" : ",") << v;
            first = false;
        }
        o << "}\n"
          << "domdim = " << dd.str() << ", gldim = " << gd.str()
          << ", Gorenstein dim = " << gor.gdim.str() << "\n"
          << "higher Auslander: " << (flags.higher_auslander ? "yes" : "no")
          << ", higher Auslander-Solberg: " << (flags.higher_auslander_solberg ? "yes" : "no")
          << ", Morita self-dual: " << (flags.morita_selfdual ? "yes" : "no") << "\n"
          << "opposite: " << op.series.str() << "\n";
    });
    return 0;
}

int cmd_resolve(const Common& common, const std::string& direction, long max_steps,
                std::ostream& out) {
    const KupischSeries K = series_of(common);
    const auto mods = modules_of(common);
    if (mods.empty()) fail("UsageError", "resolve needs at least one --module \"M(i,k)\"");
    ModuleList L;
    for (const auto& m : mods) L.add(m);
    const ResolutionReport rep =
        direction == "projective" ? min_projective_resolution(K, L, max_steps)
                                  : min_injective_resolution(K, L, max_steps);
    Emitter em(common, "resolve", out);
    em.input("direction", direction);
    em.emit(to_json(rep), [&](std::ostream& o) {
        o << (rep.direction == Direction::Injective ? "minimal injective resolution of "
                                                    : "minimal projective resolution of ")
          << L.str() << "\n";
        Table t({"step", "term", "next"});
        for (size_t i = 0; i < rep.steps.size(); ++i)
            t.row({std::to_string(i), rep.steps[i].term.str(), rep.steps[i].next.str()});
        t.print(o);
        o << "length = " << rep.length.str()
          << ", dominant prefix = " << rep.dominant_prefix.str()
          << (rep.cycle_detected ? " (cycle detected)" : "") << "\n";
    });
    return 0;
}

int cmd_domdim(const Common& common, std::ostream& out) {
    const KupischSeries K = series_of(common);
    const auto mods = modules_of(common);
    Emitter em(common, "domdim", out);
    if (mods.empty()) {
        const ExtNat dd = domdim_algebra(K);
        em.emit(ojson{{"domdim", to_json(dd)}},
                [&](std::ostream& o) { o << dd.str() << "\n"; });
    } else {
        ojson per = ojson::array();
        std::vector<std::string> lines;
        for (const auto& m : mods) {
            const ExtNat dd = domdim_module(K, m);
            per.push_back(ojson{{"module", m.str()}, {"domdim", to_json(dd)}});
            lines.push_back(m.str() + ": " + dd.str());
        }
        em.emit(ojson{{"modules", per}}, [&](std::ostream& o) {
            for (const auto& l : lines) o << l << "\n";
        });
    }
    return 0;
}

int cmd_gldim(const Common& common, std::ostream& out) {
    const KupischSeries K = series_of(common);
    const ExtNat g = gldim(K);
    Emitter em(common, "gldim", out);
    em.emit(ojson{{"gldim", to_json(g)}}, [&](std::ostream& o) { o << g.str() << "\n"; });
    return 0;
}

int cmd_gorenstein(const Common& common, std::ostream& out) {
    const KupischSeries K = series_of(common);
    const GorensteinReport g = gorenstein(K);
    Emitter em(common, "gorenstein", out);
    em.emit(to_json(g), [&](std::ostream& o) {
        Table t({"vertex", "injdim(e_iA)", "projdim(D(Ae_i))"});
        for (int i = 0; i < K.n(); ++i)
            t.row({std::to_string(i), g.injdim_projectives[i].str(),
                   g.projdim_injectives[i].str()});
        t.print(o);
        o << "Gorenstein dimension = " << g.gdim.str() << "\n";
        if (g.asymmetry) o << "WARNING: one-sided finiteness (invariant violation)\n";
    });
    return 0;
}

int cmd_homdim(const Common& common, std::ostream& out) {
    const KupischSeries K = series_of(common);
    const auto mods = modules_of(common);
    if (mods.size() != 2) fail("UsageError", "homdim needs exactly two --module arguments");
    const long d = hom_dim(K, mods[0], mods[1]);
    Emitter em(common, "homdim", out);
    em.emit(ojson{{"hom_dim", d}}, [&](std::ostream& o) { o << d << "\n"; });
    return 0;
}

int cmd_endo(const Common& common, long tilt, bool with_relations, int degree_cap,
             std::ostream& out) {
    const KupischSeries K = series_of(common);
    const auto mods = modules_of(common);
    ModuleList L;
    if (!mods.empty()) {
        for (const auto& m : mods) L.add(m);
    } else {
        const ExtNat dd = domdim_algebra(K);
        if (!dd.is_finite())
            fail("InfiniteDomdim", "self-injective input; pass explicit --module summands");
        L = canonical_tilting(K, tilt > 0 ? tilt : dd.value());
    }
    const EndoAlgebra E = build_endo(K, L);
    const QuiverPresentation Q = with_relations ? relations(E, degree_cap) : quiver(E);

    Emitter em(common, "endo", out);
    if (E.dropped_duplicates) em.warn("duplicate summands dropped (basic version used)");
    ojson j = to_json(E);
    j["quiver"] = to_json(Q);
    em.emit(j, [&](std::ostream& o) {
        o << "End(" << E.summands.str() << ") over " << K.str() << "\n"
          << "dim = " << E.dim() << "\n";
        Table t({"", "arrows ->"});
        o << "cartan (rows = source summand):\n";
        for (const auto& row : Q.cartan) {
            std::string s;
            for (long v : row) s += std::to_string(v) + " ";
            o << "  " << s << "\n";
        }
        o << "quiver arrows:";
        for (const auto& a : Q.arrows) o << " " << a[0] << "->" << a[1];
        o << "\n";
        if (with_relations) {
            o << "relations (" << Q.relations.size() << "), quotient dim " << Q.quotient_dim
              << ", certificate " << (Q.certificate_ok ? "ok" : "FAILED") << "\n";
            for (const auto& r : Q.relations) {
                o << "  ";
                bool first = true;
                for (const auto& [coef, path] : r.terms) {
                    o << (first ? "" : " + ") << coef.str() << "*(";
                    for (size_t i = 0; i < path.size(); ++i) o << (i ? " " : "") << path[i];
                    o << ")";
                    first = false;
                }
                o << " = 0\n";
            }
        }
    });
    return 0;
}

int cmd_tilting(const Common& common, long index, long m, FieldSpec field, std::ostream& out) {
    const KupischSeries K = series_of(common);
    const ExtNat dd = domdim_algebra(K);
    if (!dd.is_finite()) fail("InfiniteDomdim", "tilting check needs finite dominant dimension");
    const long i = index > 0 ? index : dd.value();
    const ModuleList T = canonical_tilting(K, i);
    const SCAlgebra A = nakayama_to_sc(K, field);

    TiltingReport rep;
    if (field.is_rational()) {
        EngineContext<Rational> ctx(A);
        rep = tilting_check(K, ctx, T, m > 0 ? m : i);
    } else {
        FpScope scope(field.p);
        EngineContext<Fp> ctx(A);
        rep = tilting_check(K, ctx, T, m > 0 ? m : i);
    }
    Emitter em(common, "tilting", out);
    em.input("index", i);
    ojson j = to_json(rep);
    j["tilting_module"] = to_json(T);
    em.emit(j, [&](std::ostream& o) {
        o << "T = " << T.str() << "\n"
          << "projdim(T) = " << rep.projective_dimension.str() << " (<= m: "
          << (rep.projdim_ok ? "ok" : "FAIL") << ")\n"
          << "Ext^j(T,T) for j = 1..projdim: ";
        for (long v : rep.ext_dims) o << v << " ";
        o << (rep.ext_vanishing_ok ? "(all zero)" : "(NONZERO)") << "\n"
          << "summands = " << rep.summand_count << " of " << K.n() << " ("
          << (rep.summand_count_ok ? "ok" : "FAIL") << ")\n"
          << (rep.pass ? "tilting: PASS" : "tilting: FAIL") << "\n";
    });
    return rep.pass ? 0 : 1;
}

int cmd_property_star(const Common& common, FieldSpec field, std::ostream& out) {
    const KupischSeries K = series_of(common);
    const PropertyStarReport rep = property_star_check(K, field);
    Emitter em(common, "property-star", out);
    em.emit(to_json(rep), [&](std::ostream& o) {
        o << K.str() << ": domdim = " << rep.n << "\n"
          << "tilting = " << rep.tilting.str() << "\n"
          << "endo dim = " << rep.endo_dim << ", endo domdim = " << rep.endo_domdim.str() << "\n"
          << "has_property_star = " << (rep.has_property_star ? "true" : "false") << "\n";
    });
    return 0;
}

int cmd_verify_paper(const Common& common, int m_max, FieldSpec field, std::ostream& out) {
    const PaperVerification V = run_paper_verification(m_max, field);
    Emitter em(common, "verify-paper", out);
    em.input("m_max", m_max);
    em.emit(to_json(V), [&](std::ostream& o) {
        Table t({"id", "check", "result"});
        for (const auto& c : V.checks)
            t.row({c.id, c.name, c.pass ? "pass" : "FAIL  " + c.details});
        t.print(o);
        o << (V.all_pass() ? "all pinned checks pass" : "PINNED CHECK FAILURES") << "\n";
    });
    return V.all_pass() ? 0 : 1;
}

int cmd_sweep(const Common& common, const Bounds& bounds, FieldSpec field, std::ostream& out) {
    const TheoremSweepReport rep = theorem_sweep(bounds.n, bounds.c, field);
    Emitter em(common, "sweep", out);
    em.input("bounds", ojson{{"n", bounds.n}, {"c", bounds.c}});
    em.emit(to_json(rep), [&](std::ostream& o) {
        Table t({"quantity", "count"});
        t.row({"valid series", std::to_string(rep.series_count)});
        t.row({"finite domdim >= 1", std::to_string(rep.finite_domdim_count)});
        t.row({"higher Auslander", std::to_string(rep.higher_auslander_count)});
        t.row({"higher Auslander-Solberg", std::to_string(rep.higher_auslander_solberg_count)});
        t.row({"Morita self-dual", std::to_string(rep.morita_selfdual_count)});
        t.row({"violations", std::to_string(rep.violations.size())});
        t.print(o);
        for (const auto& v : rep.violations)
            o << "VIOLATION " << v.series.str() << ": " << v.description << "\n";
    });
    return rep.violations.empty() ? 0 : 1;
}

int cmd_oracle_diff(const Common& common, std::uint64_t seed, long cases, const Bounds& bounds,
                    FieldSpec field, bool inject_bug, std::ostream& out) {
    const OracleDiffReport rep = oracle_diff(seed, cases, bounds.n, bounds.c, field, inject_bug);
    Emitter em(common, "oracle-diff", out);
    em.input("seed", seed);
    em.input("cases", cases);
    em.emit(to_json(rep), [&](std::ostream& o) {
        o << "cases = " << rep.cases << ", comparisons = " << rep.comparisons
          << ", divergences = " << rep.divergences.size() << "\n";
        for (const auto& d : rep.divergences)
            o << "DIVERGENCE " << d.series.str() << ": " << d.what << "\n";
    });
    return rep.divergences.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact homological invariants of Nakayama and structure-constant algebras"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--field", common.field_text, "scalar field: Q or Fp:<p>");
    app.add_flag("--timing", common.timing, "report elapsed time");

    // global flags may appear after the subcommand name
    auto subcommand = [&](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    auto add_kupisch = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--kupisch", common.kupisch,
                                    "series, e.g. \"linear:3,3,3,2,1\" or \"cyclic:2,3\"");
        if (required) opt->required();
    };
    auto add_modules = [&](CLI::App* cmd) {
        cmd->add_option("--module", common.modules, "interval module \"M(i,k)\" (repeatable)");
    };

    auto* validate = subcommand("validate", "validate a Kupisch series");
    add_kupisch(validate);

    auto* info = subcommand("info", "series summary with all invariants");
    add_kupisch(info);

    auto* resolve = subcommand("resolve", "minimal (co)resolution of interval modules");
    add_kupisch(resolve);
    add_modules(resolve);
    std::string direction = "injective";
    long max_steps = 0;
    resolve->add_option("--direction", direction, "injective or projective")
        ->check(CLI::IsMember({"injective", "projective"}))
        ->capture_default_str();
    resolve->add_option("--max-steps", max_steps, "safety cap override");

    auto* domdim = subcommand("domdim", "dominant dimension of the algebra or modules");
    add_kupisch(domdim);
    add_modules(domdim);

    auto* gldim_cmd = subcommand("gldim", "global dimension");
    add_kupisch(gldim_cmd);

    auto* gorenstein_cmd = subcommand("gorenstein", "Gorenstein data of the algebra");
    add_kupisch(gorenstein_cmd);

    auto* homdim = subcommand("homdim", "dim Hom(M, N) for two interval modules");
    add_kupisch(homdim);
    add_modules(homdim);

    auto* endo = subcommand("endo", "endomorphism algebra of interval modules");
    add_kupisch(endo);
    add_modules(endo);
    long tilt = 0;
    bool with_relations = false;
    int degree_cap = 0;
    endo->add_option("--tilt", tilt, "use the canonical tilting module for this index");
    endo->add_flag("--relations", with_relations, "extract quiver relations");
    endo->add_option("--degree-cap", degree_cap, "relation search degree cap");

    auto* tilting = subcommand("tilting", "check the canonical tilting module");
    add_kupisch(tilting);
    long tilt_index = 0, tilt_m = 0;
    tilting->add_option("--index", tilt_index, "cosyzygy index (default: domdim)");
    tilting->add_option("--m", tilt_m, "tilting bound m (default: the index)");

    auto* pstar = subcommand("property-star", "dominant dimension of the canonical "
                                             "tilting module's endomorphism algebra");
    add_kupisch(pstar);

    auto* verify = subcommand("verify-paper", "run every pinned verification");
    int m_max = 3;
    verify->add_option("--m-max", m_max, "family depth")->capture_default_str();

    auto* sweep = subcommand("sweep", "enumerate series and test the positive theorem");
    std::string bounds_text = "n=6,c=6";
    sweep->add_option("--bounds", bounds_text, "enumeration bounds")->capture_default_str();

    auto* oracle = subcommand("oracle-diff", "cross-check the combinatorial and "
                                              "linear-algebra routes on random series");
    std::uint64_t seed = 20240501;
    long cases = 200;
    std::string oracle_bounds_text = "n=6,c=6";
    bool inject_bug = false;
    oracle->add_option("--seed", seed, "random seed")->capture_default_str();
    oracle->add_option("--cases", cases, "number of random series")->capture_default_str();
    oracle->add_option("--bounds", oracle_bounds_text, "series bounds")->capture_default_str();
    oracle->add_flag("--inject-bug", inject_bug, "corrupt one comparison (harness self-test)")
        ->group("");  // hidden

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        const FieldSpec field = field_of(common);
        if (validate->parsed()) return cmd_validate(common, out);
        if (info->parsed()) return cmd_info(common, out);
        if (resolve->parsed()) return cmd_resolve(common, direction, max_steps, out);
        if (domdim->parsed()) return cmd_domdim(common, out);
        if (gldim_cmd->parsed()) return cmd_gldim(common, out);
        if (gorenstein_cmd->parsed()) return cmd_gorenstein(common, out);
        if (homdim->parsed()) return cmd_homdim(common, out);
        if (endo->parsed()) return cmd_endo(common, tilt, with_relations, degree_cap, out);
        if (tilting->parsed()) return cmd_tilting(common, tilt_index, tilt_m, field, out);
        if (pstar->parsed()) return cmd_property_star(common, field, out);
        if (verify->parsed()) return cmd_verify_paper(common, m_max, field, out);
        if (sweep->parsed()) return cmd_sweep(common, parse_bounds(bounds_text), field, out);
        if (oracle->parsed())
            return cmd_oracle_diff(common, seed, cases, parse_bounds(oracle_bounds_text), field,
                                   inject_bug, out);
        err << "no command\n";
        return 2;
    } catch (const Error& e) {
        err << "error " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace nakhom
