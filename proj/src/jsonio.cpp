#include "nakhom/jsonio.hpp"

#include "nakhom/errors.hpp"

namespace nakhom {

ojson to_json(const ExtNat& x) {
    switch (x.kind()) {
        case ExtNat::Kind::Finite: return ojson{{"kind", "finite"}, {"value", x.value()}};
        case ExtNat::Kind::Infinity: return ojson{{"kind", "infinity"}};
        default: return ojson{{"kind", "at_least"}, {"bound", x.bound()}};
    }
}

ojson to_json(const KupischSeries& K) {
    return ojson{{"orientation", orientation_str(K.orientation())},
                 {"n", K.n()},
                 {"c", K.c()},
                 {"d", K.d()},
                 {"dim", K.dim()},
                 {"text", K.str()}};
}

ojson to_json(const IntervalModule& M) { return ojson(M.str()); }

ojson to_json(const ModuleList& L) {
    ojson a = ojson::array();
    for (const auto& m : L.entries) a.push_back(m.str());
    return a;
}

ojson to_json(const ResolutionReport& R) {
    ojson steps = ojson::array();
    for (const auto& s : R.steps)
        steps.push_back(ojson{{"term", to_json(s.term)}, {"next", to_json(s.next)}});
    return ojson{{"direction", R.direction == Direction::Injective ? "injective" : "projective"},
                 {"steps", std::move(steps)},
                 {"length", to_json(R.length)},
                 {"dominant_prefix", to_json(R.dominant_prefix)},
                 {"cycle_detected", R.cycle_detected}};
}

ojson to_json(const GorensteinReport& G) {
    ojson inj = ojson::array(), proj = ojson::array();
    for (const auto& x : G.injdim_projectives) inj.push_back(to_json(x));
    for (const auto& x : G.projdim_injectives) proj.push_back(to_json(x));
    return ojson{{"injdim_projectives", std::move(inj)},
                 {"projdim_injectives", std::move(proj)},
                 {"gorenstein_dimension", to_json(G.gdim)},
                 {"asymmetry", G.asymmetry}};
}

ojson to_json(const EndoAlgebra& E) {
    ojson j = ojson::parse(E.algebra->to_json_string());
    ojson summands = ojson::array();
    for (const auto& m : E.summands.entries) summands.push_back(m.str());
    j["summands"] = std::move(summands);
    ojson labels = ojson::array();
    for (const auto& h : E.labels) labels.push_back(ojson::array({h.src, h.tgt, h.shift}));
    j["labels"] = std::move(labels);
    return j;
}

ojson to_json(const QuiverPresentation& Q) {
    ojson arrows = ojson::array();
    for (const auto& a : Q.arrows) arrows.push_back(ojson::array({a[0], a[1]}));
    ojson j{{"vertices", Q.vertex_labels},
            {"arrows", std::move(arrows)},
            {"arrow_count", Q.arrow_count},
            {"cartan", Q.cartan}};
    if (Q.has_relations) {
        ojson rels = ojson::array();
        for (const auto& r : Q.relations) {
            ojson terms = ojson::array();
            for (const auto& [coef, path] : r.terms)
                terms.push_back(ojson{{"coeff", coef.str()}, {"arrows", path}});
            rels.push_back(std::move(terms));
        }
        j["relations"] = std::move(rels);
        j["quotient_dim"] = Q.quotient_dim;
        j["certificate_ok"] = Q.certificate_ok;
    }
    return j;
}

ojson to_json(const TiltingReport& T) {
    return ojson{{"projective_dimension", to_json(T.projective_dimension)},
                 {"projdim_ok", T.projdim_ok},
                 {"ext_dims", T.ext_dims},
                 {"ext_vanishing_ok", T.ext_vanishing_ok},
                 {"summand_count", T.summand_count},
                 {"summand_count_ok", T.summand_count_ok},
                 {"pass", T.pass}};
}

ojson to_json(const ClassificationFlags& F) {
    return ojson{{"higher_auslander", F.higher_auslander},
                 {"higher_auslander_solberg", F.higher_auslander_solberg},
                 {"morita_selfdual", F.morita_selfdual}};
}

ojson to_json(const PropertyStarReport& P) {
    return ojson{{"algebra", P.algebra.str()},
                 {"domdim", P.n},
                 {"tilting", to_json(P.tilting)},
                 {"endo_dim", P.endo_dim},
                 {"endo_domdim", to_json(P.endo_domdim)},
                 {"has_property_star", P.has_property_star},
                 {"classification", to_json(P.classification)}};
}

ojson to_json(const FamilyVerdict& V) {
    ojson rows = ojson::array();
    for (const auto& r : V.rows) {
        ojson row{{"name", r.name},
                  {"expected", r.expected},
                  {"computed", r.computed},
                  {"match", r.match}};
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
    }
    return ojson{{"m", V.m}, {"rows", std::move(rows)}, {"all_match", V.all_match()}};
}

ojson to_json(const TheoremSweepReport& S) {
    ojson viols = ojson::array();
    for (const auto& v : S.violations)
        viols.push_back(ojson{{"series", v.series.str()}, {"description", v.description}});
    return ojson{{"max_n", S.max_n},
                 {"max_c", S.max_c},
                 {"series_count", S.series_count},
                 {"finite_domdim_count", S.finite_domdim_count},
                 {"higher_auslander_count", S.higher_auslander_count},
                 {"higher_auslander_solberg_count", S.higher_auslander_solberg_count},
                 {"morita_selfdual_count", S.morita_selfdual_count},
                 {"violations", std::move(viols)}};
}

ojson to_json(const GendoReport& G) {
    ojson endos = ojson::array();
    for (const auto& e : G.endos)
        endos.push_back(ojson{{"i", e.i},
                              {"dim", e.dim},
                              {"domdim", to_json(e.domdim)},
                              {"gorenstein_dimension", to_json(e.gdim)},
                              {"gorenstein_conclusive", e.gorenstein_conclusive},
                              {"domdim_ok", e.domdim_ok}});
    return ojson{{"d", G.d},
                 {"domdim", to_json(G.domdim)},
                 {"gorenstein_dimension", to_json(G.gdim)},
                 {"gldim", to_json(G.gldim)},
                 {"base_ok", G.base_ok},
                 {"endos", std::move(endos)},
                 {"b1_matches_base", G.b1_matches_base},
                 {"pass", G.pass}};
}

ojson to_json(const CounterexampleA6Report& C) {
    return ojson{{"base_domdim", to_json(C.base_domdim)},
                 {"base_gldim", to_json(C.base_gldim)},
                 {"endo_dim", C.endo_dim},
                 {"endo_domdim", to_json(C.endo_domdim)},
                 {"endo_gldim", to_json(C.endo_gldim)},
                 {"pass", C.pass}};
}

ojson to_json(const OracleDiffReport& O) {
    ojson divs = ojson::array();
    for (const auto& d : O.divergences)
        divs.push_back(ojson{{"series", d.series.str()}, {"what", d.what}});
    return ojson{{"seed", O.seed},
                 {"cases", O.cases},
                 {"comparisons", O.comparisons},
                 {"divergences", std::move(divs)},
                 {"bound_contradictions", O.bound_contradictions}};
}

ojson to_json(const PaperVerification& V) {
    ojson checks = ojson::array();
    for (const auto& c : V.checks)
        checks.push_back(ojson{{"id", c.id},
                               {"name", c.name},
                               {"pass", c.pass},
                               {"details", c.details}});
    return ojson{{"checks", std::move(checks)}, {"all_pass", V.all_pass()}};
}

ojson rep_to_json(const Rep<Rational>& M) {
    ojson action = ojson::object();
    for (int b = 0; b < M.alg->dim(); ++b) {
        ojson rows = ojson::array();
        for (int r = 0; r < M.dim; ++r) {
            ojson row = ojson::array();
            for (int c = 0; c < M.dim; ++c) row.push_back(M.action[b].at(r, c).str());
            rows.push_back(std::move(row));
        }
        action[M.alg->basis_labels()[b]] = std::move(rows);
    }
    return ojson{{"dim", M.dim}, {"action", std::move(action)}};
}

Rep<Rational> rep_from_json(const SCAlgebra& alg, const ojson& j) {
    Rep<Rational> M;
    M.alg = &alg;
    M.dim = j.at("dim").get<int>();
    M.action.assign(alg.dim(), Matrix<Rational>(M.dim, M.dim));
    const auto& action = j.at("action");
    for (int b = 0; b < alg.dim(); ++b) {
        const auto it = action.find(alg.basis_labels()[b]);
        if (it == action.end()) continue;
        for (int r = 0; r < M.dim; ++r)
            for (int c = 0; c < M.dim; ++c) {
                const auto& cell = (*it)[r][c];
                M.action[b].at(r, c) = cell.is_string()
                                           ? Rational::parse(cell.get<std::string>())
                                           : Rational(cell.get<long>());
            }
    }
    return M;
}

}  // namespace nakhom
