#pragma once

#include <string>

#include <json.hpp>

#include "nakhom/endo.hpp"
#include "nakhom/engine.hpp"
#include "nakhom/extnat.hpp"
#include "nakhom/kupisch.hpp"
#include "nakhom/propstar.hpp"

namespace nakhom {

/* JSON forms of the public types. ExtNat serializes to a tagged object so
 * "inf" and ">=b" round-trip unambiguously; scalars are canonical strings. */
using ojson = nlohmann::ordered_json;

ojson to_json(const ExtNat& x);
ojson to_json(const KupischSeries& K);
ojson to_json(const IntervalModule& M);
ojson to_json(const ModuleList& L);
ojson to_json(const ResolutionReport& R);
ojson to_json(const GorensteinReport& G);
ojson to_json(const EndoAlgebra& E);
ojson to_json(const QuiverPresentation& Q);
ojson to_json(const TiltingReport& T);
ojson to_json(const ClassificationFlags& F);
ojson to_json(const PropertyStarReport& P);
ojson to_json(const FamilyVerdict& V);
ojson to_json(const TheoremSweepReport& S);
ojson to_json(const GendoReport& G);
ojson to_json(const CounterexampleA6Report& C);
ojson to_json(const OracleDiffReport& O);
ojson to_json(const PaperVerification& V);

/* Representation JSON: {"dim": m, "action": {"<basis label>": [[...]]}}. */
ojson rep_to_json(const Rep<Rational>& M);
Rep<Rational> rep_from_json(const SCAlgebra& alg, const ojson& j);

}  // namespace nakhom
