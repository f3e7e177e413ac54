#pragma once

#include <json.hpp>

#include "hodgeint/hodge.hpp"
#include "hodgeint/hurwitz.hpp"
#include "hodgeint/laurent.hpp"
#include "hodgeint/numeric.hpp"
#include "hodgeint/partition.hpp"
#include "hodgeint/ppoly.hpp"
#include "hodgeint/ratfun.hpp"
#include "hodgeint/series.hpp"

namespace hodgeint {

using Json = nlohmann::ordered_json;

/// Exact string: "p" or "p/q".
Json json_of(const Rational& x);
Json json_of(const Integer& x);

/// {"re": "...", "im": "..."}.
Json json_of(const GaussianRational& x);

/// {"<exponent>": coefficient, ...} in ascending exponent order.
Json json_of(const LaurentPoly<Rational>& p);
Json json_of(const TauPoly& p);

/// {"valuation": v, "order": n, "coeffs": [c_v, ..., c_n]}.
Json json_of(const Series<GaussianRational>& s);
Json json_of(const TauSeries& s);

/// {"num": ..., "den": ...}.
Json json_of(const RationalFunction& f);
Json json_of(const TauRatFun& f);

/// [parts...].
Json json_of(const Partition& p);

/// {"[2,1]": "1/2", ...} keyed by the partition rendering.
Json json_of(const PPolynomial& p);

/// {"<frequency>": "<amplitude>", ...}.
Json json_of(const ExpSum& e);

/// {"d": d, "basis": [...], "entries": [["0","1"],...]}.
Json json_of(const CJMatrix& m);

}  // namespace hodgeint
