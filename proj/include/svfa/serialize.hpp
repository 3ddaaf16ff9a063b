#pragma once

#include <json.hpp>

#include "svfa/sequence.hpp"
#include "svfa/svf.hpp"
#include "svfa/theorems.hpp"

namespace svfa {

using Json = nlohmann::ordered_json;

/// Reals are numbers; infinities travel as the strings "-inf" / "+inf".
Json real_to_json(double v);
double real_from_json(const Json& j);

/// [lo, lo_closed, hi, hi_closed]
Json to_json(const Interval& piece);
Json to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const Json& j);

/// Member ids in universe order.
Json to_json(const FiniteSet& s);
FiniteSet finite_set_from_json(const UniversePtr& universe, const Json& j);

/// {"universe": [...], "domain": ..., "trajectories": [...]}
Json to_json(const Svf& f);
Svf svf_from_json(const Json& j);

/// {"universe": [...], "prefix": [[ids]...], "cycle": [[ids]...]}
Json to_json(const SetSequence& s);
SetSequence sequence_from_json(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const SuiteReport& r);

}  // namespace svfa
