#pragma once

#include "ruled/lattice.hpp"

#include <json.hpp>

namespace ruled {

using Json = nlohmann::ordered_json;

// Integers that fit in int64 are emitted as JSON numbers, larger ones as
// decimal strings.  Readers accept both; floats are rejected.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& v);  // "p/q" string unless integral
Rat rat_from_json(const Json& j);

Json to_json(const ManifoldModel& m);
ManifoldModel model_from_json(const Json& j);

Json to_json(const HomologyClass& c);
HomologyClass class_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

} // namespace ruled
