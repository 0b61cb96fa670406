#pragma once

#include "json.hpp"

#include "autfp/functor.hpp"

namespace autfp {

/// Matrix exchange form: {"rows": r, "cols": c, "entries": [...]} row-major,
/// entries as decimal strings.
nlohmann::ordered_json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// Tabulated functor schema: variance, name, objects (shape, generator
/// count, relation matrix) and morphisms (source/target/slot map/action).
nlohmann::ordered_json functor_to_json(const TabulatedFunctor& t);
TabulatedFunctor functor_from_json(const nlohmann::json& j);

}  // namespace autfp
