#pragma once

// JSON encodings of the library's values and reports.

#include <json.hpp>

#include "singk/assembly.hpp"
#include "singk/characters.hpp"
#include "singk/error.hpp"
#include "singk/geomtables.hpp"
#include "singk/intlat.hpp"
#include "singk/localsing.hpp"

namespace singk::json {

using Json = nlohmann::json;

/// Number when it fits in int64, decimal string otherwise.
Json big_to_json(const BigInt& x);
BigInt big_from_json(const Json& j);

/// {"N": int, "coeffs": [["num", "den"], ...]}. Input also accepts plain
/// numbers and "p/q" strings as coefficients and any number of them.
Json to_json(const CycNum& x);
CycNum cycnum_from_json(const Json& j);

Json to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& j);

/// {"n": int, "conductor": int, "generators": [matrix, ...]}
Json group_to_json(const std::vector<CycMatrix>& generators);
std::vector<CycMatrix> generators_from_json(const Json& j);

Json to_json(const AbelianGroupStructure& a);
AbelianGroupStructure abelian_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const Json& j);

Json to_json(const CheckRecord& c);
CheckRecord check_from_json(const Json& j);

Json to_json(const SingInvariants& s);
SingInvariants sing_from_json(const Json& j);

Json to_json(const FilteredAbelianGroup& f);
FilteredAbelianGroup filtered_from_json(const Json& j);

Json to_json(const ADECurveRecord& r);
ADECurveRecord curve_record_from_json(const Json& j);

Json to_json(const GlobalReport& r);
GlobalReport global_report_from_json(const Json& j);

/// Classes (size, representative order) and irreducibles (degree, values).
Json to_json(const CharacterTable& t);

/// {"error": {"code": "...", "message": "..."}}
Json error_to_json(ErrorCode code, const std::string& message);

}  // namespace singk::json
