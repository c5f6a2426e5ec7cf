#pragma once

#include <vector>

#include "json.hpp"
#include "symdist/cells.hpp"
#include "symdist/oracle.hpp"
#include "symdist/verify.hpp"
#include "symdist/xi.hpp"

namespace symdist {

using Json = nlohmann::ordered_json;

/// Integers become JSON numbers when they fit in 64 bits, strings otherwise;
/// non-integers become "a/b".
Json to_json(const Integer& v);
Json to_json(const Rational& v);

/// {"top": [...], "bottom": [...]}.
Json symbol_json(const Symbol& s);

/// {"<class>": value, ...} in canonical class order.
Json class_function_json(const ClassFunction& f);

/// {"n", "classes", "rows": {irr: {class: value}}}.
Json chartable_json(int n);

/// {"n", "routes", "character", "decomposition", "route_agreement"}.
Json xi_json(const std::vector<XiResult>& results);

/// {"Z", "d", "terms": [{"sign", "symbol"}], "constituents"}; symbols as text.
Json cell_json(const CellReport& report);

/// {"rank", "cells", "union", "count", "cuspidal_present"}.
Json distinguished_json(const DistinguishedReport& report);

Json claims_json(const std::vector<oracle::Claim>& claims);
Json verification_json(const VerificationReport& report);

}  // namespace symdist
