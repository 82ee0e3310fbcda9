#pragma once

#include <nlohmann/json.hpp>

#include "metakzb/metab.hpp"
#include "metakzb/ncseries.hpp"
#include "metakzb/symring.hpp"

namespace metakzb {

using Json = nlohmann::json;

Json sym_to_json(const SymCoeff& c);
SymCoeff sym_from_json(const Json& j);

Json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);

// internal = true tags and stores the depth-one part in the u = U/(2*pi*i)
// variable; false converts to U on output and back on input.
Json metab_to_json(const MetabElem& e, bool internal = true);
MetabElem metab_from_json(const Json& j);

Json series_to_json(const NcSeries& s);

}  // namespace metakzb
