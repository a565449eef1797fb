#pragma once

#include <json.hpp>

#include "teichfuchs/charp.hpp"
#include "teichfuchs/families.hpp"
#include "teichfuchs/picardfuchs.hpp"
#include "teichfuchs/seriessol.hpp"
#include "teichfuchs/teich.hpp"

namespace teichfuchs {

using json = nlohmann::json;

json to_json(const QuadNum& x);
QuadNum quadnum_from_json(const json& j);
json to_json(const PadicQuad& x, const PrimeContext& ctx);
json to_json(const PolyQ& p);
json to_json(const RationalFunction& f);
json to_json(const Prototype& p);
json to_json(const CuspNormalForm& nf);
json to_json(const FuchsOp& L);
json to_json(const ReductionReport& r);
json to_json(const ModPoly& f);
json to_json(const SeriesPrefix<QuadNum>& s);

}  // namespace teichfuchs
