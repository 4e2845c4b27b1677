#pragma once

#include <json.hpp>

#include "fermatst/empirics.hpp"
#include "fermatst/gross_koblitz.hpp"
#include "fermatst/numerics.hpp"
#include "fermatst/sato_tate.hpp"

namespace fermatst {

using json = nlohmann::ordered_json;

json to_json(const Character& c);
json to_json(const GammaWord& w);
json to_json(const ExponentVector& e);
json to_json(const EquationLattice& L);
json to_json(const mpq_class& q);              // ["num", "den"]
json to_json(const CycloNumber& x);
json to_json(const PadicInt& x);
json to_json(const PeriodValue& pv, size_t digits = 40);
json to_json(const ActionBlock& blk);
json to_json(const RhoMatrix& rho);
json to_json(const GKReport& rep);
json to_json(const IdentityComponent& ic);
json to_json(const ComponentDescription& cd);
json to_json(const STDescription& st);
json to_json(const CurveCount& c);
json to_json(const EigenvalueData& e);
json to_json(const TwistReport& t);

}  // namespace fermatst
