#pragma once

#include <json.hpp>

#include "qrot/cumulants.hpp"
#include "qrot/invariance.hpp"
#include "qrot/weingarten.hpp"

namespace qrot {

// Key order is fixed so CLI output is byte-deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const CumulantTable& table);
Json to_json(const WeingartenTable& table);
Json to_json(const InvarianceReport& report);
Json to_json(const BoundScan& scan);
Json to_json(const CounterexampleReport& report);

}  // namespace qrot
