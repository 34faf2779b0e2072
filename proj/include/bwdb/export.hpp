// Text renderings (JSON, DOT) of trees and reports. JSON keys are stable.

#pragma once

#include <string>

#include "bwdb/combmaps.hpp"
#include "bwdb/cyclejoin.hpp"
#include "bwdb/msr.hpp"
#include "bwdb/oracle.hpp"

namespace bwdb {

std::string tree_to_json(const CycleTree& tree, int indent = 2);
std::string tree_to_dot(const CycleTree& tree);

std::string report_to_json(const VerifyReport& report, int indent = 2);
std::string object_to_json(const CombObject& object, int indent = -1);
std::string conjecture_to_json(const ParamSet& p, const ConjectureReport& report, int indent = -1);

}  // namespace bwdb
