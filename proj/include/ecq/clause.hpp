#pragma once

// Three-valued clause verdicts shared by the hypothesis gates and the
// cohomology ledger. A Holds/Fails verdict must carry evidence; an
// Inconclusive verdict must name what blocked it.

#include <string>

#include "json.hpp"

namespace ecq {

enum class ClauseStatus { Holds, Fails, Inconclusive };

std::string clause_status_str(ClauseStatus s);

struct ClauseVerdict {
  std::string clause_id;
  ClauseStatus status = ClauseStatus::Inconclusive;
  nlohmann::json evidence;

  static ClauseVerdict holds(std::string id, nlohmann::json evidence);
  static ClauseVerdict fails(std::string id, nlohmann::json evidence);
  static ClauseVerdict inconclusive(std::string id, std::string blocked_by);
};

}  // namespace ecq
