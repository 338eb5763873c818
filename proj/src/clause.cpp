#include "ecq/clause.hpp"

#include "ecq/errors.hpp"

namespace ecq {

std::string clause_status_str(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Holds: return "Holds";
    case ClauseStatus::Fails: return "Fails";
    case ClauseStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ClauseVerdict ClauseVerdict::holds(std::string id, nlohmann::json evidence) {
  if (evidence.empty()) throw Error(errc::internal, "Holds verdict needs evidence: " + id);
  return {std::move(id), ClauseStatus::Holds, std::move(evidence)};
}

ClauseVerdict ClauseVerdict::fails(std::string id, nlohmann::json evidence) {
  if (evidence.empty()) throw Error(errc::internal, "Fails verdict needs evidence: " + id);
  return {std::move(id), ClauseStatus::Fails, std::move(evidence)};
}

ClauseVerdict ClauseVerdict::inconclusive(std::string id, std::string blocked_by) {
  return {std::move(id), ClauseStatus::Inconclusive, {{"blocked_by", std::move(blocked_by)}}};
}

}  // namespace ecq
