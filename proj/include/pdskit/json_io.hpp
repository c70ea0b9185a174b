#pragma once

#include <string_view>

#include <json.hpp>

#include "pdskit/feasibility.hpp"
#include "pdskit/pds.hpp"
#include "pdskit/search.hpp"

namespace pdskit {

inline constexpr std::string_view kJsonSchema = "pds-kit/1";

nlohmann::json to_json(const PdsParams& params);
nlohmann::json to_json(const CandidateSet& set);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const SearchProblem& problem, const SearchResult& result);

CandidateSet candidate_set_from_json(const nlohmann::json& j);

/// Parses one JSON document; throws std::invalid_argument on malformed input.
CandidateSet candidate_set_from_text(std::string_view text);

}  // namespace pdskit
