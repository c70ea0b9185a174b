#include "pdskit/json_io.hpp"

#include <stdexcept>
#include <string>

namespace pdskit {

using nlohmann::json;

json to_json(const PdsParams& p) {
    return json{{"v", p.v},       {"k", p.k},          {"lambda", p.lambda},
                {"mu", p.mu},     {"beta", p.beta()},  {"delta", p.delta()}};
}

json to_json(const CandidateSet& set) {
    json members = json::array();
    for (const auto& m : set.members()) members.push_back(format_element(m));
    return json{{"schema", kJsonSchema}, {"group", set.group().spec()}, {"members", members}};
}

json to_json(const VerificationReport& r) {
    json j{{"schema", kJsonSchema},
           {"is_pds", r.is_pds},
           {"is_regular", r.is_regular},
           {"is_trivial", r.is_trivial},
           {"degenerate", r.degenerate},
           {"params", nullptr},
           {"failing_element", nullptr}};
    if (r.params) j["params"] = to_json(*r.params);
    if (r.failing_element) {
        j["failing_element"] = format_element(*r.failing_element);
        j["failing_count"] = r.failing_count;
        j["expected_count"] = r.expected_count;
    }
    return j;
}

json to_json(const Verdict& v) {
    return json{{"schema", kJsonSchema},
                {"v", v.v},
                {"kind", to_string(v.kind)},
                {"rule", v.rule},
                {"detail", v.detail}};
}

json to_json(const SearchProblem& problem, const SearchResult& result) {
    json solutions = json::array();
    for (const auto& s : result.solutions) solutions.push_back(to_json(s));
    return json{{"schema", kJsonSchema},
                {"group", problem.group.spec()},
                {"target", to_json(problem.target)},
                {"mode", problem.mode == SearchMode::orbit ? "orbit" : "brute"},
                {"solutions", solutions},
                {"nodes", result.nodes_explored},
                {"complete", result.complete}};
}

CandidateSet candidate_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("members")) {
        throw std::invalid_argument("candidate set JSON needs 'group' and 'members' fields");
    }
    AbelianGroup g = AbelianGroup::parse(j.at("group").get<std::string>());
    std::vector<Element> members;
    for (const auto& m : j.at("members")) {
        members.push_back(parse_element(m.get<std::string>()));
    }
    return CandidateSet(std::move(g), std::move(members));
}

CandidateSet candidate_set_from_text(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    return candidate_set_from_json(j);
}

}  // namespace pdskit
