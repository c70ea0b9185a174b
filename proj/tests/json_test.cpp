#include <doctest.h>

#include <string>

#include "pdskit/gf.hpp"
#include "pdskit/json_io.hpp"

using namespace pdskit;
using nlohmann::json;

TEST_CASE("candidate set JSON round trip") {
    const CandidateSet d = paley_pds(9);
    const json j = to_json(d);
    CHECK(j.at("schema") == kJsonSchema);
    CHECK(j.at("group") == "Z3^2");
    const CandidateSet back = candidate_set_from_json(j);
    CHECK(back == d);
    // Serialized text parses too.
    CHECK(candidate_set_from_text(j.dump()) == d);
}

TEST_CASE("candidate set JSON rejects malformed input") {
    CHECK_THROWS_AS(candidate_set_from_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(candidate_set_from_text("{}"), std::invalid_argument);
    CHECK_THROWS_AS(candidate_set_from_text(R"js({"group":"Z13","members":["(13)"]})js"),
                    std::invalid_argument);
    CHECK_THROWS_AS(candidate_set_from_text(R"js({"group":"Z13","members":["(1)","(1)"]})js"),
                    std::invalid_argument);
    CHECK_THROWS_AS(candidate_set_from_text(R"js({"group":"Z13","members":["1"]})js"),
                    std::invalid_argument);
}

TEST_CASE("verification report JSON carries all fields") {
    const auto rep = verify_pds(paley_pds(13));
    const json j = to_json(rep);
    CHECK(j.at("schema") == kJsonSchema);
    CHECK(j.at("is_pds") == true);
    CHECK(j.at("is_regular") == true);
    CHECK(j.at("is_trivial") == false);
    CHECK(j.at("params").at("v") == 13);
    CHECK(j.at("params").at("beta") == -1);
    CHECK(j.at("failing_element").is_null());

    const CandidateSet bad(AbelianGroup::parse("Z13"), {{1}, {2}, {3}, {11}, {12}});
    const json jb = to_json(verify_pds(bad));
    CHECK(jb.at("is_pds") == false);
    CHECK(jb.at("failing_element").is_string());
    CHECK(jb.contains("failing_count"));
}

TEST_CASE("verdict JSON") {
    const json j = to_json(sieve(225));
    CHECK(j.at("schema") == kJsonSchema);
    CHECK(j.at("v") == 225);
    CHECK(j.at("kind") == "Infeasible");
    CHECK(j.at("rule") == "R2");
    CHECK(j.at("detail").get<std::string>().find("5 ≡ 1 (mod 4)") != std::string::npos);
}
