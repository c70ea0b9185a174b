#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "pdskit/gf.hpp"
#include "pdskit/pds.hpp"

using namespace pdskit;

namespace {

CandidateSet z13_paley() {
    return CandidateSet(AbelianGroup::parse("Z13"), {{1}, {3}, {4}, {9}, {10}, {12}});
}

// Difference counting the long way, straight modular arithmetic on one
// cyclic factor; the library path goes through index_of/subtract instead.
std::vector<std::int64_t> cyclic_counts_oracle(std::int64_t v,
                                               const std::vector<std::int64_t>& members) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(v), 0);
    for (const std::int64_t a : members) {
        for (const std::int64_t b : members) {
            if (a == b) continue;
            ++counts[static_cast<std::size_t>(((a - b) % v + v) % v)];
        }
    }
    return counts;
}

}  // namespace

TEST_CASE("paley_params") {
    CHECK(paley_params(9) == PdsParams{9, 4, 1, 2});
    CHECK(paley_params(225) == PdsParams{225, 112, 55, 56});
    CHECK(paley_params(45) == PdsParams{45, 22, 10, 11});
    SUBCASE("beta -1 and delta v always") {
        for (std::int64_t v = 5; v <= 1001; v += 4) {
            const PdsParams p = paley_params(v);
            CHECK(p.beta() == -1);
            CHECK(p.delta() == v);
            CHECK(p.counting_identity_holds());
        }
    }
    SUBCASE("rejects v not 1 mod 4") {
        CHECK_THROWS_AS(paley_params(243), std::invalid_argument);
        CHECK_THROWS_AS(paley_params(7), std::invalid_argument);
        CHECK_THROWS_AS(paley_params(12), std::invalid_argument);
        CHECK_THROWS_AS(paley_params(1), std::invalid_argument);
    }
}

TEST_CASE("complement_params") {
    // Complementing twice is the identity, and beta maps to -2 - beta.
    const PdsParams p{13, 6, 2, 3};
    const PdsParams c = complement_params(p);
    CHECK(c == PdsParams{13, 6, 2, 3});  // Paley parameters are self-complementary
    const PdsParams q{243, 22, 1, 2};
    const PdsParams cq = complement_params(q);
    CHECK(cq == PdsParams{243, 220, 199, 200});
    CHECK(complement_params(cq) == q);
    CHECK(cq.beta() == -2 - q.beta());
}

TEST_CASE("candidate sets validate their members") {
    const AbelianGroup g = AbelianGroup::parse("Z13");
    CHECK_THROWS_AS(CandidateSet(g, {{13}}), std::invalid_argument);
    CHECK_THROWS_AS(CandidateSet(g, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(CandidateSet(g, {{1}, {1}}), std::invalid_argument);
    const CandidateSet d(g, {{3}, {1}});
    CHECK(d.members() == std::vector<Element>{{1}, {3}});  // stored sorted
}

TEST_CASE("difference_counts") {
    const AbelianGroup g = AbelianGroup::parse("Z13");
    SUBCASE("empty and singleton sets have no differences") {
        CHECK(difference_counts(CandidateSet(g, {})) ==
              std::vector<std::int64_t>(13, 0));
        CHECK(difference_counts(CandidateSet(g, {{5}})) ==
              std::vector<std::int64_t>(13, 0));
    }
    SUBCASE("Paley set in Z13: 2 on members, 3 elsewhere") {
        const CandidateSet d = z13_paley();
        const auto counts = difference_counts(d);
        CHECK(counts == cyclic_counts_oracle(13, {1, 3, 4, 9, 10, 12}));
        std::int64_t total = 0;
        for (std::int64_t x = 1; x < 13; ++x) {
            CHECK(counts[static_cast<std::size_t>(x)] == (d.contains({x}) ? 2 : 3));
            total += counts[static_cast<std::size_t>(x)];
        }
        CHECK(counts[0] == 0);
        CHECK(total == 6 * 5);  // k(k-1)
    }
}

TEST_CASE("verify_pds") {
    SUBCASE("Paley set in Z13") {
        const auto rep = verify_pds(z13_paley());
        REQUIRE(rep.is_pds);
        CHECK(*rep.params == PdsParams{13, 6, 2, 3});
        CHECK(rep.is_regular);
        CHECK_FALSE(rep.is_trivial);
        CHECK_FALSE(rep.degenerate);
        CHECK_FALSE(rep.failing_element.has_value());
    }
    SUBCASE("subgroup minus identity in Z9 is a trivial PDS") {
        const CandidateSet d(AbelianGroup::parse("Z9"), {{3}, {6}});
        const auto rep = verify_pds(d);
        REQUIRE(rep.is_pds);
        CHECK(rep.is_trivial);
        CHECK(rep.is_regular);
        CHECK(*rep.params == PdsParams{9, 2, 1, 0});
    }
    SUBCASE("identity membership breaks regularity but not the PDS property") {
        CandidateSet d(AbelianGroup::parse("Z13"), {{0}, {1}, {3}, {4}, {9}, {10}, {12}});
        const auto rep = verify_pds(d);
        CHECK(rep.is_pds);
        CHECK_FALSE(rep.is_regular);
        CHECK(*rep.params == PdsParams{13, 7, 4, 3});
    }
    SUBCASE("toggling the identity preserves the verdict") {
        for (std::int64_t q : {5, 9, 13, 17, 25}) {
            const CandidateSet d = paley_pds(q);
            auto with_e = d.members();
            with_e.push_back(d.group().identity());
            const CandidateSet de(d.group(), with_e);
            CHECK(verify_pds(d).is_pds == verify_pds(de).is_pds);
        }
        // And for a non-PDS: toggling e cannot rescue it.
        const AbelianGroup g = AbelianGroup::parse("Z13");
        const CandidateSet bad(g, {{1}, {2}, {3}, {11}, {12}});
        const CandidateSet bad_e(g, {{0}, {1}, {2}, {3}, {11}, {12}});
        CHECK_FALSE(verify_pds(bad).is_pds);
        CHECK_FALSE(verify_pds(bad_e).is_pds);
    }
    SUBCASE("failure carries a confirmed witness") {
        const AbelianGroup g = AbelianGroup::parse("Z13");
        const CandidateSet d(g, {{1}, {2}, {3}, {11}, {12}});
        const auto rep = verify_pds(d);
        REQUIRE_FALSE(rep.is_pds);
        REQUIRE(rep.failing_element.has_value());
        const auto counts = difference_counts(d);
        const std::int64_t at_witness =
            counts[static_cast<std::size_t>(g.index_of(*rep.failing_element))];
        CHECK(at_witness == rep.failing_count);
        CHECK(rep.failing_count != rep.expected_count);
    }
    SUBCASE("degenerate sets") {
        const AbelianGroup g = AbelianGroup::parse("Z13");
        const auto empty = verify_pds(CandidateSet(g, {}));
        CHECK(empty.is_pds);
        CHECK(empty.degenerate);
        CHECK(*empty.params == PdsParams{13, 0, 0, 0});
        const auto full = verify_pds(CandidateSet(AbelianGroup::parse("Z5"),
                                                  {{1}, {2}, {3}, {4}}));
        CHECK(full.is_pds);
        CHECK(full.degenerate);  // no nonidentity non-members
        CHECK(full.is_trivial);  // G \ D = {e}
    }
}

TEST_CASE("cayley_srg_params") {
    SUBCASE("Paley set in Z13 gives SRG(13, 6, 2, 3)") {
        const auto check = cayley_srg_params(z13_paley());
        REQUIRE(check.status == SrgCheck::Status::srg);
        CHECK(*check.params == PdsParams{13, 6, 2, 3});
    }
    SUBCASE("two coordinate lines in Z3xZ3 give SRG(9, 4, 1, 2)") {
        const CandidateSet d(AbelianGroup::parse("Z3^2"),
                             {{1, 0}, {2, 0}, {0, 1}, {0, 2}});
        const auto check = cayley_srg_params(d);
        REQUIRE(check.status == SrgCheck::Status::srg);
        CHECK(*check.params == PdsParams{9, 4, 1, 2});
        CHECK(verify_pds(d).params == check.params);
    }
    SUBCASE("complete graph is degenerate") {
        const CandidateSet d(AbelianGroup::parse("Z5"), {{1}, {2}, {3}, {4}});
        CHECK(cayley_srg_params(d).status == SrgCheck::Status::degenerate);
    }
    SUBCASE("empty connection set is degenerate") {
        const CandidateSet d(AbelianGroup::parse("Z5"), {});
        CHECK(cayley_srg_params(d).status == SrgCheck::Status::degenerate);
    }
    SUBCASE("non-SRG reports a witness pair") {
        const CandidateSet d(AbelianGroup::parse("Z13"), {{1}, {5}, {8}, {12}});
        const auto check = cayley_srg_params(d);
        REQUIRE(check.status == SrgCheck::Status::not_srg);
        CHECK(check.witness.has_value());
        CHECK(check.witness_common != check.expected_common);
    }
    SUBCASE("requires a regular connection set") {
        const AbelianGroup g = AbelianGroup::parse("Z13");
        CHECK_THROWS_AS(cayley_srg_params(CandidateSet(g, {{0}, {1}, {12}})),
                        std::invalid_argument);
        CHECK_THROWS_AS(cayley_srg_params(CandidateSet(g, {{1}, {2}, {12}})),
                        std::invalid_argument);
    }
    SUBCASE("agrees with verify_pds on regular PDSs") {
        for (std::int64_t q : {5, 9, 13, 17, 25}) {
            const CandidateSet d = paley_pds(q);
            const auto rep = verify_pds(d);
            const auto check = cayley_srg_params(d);
            REQUIRE(rep.is_pds);
            REQUIRE(check.status == SrgCheck::Status::srg);
            CHECK(*rep.params == *check.params);
        }
    }
}

TEST_CASE("character sums of regular PDSs hit (beta ± sqrt(delta)) / 2") {
    for (std::int64_t q : {5, 9, 13, 17, 25}) {
        const CandidateSet d = paley_pds(q);
        const auto rep = verify_pds(d);
        REQUIRE(rep.is_pds);
        const double root = std::sqrt(static_cast<double>(rep.params->delta()));
        const double t_plus = (rep.params->beta() + root) / 2.0;
        const double t_minus = (rep.params->beta() - root) / 2.0;
        const AbelianGroup& g = d.group();
        for (std::int64_t c = 1; c < g.order(); ++c) {
            const Element chi = g.element_at(c);
            std::complex<double> sum{0.0, 0.0};
            for (const auto& m : d.members()) sum += g.character_value(chi, m);
            CHECK(std::abs(sum.imag()) < 1e-6);
            const bool near = std::abs(sum.real() - t_plus) < 1e-6 ||
                              std::abs(sum.real() - t_minus) < 1e-6;
            CHECK(near);
        }
    }
}
