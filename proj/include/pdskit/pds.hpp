#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pdskit/group.hpp"

namespace pdskit {

/**
 * The parameter tuple (v, k, lambda, mu) of a partial difference set, with
 * the derived quantities beta = lambda - mu and delta = beta^2 + 4(k - mu).
 */
struct PdsParams {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    std::int64_t beta() const { return lambda - mu; }
    std::int64_t delta() const { return beta() * beta() + 4 * (k - mu); }

    /// k(k-1) = lambda*k + mu*(v-1-k), the counting identity of a regular PDS.
    bool counting_identity_holds() const {
        return k * (k - 1) == lambda * k + mu * (v - 1 - k);
    }

    bool operator==(const PdsParams& o) const {
        return v == o.v && k == o.k && lambda == o.lambda && mu == o.mu;
    }
    bool operator!=(const PdsParams& o) const { return !(*this == o); }
};

/// (v, (v-1)/2, (v-5)/4, (v-1)/4); requires v ≡ 1 (mod 4). The result always
/// has beta = -1 and delta = v.
PdsParams paley_params(std::int64_t v);

/// Whether params equal paley_params(params.v) (false when v ≢ 1 mod 4).
bool is_paley_shape(const PdsParams& params);

/// Parameters of the complementary connection set: (v, v-1-k, v-2-2k+mu, v-2k+lambda).
PdsParams complement_params(const PdsParams& params);

/**
 * A finite set of group elements proposed as a PDS. Members are stored
 * sorted in lexicographic coordinate order with no duplicates.
 */
class CandidateSet {
  public:
    CandidateSet(AbelianGroup group, std::vector<Element> members);

    const AbelianGroup& group() const { return group_; }
    const std::vector<Element>& members() const { return members_; }
    std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
    bool contains(const Element& g) const;

    /// Membership indicator indexed by element rank.
    std::vector<bool> membership() const;

    bool operator==(const CandidateSet& o) const {
        return group_ == o.group_ && members_ == o.members_;
    }

  private:
    AbelianGroup group_;
    std::vector<Element> members_;
};

/// count[index_of(x)] = #{(g,h) : g,h in D, g != h, g - h = x}. The identity
/// slot is always 0 and the counts sum to k(k-1).
std::vector<std::int64_t> difference_counts(const CandidateSet& d);

struct VerificationReport {
    bool is_pds = false;
    std::optional<PdsParams> params;  // present iff is_pds
    bool is_regular = false;          // D = -D and identity not in D
    bool is_trivial = false;          // D u {e} or G \ D is a subgroup
    bool degenerate = false;          // no internal or no external differences
    std::optional<Element> failing_element;  // witness when not a PDS
    std::int64_t failing_count = 0;          // observed count at the witness
    std::int64_t expected_count = 0;         // the constant it should have matched
};

/// Exact integer verification: counts must be constant on nonidentity members
/// and constant on nonidentity non-members.
VerificationReport verify_pds(const CandidateSet& d);

/**
 * Strongly-regular check of Cay(G, D) by direct common-neighbour counting
 * over all vertex pairs. Requires D regular. Deliberately does not share
 * code with difference counting so the two routes cross-check each other.
 */
struct SrgCheck {
    enum class Status { srg, not_srg, degenerate };
    Status status = Status::not_srg;
    std::optional<PdsParams> params;  // present iff status == srg
    std::optional<std::pair<Element, Element>> witness;  // deviating pair
    std::int64_t witness_common = 0;
    std::int64_t expected_common = 0;
};

SrgCheck cayley_srg_params(const CandidateSet& d);

}  // namespace pdskit
