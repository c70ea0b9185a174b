#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdskit/pds.hpp"

namespace pdskit {

enum class SearchMode { orbit, brute };

struct SearchProblem {
    AbelianGroup group;
    PdsParams target;
    SearchMode mode = SearchMode::orbit;
    std::int64_t limit = 0;  // max solutions to report; 0 = all
    /// Orbit mode only: prune a partial union when no completion can reach a
    /// character sum in {(beta ± sqrt(delta))/2}. Never the final arbiter;
    /// every candidate is still confirmed by exact verification.
    bool character_pruning = true;
    /// Brute mode refuses groups above this order.
    std::int64_t brute_max_order = 33;
};

struct SearchResult {
    std::vector<CandidateSet> solutions;
    std::uint64_t nodes_explored = 0;
    bool complete = true;  // false when the limit truncated the enumeration
};

/**
 * Exhaustive search for regular PDSs with the target parameters.
 *
 * Orbit mode (requires square delta): candidates are unions of power classes,
 * enumerated in class-index order. Brute mode: candidates are unions of
 * {g, -g} pairs, so only symmetric identity-free sets are generated. Both
 * modes confirm every candidate with verify_pds; solution order and node
 * counts are deterministic.
 */
SearchResult search(const SearchProblem& problem);

/// {n + x*h : 1 <= x < o(h), gcd(x, p) = 1} for o(h) = p^r. n must lie in
/// the Hall subgroup's coordinates and h (not the identity) in the
/// complementary ones. Size is totient(o(h)).
std::vector<Element> mixed_orbit(const AbelianGroup& g, const HallSubgroup& n_sub,
                                 const Element& n, const Element& h);

struct ClosureCheck {
    bool closed = false;
    std::optional<Element> witness_g;   // g in D with s*g not in D
    std::int64_t witness_s = 0;
};

/// Whether a verified regular PDS with square delta is a union of power
/// classes. Throws when D is not a regular PDS or delta is not a square
/// (the multiplier closure property does not apply).
ClosureCheck multiplier_closure_check(const CandidateSet& d);

struct MixedOrbitViolation {
    std::int64_t prime = 0;  // the complementary prime-power part
    Element n;
    Element h;
    Element missing;  // an orbit member absent from D
};

/// Checks, for every prime p | v with Hall complement a p-group, that each
/// member n + h of D with h != identity carries its whole mixed orbit inside
/// D. nullopt means closed.
std::optional<MixedOrbitViolation> mixed_orbit_violation(const CandidateSet& d);

}  // namespace pdskit
