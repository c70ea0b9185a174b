#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdskit/pds.hpp"

namespace pdskit {

struct OrderFactorization {
    std::int64_t v = 1;
    std::vector<std::pair<std::int64_t, int>> primes;  // (p, e), p ascending, e >= 1

    static OrderFactorization of(std::int64_t v);
    bool is_square() const;
    bool all_exponents_even() const;
    std::string text() const;  // e.g. "3^2·5^2"
};

enum class RuleStatus { pass, infeasible, not_applicable };

struct RuleOutcome {
    RuleStatus status = RuleStatus::pass;
    std::string rule;
    std::string detail;
    bool passed() const { return status == RuleStatus::pass; }
};

/**
 * R1: when delta is not a perfect square, the parameters must be the Paley
 * parameters of an odd-exponent prime power p^(2s+1) with p ≡ 1 (mod 4);
 * anything else is infeasible. Square delta passes unconstrained. Applies to
 * parameters of a nontrivial regular PDS candidate.
 */
RuleOutcome rule_delta_square(const PdsParams& params);

/**
 * R3: when beta = -1 (for the parameters or their complement), the parameter
 * shape must be Paley type or (243, 22, 1, 2), up to complementation. Passes
 * vacuously when beta != -1.
 */
RuleOutcome rule_beta_minus_one(const PdsParams& params);

/// Whether 1 + p + ... + p^(e-1) ≡ 0 (mod 4) for even e = 2k, evaluated by
/// modular summation without big integers.
bool congruence_rule(std::int64_t p, int e);

/**
 * R2: for square v with at least two distinct odd primes, a Paley-type PDS
 * order is infeasible when some half-exponent k_i is odd at a prime
 * p_i ≡ 1 (mod 4). Precondition failures report not_applicable.
 */
RuleOutcome rule_main_theorem(const OrderFactorization& f);

struct K1Root {
    double approx = 0.0;    // NaN when the radicand is negative
    bool integral = false;
    bool in_range = false;  // 0 <= k1 <= n - 1
    std::int64_t value = 0; // meaningful when integral
};

/**
 * Parameters of D ∩ N for a Hall subgroup of order n: pi = gcd(n, sqrt(delta)),
 * theta the unique integer with (2*theta-1)*pi <= beta < (2*theta+1)*pi,
 * beta1 = beta - 2*theta*pi, delta1 = pi^2, and the two roots
 * k1 = (n + beta1 ± sqrt((n+beta1)^2 - (delta1-beta1^2)(n-1))) / 2.
 */
struct SubgroupRestriction {
    std::int64_t v1 = 0;
    std::int64_t pi = 0;
    std::int64_t theta = 0;
    std::int64_t beta1 = 0;
    std::int64_t delta1 = 0;
    K1Root k1_plus;
    K1Root k1_minus;
    bool locally_feasible = false;  // some root is an integer in range

    /// Derived (v1, k1, lambda1, mu1) from the first admissible root
    /// (plus root preferred); absent when no root yields integral parameters.
    std::optional<PdsParams> sub_params() const;
};

/// Requires delta a perfect square, n_order | v with gcd(n, v/n) = 1 and
/// v/n odd.
SubgroupRestriction subgroup_restriction(const PdsParams& params, std::int64_t n_order);

enum class VerdictKind { known_exists, infeasible, open, not_applicable };

struct Verdict {
    std::int64_t v = 0;
    VerdictKind kind = VerdictKind::open;
    std::string rule;    // R1/R2 or construction source; empty for open
    std::string detail;

    bool operator==(const Verdict& o) const {
        return v == o.v && kind == o.kind && rule == o.rule && detail == o.detail;
    }
};

std::string to_string(VerdictKind kind);

/// Known Paley-type constructions at order level: finite-field squares for
/// prime powers ≡ 1 (mod 4), and the all-even-half-exponent square orders
/// (recorded as an existence fact only; the set itself is not built here).
/// nullopt defers the decision to the sieve rules.
std::optional<Verdict> paley_existence(const OrderFactorization& f);

/// Order-level verdict: known constructions, then R1 for non-square v, then
/// R2 for square v, else open. Orders with v < 5 or v ≢ 1 (mod 4) are
/// not applicable. A construction and a firing rule at once would be an
/// internal inconsistency and throws.
Verdict sieve(std::int64_t v);

/// sieve(v) for every v ≡ 1 (mod 4), 5 <= v <= max_v, ascending.
std::vector<Verdict> sieve_range(std::int64_t max_v);

}  // namespace pdskit
