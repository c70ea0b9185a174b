#include "pdskit/search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pdskit/arith.hpp"

namespace pdskit {

namespace {

constexpr double kCharTolerance = 1e-6;

struct Unit {
    std::vector<Element> members;  // sorted
    std::int64_t size = 0;
};

// Power classes in partition order.
std::vector<Unit> orbit_units(const AbelianGroup& g) {
    std::vector<Unit> units;
    for (auto& cls : g.power_class_partition()) {
        Unit u;
        u.size = static_cast<std::int64_t>(cls.size());
        u.members = std::move(cls);
        units.push_back(std::move(u));
    }
    return units;
}

// {g, -g} pairs (singletons for involutions), ordered by smallest member.
std::vector<Unit> negation_units(const AbelianGroup& g) {
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    std::vector<Unit> units;
    for (std::int64_t i = 1; i < g.order(); ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        Element e = g.element_at(i);
        Element m = g.negate(e);
        used[static_cast<std::size_t>(i)] = true;
        used[static_cast<std::size_t>(g.index_of(m))] = true;
        Unit u;
        u.members.push_back(std::move(e));
        if (m != u.members.front()) u.members.push_back(std::move(m));
        std::sort(u.members.begin(), u.members.end());
        u.size = static_cast<std::int64_t>(u.members.size());
        units.push_back(std::move(u));
    }
    return units;
}

// Per-character real sums over each unit, plus suffix bounds on what the
// remaining units could still contribute. Unit sums are real because every
// unit is closed under negation.
struct CharTables {
    std::vector<std::vector<double>> unit_sum;    // [chi][unit]
    std::vector<std::vector<double>> suffix_abs;  // [chi][unit], sum of |unit_sum| from here on
    double t_plus = 0.0;
    double t_minus = 0.0;
};

CharTables character_tables(const AbelianGroup& g, const std::vector<Unit>& units,
                            const PdsParams& target) {
    CharTables t;
    const double root = std::sqrt(static_cast<double>(target.delta()));
    t.t_plus = (static_cast<double>(target.beta()) + root) / 2.0;
    t.t_minus = (static_cast<double>(target.beta()) - root) / 2.0;
    for (std::int64_t c = 1; c < g.order(); ++c) {
        const Element chi = g.element_at(c);
        std::vector<double> sums;
        sums.reserve(units.size());
        for (const auto& u : units) {
            std::complex<double> s{0.0, 0.0};
            for (const auto& m : u.members) s += g.character_value(chi, m);
            sums.push_back(s.real());
        }
        std::vector<double> suffix(units.size() + 1, 0.0);
        for (std::size_t i = units.size(); i-- > 0;) {
            suffix[i] = suffix[i + 1] + std::abs(sums[i]);
        }
        t.unit_sum.push_back(std::move(sums));
        t.suffix_abs.push_back(std::move(suffix));
    }
    return t;
}

}  // namespace

SearchResult search(const SearchProblem& problem) {
    const AbelianGroup& g = problem.group;
    const PdsParams& target = problem.target;
    if (target.v != g.order()) {
        throw std::invalid_argument("search: target v = " + std::to_string(target.v) +
                                    " does not match group order " + std::to_string(g.order()));
    }
    std::vector<Unit> units;
    if (problem.mode == SearchMode::orbit) {
        if (!is_perfect_square(target.delta())) {
            throw std::invalid_argument(
                "search: orbit mode needs a perfect-square Δ, got Δ = " +
                std::to_string(target.delta()));
        }
        units = orbit_units(g);
    } else {
        if (g.order() > problem.brute_max_order) {
            throw std::invalid_argument("search: order " + std::to_string(g.order()) +
                                        " exceeds the brute-force bound of " +
                                        std::to_string(problem.brute_max_order));
        }
        units = negation_units(g);
    }

    std::vector<std::int64_t> suffix_size(units.size() + 1, 0);
    for (std::size_t i = units.size(); i-- > 0;) {
        suffix_size[i] = suffix_size[i + 1] + units[i].size;
    }

    const bool prune_chars = problem.mode == SearchMode::orbit && problem.character_pruning;
    CharTables tables;
    if (prune_chars) tables = character_tables(g, units, target);
    std::vector<double> partial(prune_chars ? tables.unit_sum.size() : 0, 0.0);

    SearchResult result;
    std::vector<std::size_t> chosen;

    auto verify_candidate = [&](const std::vector<std::size_t>& picks) {
        std::vector<Element> members;
        for (const std::size_t u : picks) {
            members.insert(members.end(), units[u].members.begin(), units[u].members.end());
        }
        CandidateSet cand(g, std::move(members));
        const auto rep = verify_pds(cand);
        if (rep.is_pds && rep.is_regular && rep.params && *rep.params == target) {
            result.solutions.push_back(std::move(cand));
        }
    };

    auto dfs = [&](auto&& self, std::size_t i, std::int64_t size) -> bool {
        ++result.nodes_explored;
        if (size > target.k || size + suffix_size[i] < target.k) return true;
        if (prune_chars) {
            for (std::size_t c = 0; c < partial.size(); ++c) {
                const double slack = tables.suffix_abs[c][i] + kCharTolerance;
                if (std::abs(tables.t_plus - partial[c]) > slack &&
                    std::abs(tables.t_minus - partial[c]) > slack) {
                    return true;
                }
            }
        }
        if (i == units.size()) {
            if (size == target.k) {
                verify_candidate(chosen);
                if (problem.limit > 0 &&
                    static_cast<std::int64_t>(result.solutions.size()) >= problem.limit) {
                    return false;
                }
            }
            return true;
        }
        chosen.push_back(i);
        if (prune_chars) {
            for (std::size_t c = 0; c < partial.size(); ++c) partial[c] += tables.unit_sum[c][i];
        }
        bool keep_going = self(self, i + 1, size + units[i].size);
        chosen.pop_back();
        if (prune_chars) {
            for (std::size_t c = 0; c < partial.size(); ++c) partial[c] -= tables.unit_sum[c][i];
        }
        if (!keep_going) return false;
        return self(self, i + 1, size);
    };

    result.complete = dfs(dfs, 0, 0);
    return result;
}

std::vector<Element> mixed_orbit(const AbelianGroup& g, const HallSubgroup& n_sub,
                                 const Element& n, const Element& h) {
    if (n_sub.parent() != g) {
        throw std::invalid_argument("mixed_orbit: Hall subgroup belongs to a different group");
    }
    if (g.is_identity(h)) throw std::invalid_argument("mixed_orbit: h must not be the identity");
    if (!n_sub.contains(n)) {
        throw std::invalid_argument("mixed_orbit: n is not supported on the subgroup coordinates");
    }
    if (!g.is_identity(n_sub.part(h))) {
        throw std::invalid_argument(
            "mixed_orbit: h is not supported on the complementary coordinates");
    }
    const std::int64_t o = g.element_order(h);
    const auto pp = as_prime_power(o);
    if (!pp) {
        throw std::invalid_argument("mixed_orbit: o(h) = " + std::to_string(o) +
                                    " is not a prime power");
    }
    std::vector<Element> orbit;
    for (std::int64_t x = 1; x < o; ++x) {
        if (x % pp->p == 0) continue;
        orbit.push_back(g.add(n, g.scalar_mul(x, h)));
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

ClosureCheck multiplier_closure_check(const CandidateSet& d) {
    const auto rep = verify_pds(d);
    if (!rep.is_pds || !rep.is_regular) {
        throw std::invalid_argument("multiplier_closure_check: D is not a regular PDS");
    }
    if (!is_perfect_square(rep.params->delta())) {
        throw std::invalid_argument("multiplier_closure_check: Δ = " +
                                    std::to_string(rep.params->delta()) +
                                    " is not a perfect square; the multiplier closure property does not apply");
    }
    const auto& g = d.group();
    for (const auto& m : d.members()) {
        const std::int64_t o = g.element_order(m);
        for (std::int64_t s = 2; s < o; ++s) {
            if (std::gcd(s, o) != 1) continue;
            if (!d.contains(g.scalar_mul(s, m))) {
                return ClosureCheck{false, m, s};
            }
        }
    }
    return ClosureCheck{true, std::nullopt, 0};
}

std::optional<MixedOrbitViolation> mixed_orbit_violation(const CandidateSet& d) {
    const auto& g = d.group();
    for (const std::int64_t p : g.distinct_primes()) {
        std::vector<std::int64_t> others;
        for (const std::int64_t q : g.distinct_primes()) {
            if (q != p) others.push_back(q);
        }
        const HallSubgroup n_sub = g.hall_subgroup(others);
        for (const auto& m : d.members()) {
            const Element n = n_sub.part(m);
            const Element h = n_sub.co_part(m);
            if (g.is_identity(h)) continue;
            for (const auto& x : mixed_orbit(g, n_sub, n, h)) {
                if (!d.contains(x)) {
                    return MixedOrbitViolation{p, n, h, x};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace pdskit
