#include "pdskit/pds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pdskit {

PdsParams paley_params(std::int64_t v) {
    if (v < 5 || v % 4 != 1) {
        throw std::invalid_argument("paley_params: v = " + std::to_string(v) +
                                    " is not ≡ 1 (mod 4) with v >= 5");
    }
    return PdsParams{v, (v - 1) / 2, (v - 5) / 4, (v - 1) / 4};
}

bool is_paley_shape(const PdsParams& params) {
    if (params.v < 5 || params.v % 4 != 1) return false;
    return params == paley_params(params.v);
}

PdsParams complement_params(const PdsParams& p) {
    return PdsParams{p.v, p.v - 1 - p.k, p.v - 2 - 2 * p.k + p.mu, p.v - 2 * p.k + p.lambda};
}

CandidateSet::CandidateSet(AbelianGroup group, std::vector<Element> members)
    : group_(std::move(group)), members_(std::move(members)) {
    for (const auto& m : members_) group_.require_valid(m);
    std::sort(members_.begin(), members_.end());
    const auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw std::invalid_argument("duplicate member " + format_element(*dup));
    }
}

bool CandidateSet::contains(const Element& g) const {
    return std::binary_search(members_.begin(), members_.end(), g);
}

std::vector<bool> CandidateSet::membership() const {
    std::vector<bool> in(static_cast<std::size_t>(group_.order()), false);
    for (const auto& m : members_) in[static_cast<std::size_t>(group_.index_of(m))] = true;
    return in;
}

std::vector<std::int64_t> difference_counts(const CandidateSet& d) {
    const auto& g = d.group();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.order()), 0);
    for (const auto& a : d.members()) {
        for (const auto& b : d.members()) {
            if (a == b) continue;
            ++counts[static_cast<std::size_t>(g.index_of(g.subtract(a, b)))];
        }
    }
    return counts;
}

namespace {

// S must contain the identity, have order dividing v, and be closed under
// subtraction.
bool is_subgroup(const AbelianGroup& g, const std::vector<Element>& members) {
    if (members.empty()) return false;
    if (!std::binary_search(members.begin(), members.end(), g.identity())) return false;
    if (g.order() % static_cast<std::int64_t>(members.size()) != 0) return false;
    for (const auto& a : members) {
        for (const auto& b : members) {
            if (!std::binary_search(members.begin(), members.end(), g.subtract(a, b))) {
                return false;
            }
        }
    }
    return true;
}

bool check_trivial(const CandidateSet& d) {
    const auto& g = d.group();
    const Element e = g.identity();
    // D u {e}
    std::vector<Element> with_e = d.members();
    if (!d.contains(e)) {
        with_e.push_back(e);
        std::sort(with_e.begin(), with_e.end());
    }
    if (is_subgroup(g, with_e)) return true;
    // G \ D
    std::vector<Element> rest;
    rest.reserve(static_cast<std::size_t>(g.order() - d.size()));
    for (std::int64_t i = 0; i < g.order(); ++i) {
        Element x = g.element_at(i);
        if (!d.contains(x)) rest.push_back(std::move(x));
    }
    return is_subgroup(g, rest);
}

}  // namespace

VerificationReport verify_pds(const CandidateSet& d) {
    const auto& g = d.group();
    const auto counts = difference_counts(d);
    const auto in = d.membership();

    VerificationReport rep;
    rep.is_regular = !in[0];
    if (rep.is_regular) {
        for (const auto& m : d.members()) {
            if (!d.contains(g.negate(m))) {
                rep.is_regular = false;
                break;
            }
        }
    }
    rep.is_trivial = check_trivial(d);

    std::optional<std::int64_t> lambda, mu;
    for (std::int64_t i = 1; i < g.order(); ++i) {
        const std::int64_t c = counts[static_cast<std::size_t>(i)];
        auto& constant = in[static_cast<std::size_t>(i)] ? lambda : mu;
        if (!constant) {
            constant = c;
        } else if (c != *constant) {
            rep.is_pds = false;
            rep.failing_element = g.element_at(i);
            rep.failing_count = c;
            rep.expected_count = *constant;
            return rep;
        }
    }
    rep.is_pds = true;
    rep.degenerate = !lambda || !mu;
    rep.params = PdsParams{g.order(), d.size(), lambda.value_or(0), mu.value_or(0)};
    return rep;
}

SrgCheck cayley_srg_params(const CandidateSet& d) {
    const auto& g = d.group();
    const auto in = d.membership();
    const std::int64_t v = g.order();
    const std::int64_t k = d.size();
    if (in[0]) throw std::invalid_argument("cayley_srg_params: connection set contains identity");
    for (const auto& m : d.members()) {
        if (!d.contains(g.negate(m))) {
            throw std::invalid_argument("cayley_srg_params: connection set is not symmetric");
        }
    }

    SrgCheck res;
    if (k == 0 || k == v - 1) {
        res.status = SrgCheck::Status::degenerate;
        return res;
    }

    // adj[x][y] built from scratch; common neighbours counted pairwise.
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(v));
    for (std::int64_t x = 0; x < v; ++x) {
        auto& row = adj[static_cast<std::size_t>(x)];
        row.assign(static_cast<std::size_t>(v), false);
        const Element ex = g.element_at(x);
        for (std::int64_t y = 0; y < v; ++y) {
            if (x == y) continue;
            row[static_cast<std::size_t>(y)] =
                in[static_cast<std::size_t>(g.index_of(g.subtract(ex, g.element_at(y))))];
        }
    }

    std::optional<std::int64_t> lambda, mu;
    for (std::int64_t x = 0; x < v; ++x) {
        for (std::int64_t y = x + 1; y < v; ++y) {
            std::int64_t common = 0;
            for (std::int64_t z = 0; z < v; ++z) {
                if (adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] &&
                    adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)]) {
                    ++common;
                }
            }
            auto& constant = adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ? lambda : mu;
            if (!constant) {
                constant = common;
            } else if (common != *constant) {
                res.status = SrgCheck::Status::not_srg;
                res.witness = std::make_pair(g.element_at(x), g.element_at(y));
                res.witness_common = common;
                res.expected_common = *constant;
                return res;
            }
        }
    }
    res.status = SrgCheck::Status::srg;
    res.params = PdsParams{v, k, lambda.value_or(0), mu.value_or(0)};
    return res;
}

}  // namespace pdskit
