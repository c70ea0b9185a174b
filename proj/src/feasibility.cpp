#include "pdskit/feasibility.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pdskit/arith.hpp"

namespace pdskit {

namespace {

std::string params_text(const PdsParams& p) {
    std::ostringstream os;
    os << '(' << p.v << ", " << p.k << ", " << p.lambda << ", " << p.mu << ')';
    return os.str();
}

const PdsParams kExceptional{243, 22, 1, 2};

}  // namespace

OrderFactorization OrderFactorization::of(std::int64_t v) {
    if (v < 1) throw std::invalid_argument("order must be positive");
    return OrderFactorization{v, factorize(v)};
}

bool OrderFactorization::is_square() const { return all_exponents_even(); }

bool OrderFactorization::all_exponents_even() const {
    for (const auto& [p, e] : primes) {
        if (e % 2 != 0) return false;
    }
    return true;
}

std::string OrderFactorization::text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i > 0) os << "·";
        os << primes[i].first;
        if (primes[i].second > 1) os << '^' << primes[i].second;
    }
    return os.str();
}

RuleOutcome rule_delta_square(const PdsParams& params) {
    const std::int64_t delta = params.delta();
    if (is_perfect_square(delta)) {
        return {RuleStatus::pass, "R1", "Δ = " + std::to_string(delta) + " is a perfect square"};
    }
    const auto pp = as_prime_power(params.v);
    const bool paley_prime_power =
        is_paley_shape(params) && pp && pp->e % 2 == 1 && pp->p % 4 == 1;
    if (paley_prime_power) {
        return {RuleStatus::pass, "R1",
                "Δ = " + std::to_string(delta) + " is not a square and " + params_text(params) +
                    " is the Paley shape of " + std::to_string(pp->p) + "^" +
                    std::to_string(pp->e) + " with " + std::to_string(pp->p) + " ≡ 1 (mod 4)"};
    }
    std::ostringstream os;
    os << "Δ = " << delta << " is not a perfect square but " << params_text(params)
       << " is not the Paley shape of an odd-exponent prime power p^(2s+1) with p ≡ 1 (mod 4)";
    if (pp) {
        os << " (v = " << pp->p << "^" << pp->e << ", " << pp->p << " ≡ " << pp->p % 4
           << " (mod 4))";
    }
    return {RuleStatus::infeasible, "R1", os.str()};
}

RuleOutcome rule_beta_minus_one(const PdsParams& params) {
    const PdsParams comp = complement_params(params);
    if (params.beta() != -1 && comp.beta() != -1) {
        return {RuleStatus::pass, "R3",
                "β = " + std::to_string(params.beta()) + " on both the parameters and their "
                "complement; the β = -1 classification does not apply"};
    }
    const bool ok = is_paley_shape(params) || params == kExceptional ||
                    is_paley_shape(comp) || comp == kExceptional;
    if (ok) {
        return {RuleStatus::pass, "R3",
                params_text(params) + " is Paley type or (243, 22, 1, 2), up to complementation"};
    }
    return {RuleStatus::infeasible, "R3",
            "β = -1 but " + params_text(params) + " is neither Paley type nor (243, 22, 1, 2), "
            "up to complementation (complement " + params_text(comp) + ")"};
}

bool congruence_rule(std::int64_t p, int e) {
    if (e < 2 || e % 2 != 0) {
        throw std::invalid_argument("congruence_rule: exponent must be even and positive");
    }
    if (p < 3 || !is_prime(p)) {
        throw std::invalid_argument("congruence_rule: p must be an odd prime");
    }
    std::int64_t sum = 0;
    std::int64_t term = 1;  // p^j mod 4
    for (int j = 0; j < e; ++j) {
        sum = (sum + term) % 4;
        term = (term * (p % 4)) % 4;
    }
    return sum == 0;
}

RuleOutcome rule_main_theorem(const OrderFactorization& f) {
    if (f.primes.size() < 2) {
        return {RuleStatus::not_applicable, "R2", "v = " + std::to_string(f.v) +
                                                      " has fewer than two distinct primes"};
    }
    for (const auto& [p, e] : f.primes) {
        if (p == 2) {
            return {RuleStatus::not_applicable, "R2",
                    "v = " + std::to_string(f.v) + " is even"};
        }
        if (e % 2 != 0) {
            return {RuleStatus::not_applicable, "R2",
                    "v = " + std::to_string(f.v) + " is not a perfect square"};
        }
    }
    for (const auto& [p, e] : f.primes) {
        const int k = e / 2;
        if (!congruence_rule(p, e)) {
            std::ostringstream os;
            os << "v = " << f.v << " = " << f.text() << ": k = " << k << " is odd at p = " << p
               << " ≡ 1 (mod 4)";
            return {RuleStatus::infeasible, "R2", os.str()};
        }
    }
    return {RuleStatus::pass, "R2",
            "v = " + std::to_string(f.v) + " = " + f.text() +
                ": every odd half-exponent sits at a prime ≡ 3 (mod 4)"};
}

SubgroupRestriction subgroup_restriction(const PdsParams& params, std::int64_t n_order) {
    const std::int64_t delta = params.delta();
    if (!is_perfect_square(delta)) {
        throw std::invalid_argument("subgroup_restriction: Δ = " + std::to_string(delta) +
                                    " is not a perfect square");
    }
    if (n_order < 1 || params.v % n_order != 0) {
        throw std::invalid_argument("subgroup_restriction: subgroup order must divide v");
    }
    const std::int64_t index = params.v / n_order;
    if (std::gcd(n_order, index) != 1) {
        throw std::invalid_argument("subgroup_restriction: gcd(|N|, |G|/|N|) must be 1");
    }
    if (index % 2 == 0) {
        throw std::invalid_argument("subgroup_restriction: |G|/|N| must be odd");
    }

    SubgroupRestriction r;
    r.v1 = n_order;
    const std::int64_t beta = params.beta();
    r.pi = std::gcd(n_order, isqrt(delta));
    // Unique theta with (2*theta - 1)*pi <= beta < (2*theta + 1)*pi.
    {
        std::int64_t num = beta + r.pi;
        std::int64_t den = 2 * r.pi;
        std::int64_t q = num / den;
        if (num % den != 0 && ((num < 0) != (den < 0))) --q;  // floor division
        r.theta = q;
    }
    r.beta1 = beta - 2 * r.theta * r.pi;
    r.delta1 = r.pi * r.pi;

    const std::int64_t b = n_order + r.beta1;
    const std::int64_t radicand = b * b - (r.delta1 - r.beta1 * r.beta1) * (n_order - 1);
    auto make_root = [&](int sign) {
        K1Root root;
        if (radicand < 0) {
            root.approx = std::numeric_limits<double>::quiet_NaN();
            return root;
        }
        const std::int64_t s = isqrt(radicand);
        const bool exact = s * s == radicand;
        root.approx = (static_cast<double>(b) + sign * std::sqrt(static_cast<double>(radicand))) / 2.0;
        root.integral = exact && (b + sign * s) % 2 == 0;
        if (root.integral) {
            root.value = (b + sign * s) / 2;
            root.in_range = root.value >= 0 && root.value <= n_order - 1;
        } else {
            root.in_range = root.approx >= 0.0 && root.approx <= static_cast<double>(n_order - 1);
        }
        return root;
    };
    r.k1_plus = make_root(+1);
    r.k1_minus = make_root(-1);
    r.locally_feasible = (r.k1_plus.integral && r.k1_plus.in_range) ||
                         (r.k1_minus.integral && r.k1_minus.in_range);
    return r;
}

std::optional<PdsParams> SubgroupRestriction::sub_params() const {
    for (const K1Root* root : {&k1_plus, &k1_minus}) {
        if (!root->integral || !root->in_range || root->value < 1) continue;
        const std::int64_t four_k_minus_mu = delta1 - beta1 * beta1;
        if (four_k_minus_mu % 4 != 0) continue;
        const std::int64_t mu1 = root->value - four_k_minus_mu / 4;
        const std::int64_t lambda1 = beta1 + mu1;
        if (mu1 < 0 || lambda1 < 0 || mu1 > root->value || lambda1 > root->value) continue;
        return PdsParams{v1, root->value, lambda1, mu1};
    }
    return std::nullopt;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::known_exists: return "KnownExists";
        case VerdictKind::infeasible: return "Infeasible";
        case VerdictKind::open: return "Open";
        case VerdictKind::not_applicable: return "NotApplicable";
    }
    return "?";
}

std::optional<Verdict> paley_existence(const OrderFactorization& f) {
    if (f.v < 5 || f.v % 4 != 1) return std::nullopt;
    if (f.primes.size() == 1) {
        const auto& [p, e] = f.primes[0];
        std::ostringstream os;
        os << "nonzero squares of F_" << f.v << " (" << f.v << " = " << p << "^" << e
           << " ≡ 1 (mod 4))";
        return Verdict{f.v, VerdictKind::known_exists, "PaleyField", os.str()};
    }
    bool all_even_half = f.is_square();
    if (all_even_half) {
        for (const auto& [p, e] : f.primes) {
            if ((e / 2) % 2 != 0) {
                all_even_half = false;
                break;
            }
        }
    }
    if (all_even_half) {
        return Verdict{f.v, VerdictKind::known_exists, "Polhill",
                       "v = " + std::to_string(f.v) + " = " + f.text() +
                           " with every half-exponent even admits a known product construction"};
    }
    return std::nullopt;
}

Verdict sieve(std::int64_t v) {
    if (v < 5 || v % 4 != 1) {
        return Verdict{v, VerdictKind::not_applicable, "",
                       "Paley parameters need v ≡ 1 (mod 4) and v >= 5"};
    }
    const auto f = OrderFactorization::of(v);
    const auto known = paley_existence(f);

    RuleOutcome rule{RuleStatus::not_applicable, "", ""};
    if (!f.is_square()) {
        rule = rule_delta_square(paley_params(v));
    } else if (f.primes.size() >= 2) {
        rule = rule_main_theorem(f);
    }

    if (known) {
        if (rule.status == RuleStatus::infeasible) {
            throw std::logic_error("sieve: construction and nonexistence rule both fired for v = " +
                                   std::to_string(v) + " (" + rule.rule + ": " + rule.detail + ")");
        }
        return *known;
    }
    if (rule.status == RuleStatus::infeasible) {
        return Verdict{v, VerdictKind::infeasible, rule.rule, rule.detail};
    }
    return Verdict{v, VerdictKind::open, "",
                   "no rule applies to v = " + std::to_string(v) + " = " + f.text()};
}

std::vector<Verdict> sieve_range(std::int64_t max_v) {
    std::vector<Verdict> out;
    for (std::int64_t v = 5; v <= max_v; v += 4) out.push_back(sieve(v));
    return out;
}

}  // namespace pdskit
