#include "pdskit/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pdskit/arith.hpp"

namespace pdskit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
    throw std::invalid_argument("bad group spec '" + std::string(spec) + "': " + why);
}

}  // namespace

AbelianGroup AbelianGroup::parse(std::string_view spec) {
    if (spec.empty()) bad_spec(spec, "empty");
    std::vector<std::int64_t> orders;
    std::size_t i = 0;
    while (i < spec.size()) {
        if (spec[i] != 'Z') bad_spec(spec, "expected 'Z'");
        ++i;
        std::size_t start = i;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
        if (i == start) bad_spec(spec, "expected integer after 'Z'");
        const std::int64_t n = std::stoll(std::string(spec.substr(start, i - start)));
        std::int64_t rep = 1;
        if (i < spec.size() && spec[i] == '^') {
            ++i;
            start = i;
            while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
            if (i == start) bad_spec(spec, "expected integer after '^'");
            rep = std::stoll(std::string(spec.substr(start, i - start)));
            if (rep < 1) bad_spec(spec, "repetition must be >= 1");
        }
        for (std::int64_t r = 0; r < rep; ++r) orders.push_back(n);
        if (i < spec.size()) {
            if (spec[i] != 'x') bad_spec(spec, "expected 'x' between terms");
            ++i;
            if (i == spec.size()) bad_spec(spec, "trailing 'x'");
        }
    }
    return AbelianGroup(orders);
}

AbelianGroup::AbelianGroup(const std::vector<std::int64_t>& cyclic_orders) {
    if (cyclic_orders.empty()) throw std::invalid_argument("group needs at least one factor");
    // CRT-split every order into prime powers, then canonical (prime, exponent) sort.
    std::vector<std::pair<std::int64_t, int>> pp;
    for (const std::int64_t n : cyclic_orders) {
        if (n < 2) throw std::invalid_argument("cyclic factor must be >= 2");
        for (const auto& [p, e] : factorize(n)) pp.emplace_back(p, e);
    }
    std::sort(pp.begin(), pp.end());
    for (const auto& [p, e] : pp) {
        factors_.push_back(ipow(p, e));
        primes_.push_back(p);
        order_ *= factors_.back();
    }
}

std::vector<std::int64_t> AbelianGroup::distinct_primes() const {
    std::vector<std::int64_t> out;
    for (const std::int64_t p : primes_) {
        if (out.empty() || out.back() != p) out.push_back(p);
    }
    return out;
}

std::string AbelianGroup::spec() const {
    std::ostringstream os;
    std::size_t j = 0;
    while (j < factors_.size()) {
        std::size_t run = 1;
        while (j + run < factors_.size() && factors_[j + run] == factors_[j]) ++run;
        if (j > 0) os << 'x';
        os << 'Z' << factors_[j];
        if (run > 1) os << '^' << run;
        j += run;
    }
    return os.str();
}

bool AbelianGroup::is_identity(const Element& g) const {
    require_valid(g);
    return std::all_of(g.begin(), g.end(), [](std::int64_t c) { return c == 0; });
}

bool AbelianGroup::is_valid(const Element& g) const {
    if (g.size() != factors_.size()) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] < 0 || g[j] >= factors_[j]) return false;
    }
    return true;
}

void AbelianGroup::require_valid(const Element& g) const {
    if (!is_valid(g)) {
        throw std::invalid_argument("element " + format_element(g) + " is not valid in " + spec());
    }
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
    require_valid(a);
    require_valid(b);
    Element r(factors_.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = (a[j] + b[j]) % factors_[j];
    return r;
}

Element AbelianGroup::negate(const Element& a) const {
    require_valid(a);
    Element r(factors_.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = (factors_[j] - a[j]) % factors_[j];
    return r;
}

Element AbelianGroup::subtract(const Element& a, const Element& b) const {
    require_valid(a);
    require_valid(b);
    Element r(factors_.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] = (a[j] - b[j] + factors_[j]) % factors_[j];
    }
    return r;
}

Element AbelianGroup::scalar_mul(std::int64_t s, const Element& g) const {
    require_valid(g);
    Element r(factors_.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        const std::int64_t m = ((s % factors_[j]) + factors_[j]) % factors_[j];
        r[j] = (m * g[j]) % factors_[j];
    }
    return r;
}

std::int64_t AbelianGroup::index_of(const Element& g) const {
    require_valid(g);
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < g.size(); ++j) idx = idx * factors_[j] + g[j];
    return idx;
}

Element AbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
    Element g(factors_.size());
    for (std::size_t j = factors_.size(); j-- > 0;) {
        g[j] = index % factors_[j];
        index /= factors_[j];
    }
    return g;
}

std::int64_t AbelianGroup::element_order(const Element& g) const {
    require_valid(g);
    std::int64_t t = 1;
    for (std::size_t j = 0; j < g.size(); ++j) {
        t = std::lcm(t, factors_[j] / std::gcd(g[j], factors_[j]));
    }
    return t;
}

std::vector<Element> AbelianGroup::power_class(const Element& g) const {
    if (is_identity(g)) throw std::invalid_argument("power_class: identity has no class");
    const std::int64_t o = element_order(g);
    std::vector<Element> cls;
    for (std::int64_t s = 1; s < o; ++s) {
        if (std::gcd(s, o) == 1) cls.push_back(scalar_mul(s, g));
    }
    std::sort(cls.begin(), cls.end());
    return cls;
}

std::vector<std::vector<Element>> AbelianGroup::power_class_partition() const {
    std::vector<bool> seen(static_cast<std::size_t>(order_), false);
    std::vector<std::vector<Element>> classes;
    for (std::int64_t idx = 1; idx < order_; ++idx) {
        if (seen[static_cast<std::size_t>(idx)]) continue;
        auto cls = power_class(element_at(idx));
        for (const auto& m : cls) seen[static_cast<std::size_t>(index_of(m))] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

HallSubgroup AbelianGroup::hall_subgroup(const std::vector<std::int64_t>& primes) const {
    std::vector<std::int64_t> ps(primes);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    const auto avail = distinct_primes();
    for (const std::int64_t p : ps) {
        if (!is_prime(p)) {
            throw std::invalid_argument("hall_subgroup: " + std::to_string(p) + " is not prime");
        }
        if (std::find(avail.begin(), avail.end(), p) == avail.end()) {
            throw std::invalid_argument("hall_subgroup: prime " + std::to_string(p) +
                                        " does not divide the group order");
        }
    }
    std::vector<std::size_t> coords;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (std::find(ps.begin(), ps.end(), primes_[j]) != ps.end()) coords.push_back(j);
    }
    return HallSubgroup(*this, std::move(ps), std::move(coords));
}

std::complex<double> AbelianGroup::character_value(const Element& chi, const Element& g) const {
    require_valid(chi);
    require_valid(g);
    double frac = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        frac += static_cast<double>((chi[j] * g[j]) % factors_[j]) /
                static_cast<double>(factors_[j]);
    }
    const double angle = kTwoPi * frac;
    return {std::cos(angle), std::sin(angle)};
}

HallSubgroup::HallSubgroup(AbelianGroup parent, std::vector<std::int64_t> primes,
                           std::vector<std::size_t> coords)
    : parent_(std::move(parent)), primes_(std::move(primes)), coords_(std::move(coords)) {
    for (const std::size_t j : coords_) order_ *= parent_.factors()[j];
}

bool HallSubgroup::contains(const Element& g) const {
    parent_.require_valid(g);
    std::size_t c = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const bool selected = c < coords_.size() && coords_[c] == j;
        if (selected) {
            ++c;
        } else if (g[j] != 0) {
            return false;
        }
    }
    return true;
}

Element HallSubgroup::part(const Element& g) const {
    parent_.require_valid(g);
    Element r(g.size(), 0);
    for (const std::size_t j : coords_) r[j] = g[j];
    return r;
}

Element HallSubgroup::co_part(const Element& g) const {
    const Element p = part(g);
    return parent_.subtract(g, p);
}

std::vector<Element> HallSubgroup::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order_));
    Element cur(parent_.rank(), 0);
    // Odometer over the selected coordinates only.
    while (true) {
        out.push_back(cur);
        std::size_t c = coords_.size();
        while (c-- > 0) {
            const std::size_t j = coords_[c];
            if (++cur[j] < parent_.factors()[j]) break;
            cur[j] = 0;
            if (c == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
        if (coords_.empty()) {
            return out;
        }
    }
}

AbelianGroup HallSubgroup::as_group() const {
    if (coords_.empty()) {
        throw std::logic_error("trivial Hall subgroup has no primary decomposition");
    }
    std::vector<std::int64_t> orders;
    for (const std::size_t j : coords_) orders.push_back(parent_.factors()[j]);
    return AbelianGroup(orders);
}

Element HallSubgroup::restrict(const Element& g) const {
    if (!contains(g)) {
        throw std::invalid_argument("restrict: element is outside the Hall subgroup");
    }
    Element r;
    r.reserve(coords_.size());
    for (const std::size_t j : coords_) r.push_back(g[j]);
    return r;
}

std::string format_element(const Element& g) {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j > 0) os << ',';
        os << g[j];
    }
    os << ')';
    return os.str();
}

Element parse_element(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw std::invalid_argument("bad element '" + std::string(text) + "': expected (a,b,...)");
    }
    Element g;
    std::size_t i = 1;
    const std::size_t end = text.size() - 1;
    while (i < end) {
        std::size_t start = i;
        if (i < end && text[i] == '-') ++i;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) {
            throw std::invalid_argument("bad element '" + std::string(text) + "': expected integer");
        }
        g.push_back(std::stoll(std::string(text.substr(start, i - start))));
        if (i < end) {
            if (text[i] != ',') {
                throw std::invalid_argument("bad element '" + std::string(text) + "': expected ','");
            }
            ++i;
            if (i == end) {
                throw std::invalid_argument("bad element '" + std::string(text) + "': trailing ','");
            }
        }
    }
    if (g.empty()) {
        throw std::invalid_argument("bad element '" + std::string(text) + "': empty tuple");
    }
    return g;
}

}  // namespace pdskit
