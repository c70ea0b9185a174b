#include "pdskit/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace pdskit {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n < 2) return n;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    const std::int64_t r = isqrt(n);
    return r * r == n;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t totient(std::int64_t n) {
    std::int64_t phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        phi *= ipow(p, e - 1) * (p - 1);
    }
    return phi;
}

std::optional<PrimePower> as_prime_power(std::int64_t n) {
    if (n < 2) return std::nullopt;
    const auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return PrimePower{f[0].first, f[0].second};
}

std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace pdskit
