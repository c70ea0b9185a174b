#include "pdskit/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pdskit/arith.hpp"

namespace pdskit {

namespace {

using Poly = std::vector<std::int64_t>;

// In-place remainder of a by monic b, coefficients mod p.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
    const auto db = static_cast<std::int64_t>(b.size()) - 1;
    while (static_cast<std::int64_t>(a.size()) - 1 >= db) {
        const std::int64_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[shift + j] = ((a[shift + j] - lead * b[j]) % p + p) % p;
            }
        }
        a.pop_back();
        if (a.empty()) break;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Monic polynomial of the given degree from the integer encoding of its
// non-leading coefficients.
Poly monic_from_encoding(std::int64_t enc, int degree, std::int64_t p) {
    Poly f(static_cast<std::size_t>(degree) + 1, 0);
    for (int j = 0; j < degree; ++j) {
        f[static_cast<std::size_t>(j)] = enc % p;
        enc /= p;
    }
    f[static_cast<std::size_t>(degree)] = 1;
    return f;
}

}  // namespace

bool is_irreducible(const Poly& poly, std::int64_t p) {
    const auto degree = static_cast<int>(poly.size()) - 1;
    if (degree < 1) return false;
    if (degree == 1) return true;
    for (int dd = 1; dd <= degree / 2; ++dd) {
        for (std::int64_t enc = 0; enc < ipow(p, dd); ++enc) {
            if (poly_rem(poly, monic_from_encoding(enc, dd, p), p).empty()) return false;
        }
    }
    return true;
}

Poly find_irreducible(std::int64_t p, int degree) {
    if (!is_prime(p) || p == 2) {
        throw std::invalid_argument("find_irreducible: p = " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (degree < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    for (std::int64_t enc = 0; enc < ipow(p, degree); ++enc) {
        Poly f = monic_from_encoding(enc, degree, p);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("find_irreducible: exhausted candidates");  // unreachable
}

FiniteField::FiniteField(std::int64_t p, int degree)
    : p_(p), degree_(degree), q_(ipow(p, degree)), modulus_(find_irreducible(p, degree)) {}

FiniteField::Elem FiniteField::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

void FiniteField::require_valid(const Elem& a) const {
    if (static_cast<int>(a.size()) != degree_) {
        throw std::invalid_argument("field element has wrong shape");
    }
    for (const std::int64_t c : a) {
        if (c < 0 || c >= p_) throw std::invalid_argument("field coefficient out of range");
    }
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
    require_valid(a);
    require_valid(b);
    Elem r(a.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = (a[j] + b[j]) % p_;
    return r;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const {
    require_valid(a);
    Elem r(a.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = (p_ - a[j]) % p_;
    return r;
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
    require_valid(a);
    require_valid(b);
    Poly prod(2 * static_cast<std::size_t>(degree_) - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
    }
    Poly rem = poly_rem(std::move(prod), modulus_, p_);
    rem.resize(static_cast<std::size_t>(degree_), 0);
    return rem;
}

FiniteField::Elem FiniteField::element_at(std::int64_t index) const {
    if (index < 0 || index >= q_) throw std::out_of_range("field index out of range");
    Elem a(static_cast<std::size_t>(degree_));
    for (int j = 0; j < degree_; ++j) {
        a[static_cast<std::size_t>(j)] = index % p_;
        index /= p_;
    }
    return a;
}

std::int64_t FiniteField::index_of(const Elem& a) const {
    require_valid(a);
    std::int64_t idx = 0;
    for (std::size_t j = a.size(); j-- > 0;) idx = idx * p_ + a[j];
    return idx;
}

CandidateSet paley_pds(std::int64_t q) {
    if (q % 2 == 0) throw std::invalid_argument("paley_pds: q must be odd");
    if (q % 4 != 1) {
        throw std::invalid_argument("paley_pds: q = " + std::to_string(q) +
                                    " is not ≡ 1 (mod 4)");
    }
    const auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("paley_pds: q = " + std::to_string(q) +
                                         " is not a prime power");
    const FiniteField f(pp->p, pp->e);

    std::vector<bool> seen(static_cast<std::size_t>(q), false);
    std::vector<Element> squares;
    for (std::int64_t i = 1; i < q; ++i) {
        const auto a = f.element_at(i);
        auto s = f.mul(a, a);
        const auto idx = static_cast<std::size_t>(f.index_of(s));
        if (!seen[idx]) {
            seen[idx] = true;
            squares.push_back(std::move(s));
        }
    }
    if (static_cast<std::int64_t>(squares.size()) != (q - 1) / 2) {
        throw std::logic_error("paley_pds: squaring was not 2-to-1");
    }

    AbelianGroup g(std::vector<std::int64_t>(static_cast<std::size_t>(pp->e), pp->p));
    return CandidateSet(std::move(g), std::move(squares));
}

}  // namespace pdskit
