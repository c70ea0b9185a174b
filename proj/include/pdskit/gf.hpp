#pragma once

#include <cstdint>
#include <vector>

#include "pdskit/pds.hpp"

namespace pdskit {

/// Coefficient list, low degree first; monic of the requested degree. The
/// search enumerates monic candidates in increasing order of the integer
/// encoding sum_j c_j p^j and returns the first irreducible, so the result
/// is deterministic.
std::vector<std::int64_t> find_irreducible(std::int64_t p, int degree);

/// Trial division by every monic polynomial of degree 1..deg/2 over Z_p.
bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p);

/**
 * F_q for q = p^degree, p an odd prime, in the polynomial representation
 * modulo the deterministic irreducible from find_irreducible. Elements are
 * coefficient vectors of length degree.
 */
class FiniteField {
  public:
    FiniteField(std::int64_t p, int degree);

    using Elem = std::vector<std::int64_t>;

    std::int64_t p() const { return p_; }
    int degree() const { return degree_; }
    std::int64_t q() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(degree_), 0); }
    Elem one() const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;

    /// Base-p digit encoding, constant coefficient least significant.
    Elem element_at(std::int64_t index) const;
    std::int64_t index_of(const Elem& a) const;

  private:
    void require_valid(const Elem& a) const;

    std::int64_t p_;
    int degree_;
    std::int64_t q_;
    std::vector<std::int64_t> modulus_;
};

/// The nonzero squares of F_q as a candidate set in the additive group
/// (Z_p)^degree, coefficient vectors taken as coordinates. Requires q an odd
/// prime power with q ≡ 1 (mod 4); the result has (q-1)/2 members and is
/// closed under negation.
CandidateSet paley_pds(std::int64_t q);

}  // namespace pdskit
