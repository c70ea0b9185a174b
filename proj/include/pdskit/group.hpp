#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pdskit {

/// A group element (or character index): one residue per cyclic factor,
/// coords[j] in [0, factors()[j]).
using Element = std::vector<std::int64_t>;

class HallSubgroup;

/**
 * A finite abelian group in primary decomposition: an ordered list of
 * prime-power cyclic factors, canonically sorted by (prime, exponent).
 * Cyclic inputs are split by CRT, so Z15 and Z3xZ5 are the same group.
 *
 * Values are immutable after construction; every operation is pure.
 */
class AbelianGroup {
  public:
    /// Grammar: group := term ('x' term)*;  term := 'Z' int ('^' int)?
    static AbelianGroup parse(std::string_view spec);

    /// Canonicalizes: each order is CRT-split into prime powers, then sorted.
    explicit AbelianGroup(const std::vector<std::int64_t>& cyclic_orders);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    /// Prime of factors()[j].
    const std::vector<std::int64_t>& factor_primes() const { return primes_; }
    std::int64_t order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }
    std::vector<std::int64_t> distinct_primes() const;

    /// Canonical spec string, e.g. "Z3^2xZ5^2"; parse(spec()) == *this.
    std::string spec() const;

    Element identity() const { return Element(factors_.size(), 0); }
    bool is_identity(const Element& g) const;
    bool is_valid(const Element& g) const;
    void require_valid(const Element& g) const;

    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element subtract(const Element& a, const Element& b) const;
    Element scalar_mul(std::int64_t s, const Element& g) const;

    /// Rank of g in lexicographic coordinate order (identity is 0).
    std::int64_t index_of(const Element& g) const;
    Element element_at(std::int64_t index) const;

    /// Least t >= 1 with t*g = identity.
    std::int64_t element_order(const Element& g) const;

    /// {s*g : 1 <= s < o(g), gcd(s, o(g)) = 1}, sorted; g must not be the
    /// identity. Size is totient(o(g)) and the set is closed under negation.
    std::vector<Element> power_class(const Element& g) const;

    /// Power classes of all nonidentity elements, each sorted, the list
    /// ordered by smallest member. Classes partition the nonidentity elements.
    std::vector<std::vector<Element>> power_class_partition() const;

    /// The unique subgroup whose order is the full prime-power part of the
    /// group order on `primes`. Its order and index are coprime.
    HallSubgroup hall_subgroup(const std::vector<std::int64_t>& primes) const;

    /// exp(2*pi*i * sum_j chi[j]*g[j] / factors()[j]).
    std::complex<double> character_value(const Element& chi, const Element& g) const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

  private:
    std::vector<std::int64_t> factors_;
    std::vector<std::int64_t> primes_;
    std::int64_t order_ = 1;
};

/**
 * A Hall subgroup of an abelian group: the coordinates whose primes lie in a
 * chosen set. gcd(order, index) = 1 by construction.
 */
class HallSubgroup {
  public:
    HallSubgroup(AbelianGroup parent, std::vector<std::int64_t> primes,
                 std::vector<std::size_t> coords);

    const AbelianGroup& parent() const { return parent_; }
    const std::vector<std::int64_t>& primes() const { return primes_; }
    /// Indices of the parent factors supported on primes().
    const std::vector<std::size_t>& coords() const { return coords_; }
    std::int64_t order() const { return order_; }
    std::int64_t index() const { return parent_.order() / order_; }
    bool odd_index() const { return index() % 2 != 0; }

    /// Membership in the parent group: zero outside the selected coordinates.
    bool contains(const Element& g) const;

    /// Projection onto the subgroup coordinates (other coords zeroed).
    Element part(const Element& g) const;
    /// Projection onto the complementary coordinates.
    Element co_part(const Element& g) const;

    /// All members, as elements of the parent group, in lexicographic order.
    std::vector<Element> elements() const;

    /// The subgroup as a group in its own right (the selected factors), with
    /// restrict() mapping a member's coordinates onto it.
    AbelianGroup as_group() const;
    Element restrict(const Element& g) const;

  private:
    AbelianGroup parent_;
    std::vector<std::int64_t> primes_;
    std::vector<std::size_t> coords_;
    std::int64_t order_ = 1;
};

/// "(a,b,...)" in factor order.
std::string format_element(const Element& g);
Element parse_element(std::string_view text);

}  // namespace pdskit
