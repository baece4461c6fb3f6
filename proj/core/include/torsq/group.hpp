#ifndef TORSQ_GROUP_HPP
#define TORSQ_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "torsq/residue.hpp"

namespace torsq {

// Opaque group element.  The payload is interpreted by the owning group:
// a coordinate pair for the product and symbolic groups, an affine curve
// point (or the point at infinity) for elliptic-curve groups.  Groups keep
// elements in canonical form, so operator== doubles as group equality.
struct GroupElement {
  std::int64_t u = 0;
  std::int64_t v = 0;
  bool at_infinity = false;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Strict ordering for sorting/deduplicating canonical elements; the point at
// infinity sorts first.
bool element_less(const GroupElement& a, const GroupElement& b);

// Minimal abelian-group contract: identity, addition, negation, equality.
// Scalar multiples are derived (scalar_mul below), never reimplemented by
// backings.  label/parse give the element wire format used by the CLI and
// the MagicSquare JSON document.
class AbelianGroup {
 public:
  virtual ~AbelianGroup() = default;

  virtual GroupElement identity() const = 0;
  virtual GroupElement add(const GroupElement& a,
                           const GroupElement& b) const = 0;
  virtual GroupElement neg(const GroupElement& a) const = 0;
  virtual bool eq(const GroupElement& a, const GroupElement& b) const {
    return a == b;
  }

  // "product", "curve" or "symbolic".
  virtual std::string kind() const = 0;
  virtual std::string label(const GroupElement& a) const = 0;
  // Inverse of label; throws an io error on unparseable or invalid input.
  virtual GroupElement parse(std::string_view text) const = 0;
};

// [m]e by double-and-add; [0]e is the identity and [-m]e = neg([m]e).
GroupElement scalar_mul(const AbelianGroup& group, const GroupElement& e,
                        std::int64_t m);

// A pair (P, Q) of N-torsion elements meant to realize
// (Z/N) x (Z/N) ~ G[N] via (m, n) |-> [m]P + [n]Q.
struct TorsionBasis {
  std::int64_t n = 1;
  GroupElement p;
  GroupElement q;
  std::shared_ptr<const AbelianGroup> group;
};

// [m]P + [n]Q for (m, n) with modulus basis.n; throws on modulus mismatch.
GroupElement basis_element(const TorsionBasis& basis, const CoordPair& coords);

// basis_element at the k-th coordinate pair of the index bijection,
// k in [1, N^2].
GroupElement element_for_index(const TorsionBasis& basis, std::int64_t k);

// All N^2 combinations in index order (k = 1, ..., N^2).
std::vector<GroupElement> basis_span(const TorsionBasis& basis);

struct BasisCheck {
  bool ok = false;
  std::string witness;  // on failure: wrong order, or a colliding pair

  explicit operator bool() const noexcept { return ok; }
};

// True iff [N]P = [N]Q = identity and the N^2 combinations are pairwise
// distinct (i.e. (m, n) |-> [m]P + [n]Q is injective).
BasisCheck verify_basis(const TorsionBasis& basis);

// (Z/N) x (Z/N) under componentwise addition, standard basis
// P = (1, 0), Q = (0, 1).  N >= 1; N = 1 gives the trivial group.
TorsionBasis make_product_group(std::int64_t n);

// The 9-element 3-torsion group with named elements O, A, B, C, D and their
// negatives, subject to B = A + D and -B = C + D; basis P = -B, Q = D.
// Realized as (Z/3) x (Z/3) in coordinates w.r.t. (P, Q) plus a label table:
//   O=(0,0)  -B=(1,0)  B=(2,0)  D=(0,1)  -A=(1,1)
//  -C=(2,1)  -D=(0,2)  C=(1,2)  A=(2,2)
// Any relabeling consistent with the two relations would do; this is the
// fixed one.
TorsionBasis make_symbolic_3torsion();

}  // namespace torsq

#endif  // TORSQ_GROUP_HPP
