#ifndef TORSQ_CURVE_HPP
#define TORSQ_CURVE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "torsq/group.hpp"

namespace torsq {

// Largest prime accepted for full point enumeration unless overridden.
inline constexpr std::int64_t kDefaultEnumerationLimit = 50021;

// F_p for prime p, with word-sized arithmetic.  Primality is checked by
// trial division; p is bounded by the enumeration limit.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p,
                      std::int64_t limit = kDefaultEnumerationLimit);

  std::int64_t p() const noexcept { return p_; }

  std::int64_t reduce(std::int64_t a) const { return floor_mod(a, p_); }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    return (a + b) % p_;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    return floor_mod(a - b, p_);
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return (a * b) % p_;
  }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
  // Multiplicative inverse; throws on a == 0.
  std::int64_t inv(std::int64_t a) const;

 private:
  std::int64_t p_;
};

// Affine point or the point at infinity.
struct CurvePoint {
  bool at_infinity = true;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static CurvePoint infinity() { return {}; }
  static CurvePoint affine(std::int64_t x, std::int64_t y) {
    return {false, x, y};
  }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool point_less(const CurvePoint& a, const CurvePoint& b);

// y^2 = x^3 + a4 x + a6 over F_p, p > 3, nonsingular
// (4 a4^3 + 27 a6^2 != 0 in F_p).
class Curve {
 public:
  Curve(PrimeField field, std::int64_t a4, std::int64_t a6);

  const PrimeField& field() const noexcept { return field_; }
  std::int64_t a4() const noexcept { return a4_; }
  std::int64_t a6() const noexcept { return a6_; }

  bool contains(const CurvePoint& pt) const;
  // "y^2 = x^3 + a4 x + a6 over F_p"
  std::string equation() const;

 private:
  PrimeField field_;
  std::int64_t a4_;
  std::int64_t a6_;
};

// Chord-tangent group law.  Both points must lie on the curve.
CurvePoint point_add(const Curve& curve, const CurvePoint& p1,
                     const CurvePoint& p2);
CurvePoint point_neg(const Curve& curve, const CurvePoint& p);

// All points of E(F_p) including the point at infinity, ordered with
// infinity first and then ascending (x, y).  Scans x over F_p and extracts
// the square roots of x^3 + a4 x + a6 from a precomputed root table.
std::vector<CurvePoint> enumerate_points(const Curve& curve);

// { P in E(F_p) : [N]P = infinity }.  Requires N >= 1 and p not dividing N;
// violating the characteristic condition throws a group error.
std::vector<CurvePoint> torsion_subgroup(const Curve& curve, std::int64_t n);

// E(F_p) as an AbelianGroup.  Elements serialize as "inf" or "x,y".
class CurveGroup final : public AbelianGroup {
 public:
  explicit CurveGroup(Curve curve) : curve_(std::move(curve)) {}

  const Curve& curve() const noexcept { return curve_; }

  static GroupElement to_element(const CurvePoint& pt);
  static CurvePoint to_point(const GroupElement& e);

  GroupElement identity() const override;
  GroupElement add(const GroupElement& a, const GroupElement& b) const override;
  GroupElement neg(const GroupElement& a) const override;
  std::string kind() const override { return "curve"; }
  std::string label(const GroupElement& a) const override;
  GroupElement parse(std::string_view text) const override;

 private:
  Curve curve_;
};

std::shared_ptr<const CurveGroup> make_curve_group(Curve curve);

// An N-torsion basis for E(F_p), deterministic: points ordered infinity
// first then ascending (x, y); P is the first point of order exactly N and
// Q the first point making all N^2 combinations distinct.  Requires the
// N-torsion to be fully rational, |E(F_p)[N]| = N^2; otherwise throws a
// group error that reports the necessary condition N | p - 1.
TorsionBasis find_torsion_basis(const Curve& curve, std::int64_t n);

// CLI curve descriptor "p,a4,a6" in decimal.
Curve parse_curve_spec(std::string_view spec,
                       std::int64_t limit = kDefaultEnumerationLimit);

}  // namespace torsq

#endif  // TORSQ_CURVE_HPP
