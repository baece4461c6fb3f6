#include "torsq/curve.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>
#include <utility>

namespace torsq {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t parse_decimal(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::kIo, std::string("bad ") + what + " '" +
                                    std::string(text) + "'");
  }
  return value;
}

}  // namespace

PrimeField::PrimeField(std::int64_t p, std::int64_t limit) : p_(p) {
  if (p > limit) {
    throw Error(ErrorKind::kResource,
                "p = " + std::to_string(p) + " exceeds the enumeration limit " +
                    std::to_string(limit));
  }
  if (!is_prime(p)) {
    throw Error(ErrorKind::kParameter,
                "p = " + std::to_string(p) + " is not prime");
  }
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) {
    throw Error(ErrorKind::kDomain,
                "division by zero in F_" + std::to_string(p_));
  }
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::tuple(r1, r0 - q * r1);
    std::tie(t0, t1) = std::tuple(t1, t0 - q * t1);
  }
  return floor_mod(t0, p_);
}

bool point_less(const CurvePoint& a, const CurvePoint& b) {
  auto key = [](const CurvePoint& pt) {
    return std::tuple(pt.at_infinity ? 0 : 1, pt.x, pt.y);
  };
  return key(a) < key(b);
}

Curve::Curve(PrimeField field, std::int64_t a4, std::int64_t a6)
    : field_(field), a4_(field.reduce(a4)), a6_(field.reduce(a6)) {
  if (field_.p() <= 3) {
    throw Error(ErrorKind::kParameter,
                "short Weierstrass curves require p > 3, got p = " +
                    std::to_string(field_.p()));
  }
  // discriminant condition 4 a4^3 + 27 a6^2 != 0
  auto a4_cubed = field_.mul(field_.mul(a4_, a4_), a4_);
  auto disc = field_.add(field_.mul(4 % field_.p(), a4_cubed),
                         field_.mul(27 % field_.p(), field_.mul(a6_, a6_)));
  if (disc == 0) {
    throw Error(ErrorKind::kParameter,
                "singular curve: 4*a4^3 + 27*a6^2 = 0 in F_" +
                    std::to_string(field_.p()));
  }
}

bool Curve::contains(const CurvePoint& pt) const {
  if (pt.at_infinity) return true;
  if (pt.x < 0 || pt.x >= field_.p() || pt.y < 0 || pt.y >= field_.p()) {
    return false;
  }
  auto lhs = field_.mul(pt.y, pt.y);
  auto rhs = field_.add(field_.mul(field_.mul(pt.x, pt.x), pt.x),
                        field_.add(field_.mul(a4_, pt.x), a6_));
  return lhs == rhs;
}

std::string Curve::equation() const {
  return "y^2 = x^3 + " + std::to_string(a4_) + "*x + " + std::to_string(a6_) +
         " over F_" + std::to_string(field_.p());
}

namespace {

void require_on_curve(const Curve& curve, const CurvePoint& pt) {
  if (!curve.contains(pt)) {
    throw Error(ErrorKind::kDomain,
                "point (" + std::to_string(pt.x) + "," + std::to_string(pt.y) +
                    ") is not on " + curve.equation());
  }
}

}  // namespace

CurvePoint point_neg(const Curve& curve, const CurvePoint& p) {
  require_on_curve(curve, p);
  if (p.at_infinity) return p;
  return CurvePoint::affine(p.x, curve.field().neg(p.y));
}

CurvePoint point_add(const Curve& curve, const CurvePoint& p1,
                     const CurvePoint& p2) {
  require_on_curve(curve, p1);
  require_on_curve(curve, p2);
  if (p1.at_infinity) return p2;
  if (p2.at_infinity) return p1;
  const auto& f = curve.field();
  if (p1.x == p2.x && f.add(p1.y, p2.y) == 0) {
    return CurvePoint::infinity();  // mutual inverses, covers y = 0 doubling
  }
  std::int64_t slope;
  if (p1.x == p2.x) {
    // tangent: (3 x^2 + a4) / (2 y)
    auto numer = f.add(f.mul(3, f.mul(p1.x, p1.x)), curve.a4());
    slope = f.mul(numer, f.inv(f.mul(2, p1.y)));
  } else {
    slope = f.mul(f.sub(p2.y, p1.y), f.inv(f.sub(p2.x, p1.x)));
  }
  auto x3 = f.sub(f.sub(f.mul(slope, slope), p1.x), p2.x);
  auto y3 = f.sub(f.mul(slope, f.sub(p1.x, x3)), p1.y);
  return CurvePoint::affine(x3, y3);
}

std::vector<CurvePoint> enumerate_points(const Curve& curve) {
  const auto& f = curve.field();
  const std::int64_t p = f.p();
  // root[r] = least y with y^2 = r, or -1
  std::vector<std::int64_t> root(static_cast<std::size_t>(p), -1);
  for (std::int64_t y = 0; y < p; ++y) {
    auto sq = f.mul(y, y);
    if (root[static_cast<std::size_t>(sq)] < 0) {
      root[static_cast<std::size_t>(sq)] = y;
    }
  }
  std::vector<CurvePoint> pts{CurvePoint::infinity()};
  for (std::int64_t x = 0; x < p; ++x) {
    auto rhs = f.add(f.mul(f.mul(x, x), x), f.add(f.mul(curve.a4(), x), curve.a6()));
    auto y = root[static_cast<std::size_t>(rhs)];
    if (y < 0) continue;
    pts.push_back(CurvePoint::affine(x, y));
    if (y != 0) pts.push_back(CurvePoint::affine(x, p - y));
  }
  return pts;
}

std::vector<CurvePoint> torsion_subgroup(const Curve& curve, std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kDomain,
                "torsion order must be >= 1, got " + std::to_string(n));
  }
  const std::int64_t p = curve.field().p();
  if (n % p == 0) {
    throw Error(ErrorKind::kGroup,
                "the field characteristic p = " + std::to_string(p) +
                    " divides N = " + std::to_string(n) +
                    "; the torsion construction requires a characteristic "
                    "not dividing N");
  }
  CurveGroup group(curve);
  std::vector<CurvePoint> torsion;
  for (const auto& pt : enumerate_points(curve)) {
    if (scalar_mul(group, CurveGroup::to_element(pt), n) == group.identity()) {
      torsion.push_back(pt);
    }
  }
  return torsion;
}

GroupElement CurveGroup::to_element(const CurvePoint& pt) {
  return {pt.at_infinity ? 0 : pt.x, pt.at_infinity ? 0 : pt.y,
          pt.at_infinity};
}

CurvePoint CurveGroup::to_point(const GroupElement& e) {
  return e.at_infinity ? CurvePoint::infinity() : CurvePoint::affine(e.u, e.v);
}

GroupElement CurveGroup::identity() const {
  return to_element(CurvePoint::infinity());
}

GroupElement CurveGroup::add(const GroupElement& a,
                             const GroupElement& b) const {
  return to_element(point_add(curve_, to_point(a), to_point(b)));
}

GroupElement CurveGroup::neg(const GroupElement& a) const {
  return to_element(point_neg(curve_, to_point(a)));
}

std::string CurveGroup::label(const GroupElement& a) const {
  if (a.at_infinity) return "inf";
  return std::to_string(a.u) + "," + std::to_string(a.v);
}

GroupElement CurveGroup::parse(std::string_view text) const {
  if (text == "inf") return identity();
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error(ErrorKind::kIo,
                "bad curve point '" + std::string(text) + "'");
  }
  auto x = parse_decimal(text.substr(0, comma), "point coordinate");
  auto y = parse_decimal(text.substr(comma + 1), "point coordinate");
  auto pt = CurvePoint::affine(x, y);
  if (!curve_.contains(pt)) {
    throw Error(ErrorKind::kIo, "point " + std::string(text) +
                                    " is not on " + curve_.equation());
  }
  return to_element(pt);
}

std::shared_ptr<const CurveGroup> make_curve_group(Curve curve) {
  return std::make_shared<const CurveGroup>(std::move(curve));
}

namespace {

std::int64_t point_order(const Curve& curve, const CurvePoint& pt,
                         std::int64_t bound) {
  CurvePoint acc = pt;
  std::int64_t order = 1;
  while (!acc.at_infinity && order <= bound) {
    acc = point_add(curve, acc, pt);
    ++order;
  }
  return order;
}

}  // namespace

TorsionBasis find_torsion_basis(const Curve& curve, std::int64_t n) {
  auto group = make_curve_group(curve);
  TorsionBasis basis;
  basis.n = n;
  basis.group = group;
  basis.p = group->identity();
  basis.q = group->identity();
  if (n == 1) return basis;

  auto torsion = torsion_subgroup(curve, n);  // sorted: infinity, then (x, y)
  const std::int64_t p = curve.field().p();
  if (static_cast<std::int64_t>(torsion.size()) != n * n) {
    std::string msg =
        "the N-torsion of E(F_" + std::to_string(p) + ") has " +
        std::to_string(torsion.size()) + " points, need N^2 = " +
        std::to_string(n * n) + ": torsion is not fully rational";
    if ((p - 1) % n != 0) {
      msg += " (necessary condition N | p - 1 fails: " + std::to_string(n) +
             " does not divide " + std::to_string(p - 1) + ")";
    } else {
      msg += " (try another prime p with N | p - 1)";
    }
    throw Error(ErrorKind::kGroup, msg);
  }

  const CurvePoint* first_of_order_n = nullptr;
  for (const auto& pt : torsion) {
    if (point_order(curve, pt, n) == n) {
      first_of_order_n = &pt;
      break;
    }
  }
  if (first_of_order_n == nullptr) {
    throw Error(ErrorKind::kGroup,
                "no point of order " + std::to_string(n) + " on " +
                    curve.equation());
  }
  basis.p = CurveGroup::to_element(*first_of_order_n);

  for (const auto& candidate : torsion) {
    basis.q = CurveGroup::to_element(candidate);
    if (verify_basis(basis).ok) return basis;
  }
  throw Error(ErrorKind::kGroup,
              "no independent second basis point on " + curve.equation());
}

Curve parse_curve_spec(std::string_view spec, std::int64_t limit) {
  auto first = spec.find(',');
  auto second = first == std::string_view::npos
                    ? std::string_view::npos
                    : spec.find(',', first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos ||
      spec.find(',', second + 1) != std::string_view::npos) {
    throw Error(ErrorKind::kIo, "curve descriptor must be 'p,a4,a6', got '" +
                                    std::string(spec) + "'");
  }
  auto p = parse_decimal(spec.substr(0, first), "curve prime");
  auto a4 = parse_decimal(spec.substr(first + 1, second - first - 1),
                          "curve coefficient a4");
  auto a6 = parse_decimal(spec.substr(second + 1), "curve coefficient a6");
  return Curve(PrimeField(p, limit), a4, a6);
}

}  // namespace torsq
