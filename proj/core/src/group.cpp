#include "torsq/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <tuple>
#include <utility>

namespace torsq {

namespace {

std::tuple<int, std::int64_t, std::int64_t> order_key(const GroupElement& e) {
  return {e.at_infinity ? 0 : 1, e.u, e.v};
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::kIo,
                "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

// (Z/N) x (Z/N) under componentwise addition.
class ProductGroup final : public AbelianGroup {
 public:
  explicit ProductGroup(std::int64_t n) : n_(n) {
    if (n < 1) {
      throw Error(ErrorKind::kParameter,
                  "group order must be >= 1, got " + std::to_string(n));
    }
  }

  GroupElement identity() const override { return {0, 0, false}; }

  GroupElement add(const GroupElement& a, const GroupElement& b) const override {
    return {(a.u + b.u) % n_, (a.v + b.v) % n_, false};
  }

  GroupElement neg(const GroupElement& a) const override {
    return {floor_mod(-a.u, n_), floor_mod(-a.v, n_), false};
  }

  std::string kind() const override { return "product"; }

  std::string label(const GroupElement& a) const override {
    return "(" + std::to_string(a.u) + "," + std::to_string(a.v) + ")";
  }

  GroupElement parse(std::string_view text) const override {
    if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
      throw Error(ErrorKind::kIo,
                  "bad pair element '" + std::string(text) + "'");
    }
    auto body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorKind::kIo,
                  "bad pair element '" + std::string(text) + "'");
    }
    auto u = parse_int(body.substr(0, comma));
    auto v = parse_int(body.substr(comma + 1));
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw Error(ErrorKind::kIo, "pair element '" + std::string(text) +
                                      "' out of range mod " +
                                      std::to_string(n_));
    }
    return {u, v, false};
  }

 private:
  std::int64_t n_;
};

// Nine named 3-torsion elements with B = A + D and -B = C + D, realized as
// (Z/3) x (Z/3) in coordinates w.r.t. the basis P = -B, Q = D.
class Symbolic3TorsionGroup final : public AbelianGroup {
 public:
  GroupElement identity() const override { return {0, 0, false}; }

  GroupElement add(const GroupElement& a, const GroupElement& b) const override {
    return {(a.u + b.u) % 3, (a.v + b.v) % 3, false};
  }

  GroupElement neg(const GroupElement& a) const override {
    return {floor_mod(-a.u, 3), floor_mod(-a.v, 3), false};
  }

  std::string kind() const override { return "symbolic"; }

  std::string label(const GroupElement& a) const override {
    return kLabels[static_cast<std::size_t>(a.u * 3 + a.v)];
  }

  GroupElement parse(std::string_view text) const override {
    for (std::int64_t i = 0; i < 9; ++i) {
      if (text == kLabels[static_cast<std::size_t>(i)]) {
        return {i / 3, i % 3, false};
      }
    }
    throw Error(ErrorKind::kIo,
                "unknown 3-torsion label '" + std::string(text) + "'");
  }

 private:
  // indexed by 3u + v
  static constexpr std::array<const char*, 9> kLabels = {
      "O", "D", "-D", "-B", "-A", "C", "B", "-C", "A"};
};

}  // namespace

bool element_less(const GroupElement& a, const GroupElement& b) {
  return order_key(a) < order_key(b);
}

GroupElement scalar_mul(const AbelianGroup& group, const GroupElement& e,
                        std::int64_t m) {
  if (m < 0) return group.neg(scalar_mul(group, e, -m));
  GroupElement acc = group.identity();
  GroupElement base = e;
  while (m > 0) {
    if (m & 1) acc = group.add(acc, base);
    m >>= 1;
    if (m > 0) base = group.add(base, base);
  }
  return acc;
}

GroupElement basis_element(const TorsionBasis& basis, const CoordPair& coords) {
  if (coords.modulus() != basis.n) {
    throw Error(ErrorKind::kDomain,
                "coordinate modulus " + std::to_string(coords.modulus()) +
                    " does not match basis order " + std::to_string(basis.n));
  }
  const auto& g = *basis.group;
  return g.add(scalar_mul(g, basis.p, coords.m.value()),
               scalar_mul(g, basis.q, coords.n.value()));
}

GroupElement element_for_index(const TorsionBasis& basis, std::int64_t k) {
  return basis_element(basis, index_to_pair(k, basis.n));
}

std::vector<GroupElement> basis_span(const TorsionBasis& basis) {
  std::vector<GroupElement> span;
  span.reserve(static_cast<std::size_t>(basis.n * basis.n));
  for (std::int64_t k = 1; k <= basis.n * basis.n; ++k) {
    span.push_back(element_for_index(basis, k));
  }
  return span;
}

BasisCheck verify_basis(const TorsionBasis& basis) {
  const auto& g = *basis.group;
  if (!g.eq(scalar_mul(g, basis.p, basis.n), g.identity())) {
    return {false, "[N]P = " + g.label(scalar_mul(g, basis.p, basis.n)) +
                       " is not the identity"};
  }
  if (!g.eq(scalar_mul(g, basis.q, basis.n), g.identity())) {
    return {false, "[N]Q = " + g.label(scalar_mul(g, basis.q, basis.n)) +
                       " is not the identity"};
  }
  auto span = basis_span(basis);
  std::vector<std::int64_t> order(span.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = static_cast<std::int64_t>(i);
  }
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    return element_less(span[static_cast<std::size_t>(a)],
                        span[static_cast<std::size_t>(b)]);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& prev = span[static_cast<std::size_t>(order[i - 1])];
    const auto& cur = span[static_cast<std::size_t>(order[i])];
    if (g.eq(prev, cur)) {
      auto p1 = index_to_pair(order[i - 1] + 1, basis.n);
      auto p2 = index_to_pair(order[i] + 1, basis.n);
      return {false, "collision: coordinates (" +
                         std::to_string(p1.m.value()) + "," +
                         std::to_string(p1.n.value()) + ") and (" +
                         std::to_string(p2.m.value()) + "," +
                         std::to_string(p2.n.value()) + ") both map to " +
                         g.label(cur)};
    }
  }
  return {true, ""};
}

TorsionBasis make_product_group(std::int64_t n) {
  auto group = std::make_shared<const ProductGroup>(n);
  TorsionBasis basis;
  basis.n = n;
  basis.p = {floor_mod(1, n), 0, false};
  basis.q = {0, floor_mod(1, n), false};
  basis.group = std::move(group);
  return basis;
}

TorsionBasis make_symbolic_3torsion() {
  TorsionBasis basis;
  basis.n = 3;
  basis.p = {1, 0, false};  // -B
  basis.q = {0, 1, false};  // D
  basis.group = std::make_shared<const Symbolic3TorsionGroup>();
  return basis;
}

}  // namespace torsq
