#include "torsq/group.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "testutil.hpp"

using namespace torsq;

namespace {

GroupElement pair_elem(std::int64_t u, std::int64_t v) {
  return GroupElement{u, v, false};
}

}  // namespace

TEST_CASE("product group: componentwise addition mod N") {
  auto basis = make_product_group(3);
  const auto& g = *basis.group;
  CHECK(g.add(pair_elem(1, 2), pair_elem(2, 2)) == pair_elem(0, 1));
  CHECK(g.neg(pair_elem(1, 0)) == pair_elem(2, 0));
  CHECK(g.identity() == pair_elem(0, 0));
  CHECK(g.kind() == "product");
  CHECK(g.label(pair_elem(1, 2)) == "(1,2)");
}

TEST_CASE("product group: N = 1 is the trivial group") {
  auto basis = make_product_group(1);
  const auto& g = *basis.group;
  CHECK(basis.p == g.identity());
  CHECK(basis.q == g.identity());
  CHECK(g.add(g.identity(), g.identity()) == g.identity());
  CHECK(basis_span(basis).size() == 1);
  CHECK(verify_basis(basis).ok);
}

TEST_CASE("scalar_mul: definition cases") {
  auto basis = make_product_group(3);
  const auto& g = *basis.group;
  GroupElement e = pair_elem(1, 2);
  CHECK(scalar_mul(g, e, 0) == g.identity());
  CHECK(scalar_mul(g, e, -1) == g.neg(e));
  CHECK(scalar_mul(g, e, 3) == g.identity());  // order divides 3
  CHECK(scalar_mul(g, e, 1) == e);
}

TEST_CASE("scalar_mul agrees with repeated addition for |m| <= 3N") {
  auto product = make_product_group(5);
  auto symbolic = make_symbolic_3torsion();
  for (const auto& basis : {product, symbolic}) {
    const auto& g = *basis.group;
    for (const auto& e : basis_span(basis)) {
      for (std::int64_t m = -3 * basis.n; m <= 3 * basis.n; ++m) {
        CHECK(scalar_mul(g, e, m) == test::repeated_add(g, e, m));
      }
    }
  }
}

TEST_CASE("basis_element: identity, basis points, modulus mismatch") {
  auto basis = make_product_group(3);
  CHECK(basis_element(basis, CoordPair(Residue(0, 3), Residue(0, 3))) ==
        basis.group->identity());
  CHECK(basis_element(basis, CoordPair(Residue(1, 3), Residue(0, 3))) ==
        basis.p);
  CHECK(basis_element(basis, CoordPair(Residue(0, 3), Residue(1, 3))) ==
        basis.q);
  CHECK_THROWS_AS(
      basis_element(basis, CoordPair(Residue(1, 5), Residue(0, 5))), Error);
}

TEST_CASE("element_for_index: examples and range error") {
  auto basis = make_product_group(3);
  CHECK(element_for_index(basis, 1) == basis.group->identity());
  CHECK(element_for_index(basis, 5) == pair_elem(1, 1));
  CHECK_THROWS_AS(element_for_index(basis, 0), Error);
  CHECK_THROWS_AS(element_for_index(basis, 10), Error);
}

TEST_CASE("basis map is a homomorphism, exhaustively for N <= 7") {
  for (std::int64_t n = 1; n <= 7; ++n) {
    auto basis = make_product_group(n);
    const auto& g = *basis.group;
    for (std::int64_t m1 = 0; m1 < n; ++m1) {
      for (std::int64_t v1 = 0; v1 < n; ++v1) {
        for (std::int64_t m2 = 0; m2 < n; ++m2) {
          for (std::int64_t v2 = 0; v2 < n; ++v2) {
            CoordPair a(Residue(m1, n), Residue(v1, n));
            CoordPair b(Residue(m2, n), Residue(v2, n));
            CoordPair sum(a.m + b.m, a.n + b.n);
            CHECK(basis_element(basis, sum) ==
                  g.add(basis_element(basis, a), basis_element(basis, b)));
          }
        }
      }
    }
  }
}

TEST_CASE("element_for_index is a bijection onto the span, N <= 7") {
  for (std::int64_t n = 1; n <= 7; ++n) {
    auto basis = make_product_group(n);
    std::set<std::string> seen;
    for (std::int64_t k = 1; k <= n * n; ++k) {
      seen.insert(basis.group->label(element_for_index(basis, k)));
    }
    CHECK(seen.size() == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("verify_basis accepts the standard basis and spots collisions") {
  CHECK(verify_basis(make_product_group(5)).ok);
  CHECK(verify_basis(make_symbolic_3torsion()).ok);

  auto bad = make_product_group(3);
  bad.q = pair_elem(2, 0);  // lies in <P>
  auto check = verify_basis(bad);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.witness.empty());
}

TEST_CASE("verify_basis rejects a wrong-order point") {
  auto bad = make_product_group(6);
  bad.n = 3;  // (1,0) has order 6, not dividing 3
  auto check = verify_basis(bad);
  CHECK_FALSE(check.ok);
}

TEST_CASE("symbolic 3-torsion: defining relations") {
  auto basis = make_symbolic_3torsion();
  const auto& g = *basis.group;
  auto by = [&](const char* name) { return g.parse(name); };
  CHECK(g.add(by("A"), by("D")) == by("B"));
  CHECK(g.add(by("C"), by("D")) == by("-B"));
  CHECK(g.neg(by("B")) == by("-B"));
  CHECK(g.add(by("B"), by("-B")) == g.identity());
  CHECK(basis.p == by("-B"));
  CHECK(basis.q == by("D"));
  CHECK(g.label(basis_element(basis, CoordPair(Residue(2, 3), Residue(2, 3)))) ==
        "A");
}

TEST_CASE("symbolic 3-torsion: index-to-label table") {
  auto basis = make_symbolic_3torsion();
  const char* expected[] = {"O", "-B", "B", "D", "-A", "-C", "-D", "C", "A"};
  for (std::int64_t k = 1; k <= 9; ++k) {
    CHECK(basis.group->label(element_for_index(basis, k)) ==
          expected[k - 1]);
  }
}

TEST_CASE("labels parse back to the same element") {
  auto product = make_product_group(7);
  auto symbolic = make_symbolic_3torsion();
  for (const auto& basis : {product, symbolic}) {
    const auto& g = *basis.group;
    for (const auto& e : basis_span(basis)) {
      CHECK(g.parse(g.label(e)) == e);
    }
  }
  CHECK_THROWS_AS(product.group->parse("garbage"), Error);
  CHECK_THROWS_AS(symbolic.group->parse("E"), Error);
}

TEST_CASE("group axioms hold on sampled triples") {
  auto basis = make_symbolic_3torsion();
  const auto& g = *basis.group;
  auto all = basis_span(basis);
  for (const auto& a : all) {
    CHECK(g.add(a, g.neg(a)) == g.identity());
    CHECK(g.add(a, g.identity()) == a);
    for (const auto& b : all) {
      CHECK(g.add(a, b) == g.add(b, a));
      for (const auto& c : all) {
        CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
      }
    }
  }
}
