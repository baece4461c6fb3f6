#include "torsq/square.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>

namespace torsq {

StepParams de_la_loubere_params(std::int64_t n) {
  return StepParams{n, 1, -1, -1, 2, (n + 1) / 2, (n + 1) / 2};
}

CheckResult validate_coprimality(const StepParams& p) {
  if (p.n < 1) {
    return CheckResult::fail("N must be >= 1, got " + std::to_string(p.n));
  }
  const std::pair<const char*, std::int64_t> coeffs[] = {
      {"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
  for (const auto& [name, value] : coeffs) {
    auto g = std::gcd(value, p.n);
    if (g != 1) {
      return CheckResult::fail(std::string("gcd(") + name + ", N) = gcd(" +
                               std::to_string(value) + ", " +
                               std::to_string(p.n) + ") = " +
                               std::to_string(g) + "; " + name +
                               " must be relatively prime to N");
    }
  }
  return CheckResult::pass();
}

CheckResult validate_params(const StepParams& p) {
  if (p.n < 1) {
    return CheckResult::fail("N must be >= 1, got " + std::to_string(p.n));
  }
  if (p.n % 2 == 0) {
    return CheckResult::fail(
        "N = " + std::to_string(p.n) +
        " is even; the uniform step construction requires odd N");
  }
  if (p.x1 < 1 || p.x1 > p.n || p.y1 < 1 || p.y1 > p.n) {
    return CheckResult::fail("start position (" + std::to_string(p.x1) + "," +
                             std::to_string(p.y1) + ") outside [1, " +
                             std::to_string(p.n) + "]^2");
  }
  if (auto coprime = validate_coprimality(p); !coprime) return coprime;
  auto det = p.a * p.d - p.b * p.c;
  auto g = std::gcd(det, p.n);
  if (g != 1) {
    return CheckResult::fail(
        "gcd(a*d - b*c, N) = gcd(" + std::to_string(det) + ", " +
        std::to_string(p.n) + ") = " + std::to_string(g) +
        "; the determinant must be relatively prime to N");
  }
  return CheckResult::pass();
}

GridPos step_position(const StepParams& p, std::int64_t k) {
  auto block = (k - 1) / p.n;
  Residue x(p.x1 + p.a * (k - 1) + p.b * block, p.n);
  Residue y(p.y1 + p.c * (k - 1) + p.d * block, p.n);
  return {x.rep1(), y.rep1()};
}

std::vector<GridPos> step_positions(const StepParams& p) {
  if (auto check = validate_params(p); !check) {
    throw Error(ErrorKind::kParameter, check.reason);
  }
  std::vector<GridPos> positions;
  positions.reserve(static_cast<std::size_t>(p.n * p.n));
  std::vector<bool> occupied(static_cast<std::size_t>(p.n * p.n), false);
  for (std::int64_t k = 1; k <= p.n * p.n; ++k) {
    auto pos = step_position(p, k);
    auto slot = static_cast<std::size_t>((pos.y - 1) * p.n + (pos.x - 1));
    if (occupied[slot]) {
      throw Error(ErrorKind::kDomain,
                  "step sequence revisits (" + std::to_string(pos.x) + "," +
                      std::to_string(pos.y) + ") despite valid parameters");
    }
    occupied[slot] = true;
    positions.push_back(pos);
  }
  return positions;
}

GroupElement& MagicSquare::at(std::int64_t row, std::int64_t col) {
  return cells[static_cast<std::size_t>(row * n + col)];
}

const GroupElement& MagicSquare::at(std::int64_t row, std::int64_t col) const {
  return cells[static_cast<std::size_t>(row * n + col)];
}

GroupElement& MagicSquare::at_xy(std::int64_t x, std::int64_t y) {
  return at(n - y, x - 1);
}

const GroupElement& MagicSquare::at_xy(std::int64_t x, std::int64_t y) const {
  return at(n - y, x - 1);
}

namespace {

void require_basis_for(const StepParams& p, const TorsionBasis& basis) {
  if (basis.n != p.n) {
    throw Error(ErrorKind::kParameter,
                "basis order " + std::to_string(basis.n) +
                    " does not match N = " + std::to_string(p.n));
  }
}

}  // namespace

MagicSquare build_square(const StepParams& p, const TorsionBasis& basis) {
  require_basis_for(p, basis);
  if (auto check = verify_basis(basis); !check) {
    throw Error(ErrorKind::kGroup, "basis rejected: " + check.witness);
  }
  auto positions = step_positions(p);  // validates parameters
  MagicSquare sq;
  sq.n = p.n;
  sq.basis = basis;
  sq.params = p;
  sq.cells.assign(static_cast<std::size_t>(p.n * p.n),
                  basis.group->identity());
  for (std::int64_t k = 1; k <= p.n * p.n; ++k) {
    auto pos = positions[static_cast<std::size_t>(k - 1)];
    sq.at_xy(pos.x, pos.y) = element_for_index(basis, k);
  }
  return sq;
}

MagicSquare build_square_folded(const StepParams& p, const TorsionBasis& basis) {
  require_basis_for(p, basis);
  if (auto check = validate_coprimality(p); !check) {
    throw Error(ErrorKind::kParameter, check.reason);
  }
  if (p.x1 < 1 || p.x1 > p.n || p.y1 < 1 || p.y1 > p.n) {
    throw Error(ErrorKind::kParameter, "start position outside the grid");
  }
  MagicSquare sq;
  sq.n = p.n;
  sq.basis = basis;
  sq.params = p;
  sq.cells.assign(static_cast<std::size_t>(p.n * p.n),
                  basis.group->identity());
  for (std::int64_t k = 1; k <= p.n * p.n; ++k) {
    auto pos = step_position(p, k);
    auto& cell = sq.at_xy(pos.x, pos.y);
    cell = basis.group->add(cell, element_for_index(basis, k));
  }
  return sq;
}

std::vector<std::vector<std::int64_t>> to_classic_labels(
    const MagicSquare& sq, const TorsionBasis& basis) {
  if (basis.n != sq.n) {
    throw Error(ErrorKind::kParameter,
                "basis order does not match the square");
  }
  auto span = basis_span(basis);
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> index;
  for (std::int64_t k = 1; k <= sq.n * sq.n; ++k) {
    const auto& e = span[static_cast<std::size_t>(k - 1)];
    index[{e.at_infinity ? 0 : 1, e.u, e.v}] = k;
  }
  std::vector<std::vector<std::int64_t>> labels(
      static_cast<std::size_t>(sq.n),
      std::vector<std::int64_t>(static_cast<std::size_t>(sq.n), 0));
  for (std::int64_t row = 0; row < sq.n; ++row) {
    for (std::int64_t col = 0; col < sq.n; ++col) {
      const auto& e = sq.at(row, col);
      auto it = index.find({e.at_infinity ? 0 : 1, e.u, e.v});
      if (it == index.end()) {
        throw Error(ErrorKind::kDomain,
                    "cell " + basis.group->label(e) +
                        " is not in the basis span");
      }
      labels[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          it->second;
    }
  }
  return labels;
}

VerifyReport verify_square(const MagicSquare& sq) {
  const auto& g = *sq.basis.group;
  VerifyReport report;

  auto cells = sq.cells;
  auto span = basis_span(sq.basis);
  std::sort(cells.begin(), cells.end(), element_less);
  std::sort(span.begin(), span.end(), element_less);
  report.is_permutation = cells == span;

  report.row_sums.reserve(static_cast<std::size_t>(sq.n));
  report.col_sums.reserve(static_cast<std::size_t>(sq.n));
  for (std::int64_t row = 0; row < sq.n; ++row) {
    GroupElement sum = g.identity();
    for (std::int64_t col = 0; col < sq.n; ++col) {
      sum = g.add(sum, sq.at(row, col));
    }
    report.row_sums.push_back(sum);
  }
  for (std::int64_t col = 0; col < sq.n; ++col) {
    GroupElement sum = g.identity();
    for (std::int64_t row = 0; row < sq.n; ++row) {
      sum = g.add(sum, sq.at(row, col));
    }
    report.col_sums.push_back(sum);
  }

  auto all_identity = [&](const std::vector<GroupElement>& sums) {
    return std::all_of(sums.begin(), sums.end(), [&](const GroupElement& s) {
      return g.eq(s, g.identity());
    });
  };
  report.is_magic = report.is_permutation && all_identity(report.row_sums) &&
                    all_identity(report.col_sums);
  return report;
}

GroupElement line_sum_prediction(const StepParams& p,
                                 const TorsionBasis& basis) {
  require_basis_for(p, basis);
  if (auto check = validate_coprimality(p); !check) {
    throw Error(ErrorKind::kParameter, check.reason);
  }
  // every line sums N complete residue classes in each coordinate:
  // [s]P + [s]Q with s = 0 + 1 + ... + (N-1) = N(N-1)/2 mod N
  auto s = floor_mod(p.n * (p.n - 1) / 2, p.n);
  const auto& g = *basis.group;
  return g.add(scalar_mul(g, basis.p, s), scalar_mul(g, basis.q, s));
}

CheckResult validate_latin(const LatinSquare& latin) {
  const auto n = latin.n;
  if (n < 1) {
    return CheckResult::fail("order must be >= 1, got " + std::to_string(n));
  }
  if (latin.entries.size() != static_cast<std::size_t>(n * n)) {
    return CheckResult::fail("expected " + std::to_string(n * n) +
                             " entries, got " +
                             std::to_string(latin.entries.size()));
  }
  for (const auto& e : latin.entries) {
    if (e < 0 || e >= n) {
      return CheckResult::fail("entry " + std::to_string(e) +
                               " outside [0, " + std::to_string(n - 1) + "]");
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::int64_t k = 0; k < n; ++k) {
      auto e = latin.at(m, k);
      if (seen[static_cast<std::size_t>(e)]) {
        return CheckResult::fail("row " + std::to_string(m) +
                                 " repeats symbol " + std::to_string(e));
      }
      seen[static_cast<std::size_t>(e)] = true;
    }
  }
  for (std::int64_t k = 0; k < n; ++k) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::int64_t m = 0; m < n; ++m) {
      auto e = latin.at(m, k);
      if (seen[static_cast<std::size_t>(e)]) {
        return CheckResult::fail("column " + std::to_string(k) +
                                 " repeats symbol " + std::to_string(e));
      }
      seen[static_cast<std::size_t>(e)] = true;
    }
  }
  return CheckResult::pass();
}

MagicSquare latin_to_square(const LatinSquare& latin,
                            const TorsionBasis& basis) {
  if (auto check = validate_latin(latin); !check) {
    throw Error(ErrorKind::kDomain, "not a Latin square: " + check.reason);
  }
  if (basis.n != latin.n) {
    throw Error(ErrorKind::kParameter,
                "basis order " + std::to_string(basis.n) +
                    " does not match the Latin square order " +
                    std::to_string(latin.n));
  }
  if (latin.n % 2 == 0) {
    throw Error(ErrorKind::kParameter,
                "N = " + std::to_string(latin.n) +
                    " is even; the Latin-square construction requires odd N");
  }
  if (auto check = verify_basis(basis); !check) {
    throw Error(ErrorKind::kGroup, "basis rejected: " + check.witness);
  }
  MagicSquare sq;
  sq.n = latin.n;
  sq.basis = basis;
  sq.cells.assign(static_cast<std::size_t>(latin.n * latin.n),
                  basis.group->identity());
  for (std::int64_t m = 0; m < latin.n; ++m) {
    for (std::int64_t k = 0; k < latin.n; ++k) {
      auto element = basis_element(
          basis, CoordPair(Residue(m, latin.n), Residue(latin.at(m, k), latin.n)));
      sq.at_xy(m + 1, k + 1) = element;
    }
  }
  return sq;
}

std::optional<StepParams> reverse_search(
    const std::vector<std::vector<std::int64_t>>& labels, std::int64_t max_n) {
  const auto n = static_cast<std::int64_t>(labels.size());
  if (n < 1) {
    throw Error(ErrorKind::kDomain, "empty grid");
  }
  std::vector<bool> present(static_cast<std::size_t>(n * n), false);
  for (const auto& row : labels) {
    if (static_cast<std::int64_t>(row.size()) != n) {
      throw Error(ErrorKind::kDomain, "grid is not square");
    }
    for (auto label : row) {
      if (label < 1 || label > n * n ||
          present[static_cast<std::size_t>(label - 1)]) {
        throw Error(ErrorKind::kDomain,
                    "grid labels are not a permutation of 1.." +
                        std::to_string(n * n));
      }
      present[static_cast<std::size_t>(label - 1)] = true;
    }
  }
  if (n > max_n) {
    throw Error(ErrorKind::kResource,
                "N = " + std::to_string(n) + " exceeds the search limit " +
                    std::to_string(max_n));
  }

  // target position of each label, in cartesian coordinates
  std::vector<GridPos> target(static_cast<std::size_t>(n * n));
  for (std::int64_t row = 0; row < n; ++row) {
    for (std::int64_t col = 0; col < n; ++col) {
      auto label = labels[static_cast<std::size_t>(row)]
                         [static_cast<std::size_t>(col)];
      target[static_cast<std::size_t>(label - 1)] = {col + 1, n - row};
    }
  }

  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          for (std::int64_t x1 = 1; x1 <= n; ++x1) {
            for (std::int64_t y1 = 1; y1 <= n; ++y1) {
              StepParams candidate{n, a, b, c, d, x1, y1};
              bool match = true;
              for (std::int64_t k = 1; k <= n * n && match; ++k) {
                match = step_position(candidate, k) ==
                        target[static_cast<std::size_t>(k - 1)];
              }
              if (match) return candidate;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace torsq
