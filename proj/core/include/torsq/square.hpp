#ifndef TORSQ_SQUARE_HPP
#define TORSQ_SQUARE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torsq/group.hpp"

namespace torsq {

// Parameters of the uniform step sequence
//   x_k = x1 + a (k-1) + b floor((k-1)/N)   (mod N)
//   y_k = y1 + c (k-1) + d floor((k-1)/N)   (mod N)
// with positions reduced to representatives in [1, N].
struct StepParams {
  std::int64_t n = 1;
  std::int64_t a = 1;
  std::int64_t b = -1;
  std::int64_t c = -1;
  std::int64_t d = 2;
  std::int64_t x1 = 1;
  std::int64_t y1 = 1;

  friend bool operator==(const StepParams&, const StepParams&) = default;
};

// De la Loubere (Siamese) presets: a=1, b=c=-1, d=2, start at the center.
StepParams de_la_loubere_params(std::int64_t n);

// Cartesian grid position: x = column from the left, y = row from the
// bottom, both in [1, N].
struct GridPos {
  std::int64_t x = 1;
  std::int64_t y = 1;

  friend bool operator==(const GridPos&, const GridPos&) = default;
};

struct CheckResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

// gcd(a, N) = gcd(b, N) = gcd(c, N) = gcd(d, N) = 1.  N of any parity.
CheckResult validate_coprimality(const StepParams& p);

// Full construction hypotheses: N >= 1 odd, start in range, all four
// coefficients and the determinant a*d - b*c relatively prime to N.
// The rejection reason names the failing condition.
CheckResult validate_params(const StepParams& p);

// (x_k, y_k) for one k, by the raw recurrences (no validation).
GridPos step_position(const StepParams& p, std::int64_t k);

// All N^2 positions, k = 1, ..., N^2.  Requires validate_params; the
// positions are pairwise distinct (checked).
std::vector<GridPos> step_positions(const StepParams& p);

// N x N grid of group elements, row-major with the top row first.
// Cartesian (x, y) lives at matrix[row = N+1-y][col = x] (1-based).
struct MagicSquare {
  std::int64_t n = 1;
  std::vector<GroupElement> cells;       // row-major, n*n entries
  std::optional<StepParams> params;      // provenance, when step-built
  TorsionBasis basis;

  GroupElement& at(std::int64_t row, std::int64_t col);              // 0-based
  const GroupElement& at(std::int64_t row, std::int64_t col) const;  // 0-based
  GroupElement& at_xy(std::int64_t x, std::int64_t y);               // 1-based cartesian
  const GroupElement& at_xy(std::int64_t x, std::int64_t y) const;
};

// Places element_for_index(basis, k) at (x_k, y_k).  Requires
// validate_params, basis.n == p.n and a basis passing verify_basis.
MagicSquare build_square(const StepParams& p, const TorsionBasis& basis);

// Same placement rule, but each cell accumulates the sum of every element
// routed to it.  Only the coprimality of a, b, c, d is required, so N may
// be even and the determinant may be degenerate (then several k share a
// cell and some cells stay at the identity).  Row and column sums of the
// folded grid equal the sums of the step sequence grouped by column/row,
// which is what line_sum_prediction computes.  Coincides with build_square
// on fully valid parameters.
MagicSquare build_square_folded(const StepParams& p, const TorsionBasis& basis);

// Each cell mapped back through the basis and the index bijection to its
// index k in [1, N^2]; rows top-first.  Throws a domain error if a cell is
// not in the basis span.
std::vector<std::vector<std::int64_t>> to_classic_labels(
    const MagicSquare& sq, const TorsionBasis& basis);

struct VerifyReport {
  bool is_permutation = false;
  std::vector<GroupElement> row_sums;  // top row first
  std::vector<GroupElement> col_sums;  // leftmost column first
  bool is_magic = false;               // is_permutation and all sums identity
};

// Row/column sums by genuine group addition; the permutation check compares
// the cell multiset against the full basis span.
VerifyReport verify_square(const MagicSquare& sq);

// The common line sum [s]P + [s]Q with s = N(N-1)/2 mod N, i.e. the value
// every row and column sum takes under the coprimality hypotheses.  This is
// the identity iff N is odd; for even N it is [N/2](P + Q).
GroupElement line_sum_prediction(const StepParams& p, const TorsionBasis& basis);

// N x N array over Z/N, entries indexed as at(m, n) with m the first index.
struct LatinSquare {
  std::int64_t n = 1;
  std::vector<std::int64_t> entries;  // m-major, n*n values in [0, N-1]

  std::int64_t at(std::int64_t m, std::int64_t k) const {
    return entries[static_cast<std::size_t>(m * n + k)];
  }
};

// ok iff every row and every column is a permutation of Z/N; the rejection
// names the offending line.
CheckResult validate_latin(const LatinSquare& latin);

// Places basis_element((m, a_mn)) at cartesian position (m+1, n+1).  For a
// valid Latin square and odd N the result is magic: a grid row (fixed n)
// sums over all m and a complete column of entries, a grid column (fixed m)
// sums over a complete row of entries.
MagicSquare latin_to_square(const LatinSquare& latin, const TorsionBasis& basis);

// Exhaustive search for uniform-step parameters reproducing a labeled grid:
// all a, b, c, d in [0, N-1] and starts (x1, y1) in [1, N]^2 are tried in
// lexicographic order and the first set whose sequence places every label k
// at its grid position is returned.  `labels` must be a permutation of
// 1..N^2, rows top-first.  N is bounded by max_n (resource error beyond).
std::optional<StepParams> reverse_search(
    const std::vector<std::vector<std::int64_t>>& labels,
    std::int64_t max_n = 10);

}  // namespace torsq

#endif  // TORSQ_SQUARE_HPP
