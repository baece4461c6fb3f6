#ifndef TORSQ_RESIDUE_HPP
#define TORSQ_RESIDUE_HPP

#include <cstdint>
#include <iosfwd>

#include "torsq/error.hpp"

namespace torsq {

// a mod n with the result in [0, n-1], for any sign of a.  n >= 1.
std::int64_t floor_mod(std::int64_t a, std::int64_t n);

// An integer mod N, kept in canonical form 0 <= value < N.  Negative inputs
// are reduced on construction.  Arithmetic between residues of different
// moduli throws.
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  // Representative in [1, N]: residue 0 maps to N.  Grid coordinates in the
  // uniform step construction are 1-based.
  std::int64_t rep1() const noexcept { return value_ == 0 ? modulus_ : value_; }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a);
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) {
    return !(a == b);
  }

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

// A pair (m, n) of residues sharing one modulus.
struct CoordPair {
  Residue m;
  Residue n;

  CoordPair(Residue m_in, Residue n_in);
  std::int64_t modulus() const noexcept { return m.modulus(); }

  friend bool operator==(const CoordPair& a, const CoordPair& b) {
    return a.m == b.m && a.n == b.n;
  }
};

// The index bijection {1, ..., N^2} -> (Z/N) x (Z/N),
//   k |-> (k-1 mod N, floor((k-1)/N) mod N).
// Throws a domain error for k outside [1, N^2].
CoordPair index_to_pair(std::int64_t k, std::int64_t n);

// Inverse of index_to_pair: (m, n) |-> 1 + m + N*n.
std::int64_t pair_to_index(const CoordPair& p);

// y with x*y == 1 (mod n).  Throws a domain error when gcd(x, n) != 1.
Residue inverse_mod(std::int64_t x, std::int64_t n);

}  // namespace torsq

#endif  // TORSQ_RESIDUE_HPP
