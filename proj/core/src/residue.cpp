#include "torsq/residue.hpp"

#include <numeric>
#include <ostream>
#include <string>

namespace torsq {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Residue::Residue(std::int64_t value, std::int64_t modulus)
    : modulus_(modulus) {
  if (modulus < 1) {
    throw Error(ErrorKind::kDomain,
                "modulus must be >= 1, got " + std::to_string(modulus));
  }
  value_ = floor_mod(value, modulus);
}

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorKind::kDomain,
                "modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                    std::to_string(b.modulus()));
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ * b.value_, a.modulus_);
}

Residue operator-(const Residue& a) { return Residue(-a.value_, a.modulus_); }

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus() << ")";
}

CoordPair::CoordPair(Residue m_in, Residue n_in)
    : m(m_in), n(n_in) {
  if (m.modulus() != n.modulus()) {
    throw Error(ErrorKind::kDomain,
                "coordinate pair components must share one modulus");
  }
}

CoordPair index_to_pair(std::int64_t k, std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kDomain,
                "grid order must be >= 1, got " + std::to_string(n));
  }
  if (k < 1 || k > n * n) {
    throw Error(ErrorKind::kDomain,
                "index " + std::to_string(k) + " outside [1, " +
                    std::to_string(n * n) + "]");
  }
  return CoordPair(Residue(k - 1, n), Residue((k - 1) / n, n));
}

std::int64_t pair_to_index(const CoordPair& p) {
  return 1 + p.m.value() + p.modulus() * p.n.value();
}

Residue inverse_mod(std::int64_t x, std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kDomain,
                "modulus must be >= 1, got " + std::to_string(n));
  }
  // extended Euclid on (x mod n, n)
  std::int64_t a = floor_mod(x, n);
  std::int64_t r0 = n, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) {
    throw Error(ErrorKind::kDomain,
                std::to_string(x) + " is not invertible mod " +
                    std::to_string(n) + " (gcd = " + std::to_string(r0) + ")");
  }
  return Residue(t0, n);
}

}  // namespace torsq
