#pragma once

#include <ostream>

#include "cqs/arith.hpp"

namespace cqs {

// A point of the character lattice M = Z^2.
struct LatticeVector {
  Int x{0};
  Int y{0};

  LatticeVector() = default;
  LatticeVector(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.x - b.x, a.y - b.y};
  }
  LatticeVector operator-() const { return {-x, -y}; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  // Lexicographic; fixes the canonical order used in serialized output.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }

  bool is_zero() const { return x == 0 && y == 0; }
};

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  return os << "[" << v.x << "," << v.y << "]";
}

// A point of M tensor Q; vertices of section polyhedra are generally
// non-integral.
struct RationalVector {
  Rat x{0};
  Rat y{0};

  RationalVector() = default;
  RationalVector(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
  explicit RationalVector(const LatticeVector& v) : x(v.x), y(v.y) {}

  friend RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    return {a.x - b.x, a.y - b.y};
  }
  RationalVector operator-() const { return {-x, -y}; }

  friend RationalVector operator+(const RationalVector& a, const LatticeVector& b) {
    return a + RationalVector(b);
  }
  friend RationalVector operator+(const LatticeVector& a, const RationalVector& b) {
    return RationalVector(a) + b;
  }
  friend RationalVector operator-(const RationalVector& a, const LatticeVector& b) {
    return a - RationalVector(b);
  }
  friend RationalVector operator-(const LatticeVector& a, const RationalVector& b) {
    return RationalVector(a) - b;
  }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const RationalVector& a, const RationalVector& b) { return !(a == b); }

  bool is_integral() const { return rat_is_integral(x) && rat_is_integral(y); }
};

inline std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  return os << "[" << rat_str(v.x) << "," << rat_str(v.y) << "]";
}

// <u, ray> with the standard dot-product pairing between M and N.
inline Int pairing(const LatticeVector& u, const LatticeVector& ray) {
  return u.x * ray.x + u.y * ray.y;
}
inline Rat pairing(const RationalVector& u, const LatticeVector& ray) {
  return u.x * Rat(ray.x) + u.y * Rat(ray.y);
}

}  // namespace cqs
