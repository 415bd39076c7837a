#pragma once

#include <string>
#include <vector>

#include "nilpoisson/rat.hpp"

namespace nilpoisson {

// Element of Q[x]/(x^m - q), stored as coefficients c_0..c_{m-1} of r^k where
// r is the formal generator. Elements with no r-part collapse to m = 1, so a
// rational value has exactly one representation regardless of where it came from.
class RadExt {
 public:
  RadExt() : m_(1), q_(1), c_{Rat(0)} {}
  RadExt(const Rat& v) : m_(1), q_(1), c_{v} {}  // NOLINT: implicit on purpose
  RadExt(int v) : RadExt(Rat(v)) {}              // NOLINT

  static RadExt generator(int m, const Rat& q);
  static RadExt from_coeffs(int m, const Rat& q, std::vector<Rat> c);

  int degree() const { return m_; }
  const Rat& radicand() const { return q_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_rational() const { return m_ == 1; }
  Rat to_rat() const;

  RadExt operator-() const;
  friend RadExt operator+(const RadExt& a, const RadExt& b);
  friend RadExt operator-(const RadExt& a, const RadExt& b);
  friend RadExt operator*(const RadExt& a, const RadExt& b);
  RadExt& operator+=(const RadExt& b) { return *this = *this + b; }
  RadExt& operator-=(const RadExt& b) { return *this = *this - b; }
  RadExt& operator*=(const RadExt& b) { return *this = *this * b; }
  friend bool operator==(const RadExt& a, const RadExt& b);

  friend RadExt inverse(const RadExt& a);

 private:
  int m_;
  Rat q_;
  std::vector<Rat> c_;
  void normalize();
};

inline bool is_zero(const RadExt& a) { return a.is_rational() && is_zero(a.coeffs()[0]); }
RadExt pow(const RadExt& a, long e);
std::string to_string(const RadExt& a);

// An m-th root of q: rational when one exists, otherwise a generator of the
// smallest pure extension reached by peeling perfect-power factors off m.
RadExt rat_root(const Rat& q, int m);

// The extension two elements share, or throws UnsupportedTower.
void common_extension(const RadExt& a, const RadExt& b, int& m, Rat& q);

}  // namespace nilpoisson
