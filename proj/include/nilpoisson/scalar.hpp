#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "nilpoisson/mpoly.hpp"
#include "nilpoisson/radext.hpp"
#include "nilpoisson/rat.hpp"

namespace nilpoisson {

// What the structure-constant code needs from a coefficient domain.
template <class S>
concept Scalar = std::regular<S> && requires(const S& a, const S& b, const Rat& r) {
  { S(r) };
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::same_as<bool>;
  { inverse(a) } -> std::convertible_to<S>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <class S>
S scalar_pow(const S& a, long e) {
  if (e < 0) return scalar_pow(S(inverse(a)), -e);
  S out(Rat(1)), base = a;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

// Dense univariate polynomial over S in one formal variable. Used for the
// one-parameter shift families during canonicalization.
template <class S>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rat& c) {  // NOLINT
    if (!nilpoisson::is_zero(c)) c_.push_back(S(c));
  }
  UPoly(const S& c) requires(!std::same_as<S, Rat>) {  // NOLINT
    if (!is_zero(c)) c_.push_back(c);
  }
  static UPoly x() {
    UPoly p;
    p.c_ = {S(Rat(0)), S(Rat(1))};
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  S coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : S(Rat(0)); }
  S eval(const S& v) const {
    S acc(Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  UPoly operator-() const {
    UPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), S(Rat(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = out.c_[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] = out.c_[i] + b.c_[i];
    out.trim();
    return out;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out;
    if (a.c_.empty() || b.c_.empty()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, S(Rat(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    out.trim();
    return out;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) = default;
  friend bool is_zero(const UPoly& a) { return a.c_.empty(); }
  // Constants are the only units of S[c].
  friend UPoly inverse(const UPoly& a) {
    if (a.degree() != 0) throw NotInvertible("only nonzero constants are invertible in S[c]");
    return UPoly(S(inverse(a.c_[0])));
  }
  friend std::string to_string(const UPoly& a) {
    if (a.c_.empty()) return "0";
    std::string s;
    for (int k = a.degree(); k >= 0; --k) {
      if (is_zero(a.c_[k])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(a.c_[k]) + ")";
      if (k > 0) s += "*c^" + std::to_string(k);
    }
    return s;
  }

 private:
  std::vector<S> c_;
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
};

}  // namespace nilpoisson
