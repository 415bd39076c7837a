#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nilpoisson/rat.hpp"

namespace nilpoisson {

// Sparse Laurent polynomial over Q in named variables. Exponents are signed so
// that division by a monomial (typically a power of A_1) stays exact. Terms
// are kept in graded-lex descending order over the registry's variable order.
class MPoly {
 public:
  using Exps = std::vector<int>;
  struct GrlexDesc {
    bool operator()(const Exps& a, const Exps& b) const;
  };
  using Terms = std::map<Exps, Rat, GrlexDesc>;
  using Registry = std::shared_ptr<const std::vector<std::string>>;

  MPoly();
  MPoly(const Rat& c);  // NOLINT
  MPoly(int c);         // NOLINT
  static MPoly var(const std::string& name, int exponent = 1);

  const std::vector<std::string>& vars() const { return *reg_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // throws unless constant
  bool has_negative_exponent() const;

  // Largest exponent of `name` occurring (0 if absent).
  int degree_in(const std::string& name) const;
  // Coefficient of name^k, as a polynomial in the remaining variables.
  MPoly coeff(const std::string& name, int k) const;
  // Single term c * v^k with k > 0 and no other variable: reports v.
  bool is_pure_power(std::string& name) const;
  // Names that actually occur with a nonzero exponent.
  std::vector<std::string> support() const;

  MPoly subs(const std::map<std::string, MPoly>& values) const;
  Rat eval(const std::map<std::string, Rat>& values) const;
  // Divide by the leading coefficient (leading term gets coefficient 1).
  MPoly monic() const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  std::string str() const;

  // Raw construction from a registry and terms (zero coefficients dropped).
  static MPoly from_terms(std::vector<std::string> names, const std::vector<std::pair<Exps, Rat>>& terms);

 private:
  Registry reg_;
  Terms terms_;

  MPoly reindexed(const Registry& r) const;
  static void align(const MPoly& a, const MPoly& b, MPoly& x, MPoly& y);
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
// Only monomials (and nonzero constants) are invertible in the Laurent ring.
MPoly inverse(const MPoly& p);
MPoly pow(const MPoly& p, long e);
inline std::string to_string(const MPoly& p) { return p.str(); }

}  // namespace nilpoisson
