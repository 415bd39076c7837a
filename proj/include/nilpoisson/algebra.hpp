#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilpoisson/scalar.hpp"

namespace nilpoisson {

// Coefficient vectors are 0-based storage for 1-based basis labels:
// v[t-1] is the coefficient of e_t.
template <Scalar S>
using Vec = std::vector<S>;

template <Scalar S>
Vec<S> zero_vec(int n) {
  return Vec<S>(n, S(Rat(0)));
}

template <Scalar S>
Vec<S> basis_vec(int n, int i) {
  Vec<S> v = zero_vec<S>(n);
  v.at(i - 1) = S(Rat(1));
  return v;
}

template <Scalar S>
bool is_zero_vec(const Vec<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <Scalar S>
void axpy(Vec<S>& y, const S& a, const Vec<S>& x) {
  if (is_zero(a)) return;
  for (std::size_t t = 0; t < x.size(); ++t)
    if (!is_zero(x[t])) y[t] = y[t] + a * x[t];
}

inline void check_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

template <Scalar S>
class CommAlgebra {
 public:
  explicit CommAlgebra(int n = 0) : n_(n), t_(static_cast<std::size_t>(n) * n, zero_vec<S>(n)) {
    if (n < 0) throw DomainError("negative dimension");
  }
  int dim() const { return n_; }
  const Vec<S>& product(int i, int j) const { return t_.at(idx(i, j)); }
  // Sets e_i*e_j; commutativity is stored, so the mirror entry is set too
  // unless the caller asks otherwise (used to build deliberately bad inputs).
  void set_product(int i, int j, Vec<S> v, bool mirror = true) {
    check_dims(v.size(), n_, "set_product");
    if (mirror) t_.at(idx(j, i)) = v;
    t_.at(idx(i, j)) = std::move(v);
  }
  Vec<S> multiply(const Vec<S>& x, const Vec<S>& y) const {
    check_dims(x.size(), n_, "multiply");
    check_dims(y.size(), n_, "multiply");
    Vec<S> out = zero_vec<S>(n_);
    for (int i = 1; i <= n_; ++i) {
      if (is_zero(x[i - 1])) continue;
      for (int j = 1; j <= n_; ++j) {
        if (is_zero(y[j - 1])) continue;
        axpy(out, S(x[i - 1] * y[j - 1]), product(i, j));
      }
    }
    return out;
  }
  friend bool operator==(const CommAlgebra&, const CommAlgebra&) = default;

 private:
  int n_;
  std::vector<Vec<S>> t_;
  std::size_t idx(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw DomainError("basis index out of range");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
};

template <Scalar S>
class Bracket {
 public:
  explicit Bracket(int n = 0) : n_(n), t_(n > 1 ? static_cast<std::size_t>(n) * (n - 1) / 2 : 0, zero_vec<S>(n)) {
    if (n < 0) throw DomainError("negative dimension");
  }
  int dim() const { return n_; }

  Vec<S> entry(int i, int j) const {
    if (i == j) {
      range(i);
      return zero_vec<S>(n_);
    }
    if (i < j) return t_[idx(i, j)];
    Vec<S> v = t_[idx(j, i)];
    for (auto& x : v) x = -x;
    return v;
  }
  // Reference to the stored [e_i, e_j], i < j.
  const Vec<S>& upper(int i, int j) const { return t_[idx(i, j)]; }

  void set(int i, int j, Vec<S> v) {
    check_dims(v.size(), n_, "bracket set");
    if (i == j) {
      if (!is_zero_vec(v)) throw DomainError("[e_i, e_i] must vanish");
      return;
    }
    if (i > j) {
      for (auto& x : v) x = -x;
      std::swap(i, j);
    }
    t_[idx(i, j)] = std::move(v);
  }
  // [e_i, e_j] += c e_t
  void add(int i, int j, int t, const S& c) {
    if (i == j) throw DomainError("[e_i, e_i] must vanish");
    S s = i < j ? c : S(-c);
    if (i > j) std::swap(i, j);
    auto& v = t_[idx(i, j)];
    v.at(t - 1) = v.at(t - 1) + s;
  }

  Vec<S> apply(const Vec<S>& x, const Vec<S>& y) const {
    check_dims(x.size(), n_, "bracket_apply");
    check_dims(y.size(), n_, "bracket_apply");
    Vec<S> out = zero_vec<S>(n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) {
        // x_i y_j - x_j y_i multiplies [e_i, e_j]
        S c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
        axpy(out, c, t_[idx(i, j)]);
      }
    return out;
  }

  bool is_zero() const {
    for (const auto& v : t_)
      if (!is_zero_vec(v)) return false;
    return true;
  }
  friend bool operator==(const Bracket&, const Bracket&) = default;

 private:
  int n_;
  std::vector<Vec<S>> t_;
  void range(int i) const {
    if (i < 1 || i > n_) throw DomainError("basis index out of range");
  }
  std::size_t idx(int i, int j) const {
    range(i);
    range(j);
    // row-major over the strict upper triangle
    return static_cast<std::size_t>(i - 1) * (2 * n_ - i) / 2 + (j - i - 1);
  }
};

template <Scalar S>
struct PoissonPair {
  CommAlgebra<S> product;
  Bracket<S> bracket;
  S delta;

  int dim() const { return product.dim(); }
  friend bool operator==(const PoissonPair&, const PoissonPair&) = default;
};

template <Scalar S>
PoissonPair<S> make_pair(CommAlgebra<S> a, Bracket<S> b, S delta) {
  check_dims(a.dim(), b.dim(), "poisson pair");
  return PoissonPair<S>{std::move(a), std::move(b), std::move(delta)};
}

// Change of coefficient domain along T's converting constructor.
template <Scalar T, Scalar S>
Vec<T> convert(const Vec<S>& v) {
  Vec<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(T(x));
  return out;
}

template <Scalar T, Scalar S>
CommAlgebra<T> convert(const CommAlgebra<S>& a) {
  CommAlgebra<T> out(a.dim());
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = 1; j <= a.dim(); ++j) out.set_product(i, j, convert<T>(a.product(i, j)), false);
  return out;
}

template <Scalar T, Scalar S>
Bracket<T> convert(const Bracket<S>& b) {
  Bracket<T> out(b.dim());
  for (int i = 1; i <= b.dim(); ++i)
    for (int j = i + 1; j <= b.dim(); ++j) out.set(i, j, convert<T>(b.upper(i, j)));
  return out;
}

template <Scalar T, Scalar S>
PoissonPair<T> convert(const PoissonPair<S>& p) {
  return PoissonPair<T>{convert<T>(p.product), convert<T>(p.bracket), T(p.delta)};
}

enum class Identity { commutative, associative, jacobi, delta_poisson, transposed, cyclic_dp, cyclic_tdp, mixed_trivial };

Identity parse_identity(std::string_view s);
std::string identity_name(Identity k);

template <Scalar S>
struct ResidualEntry {
  std::vector<int> indices;  // basis labels of the (ordered) pair or triple
  int coord;                 // output coordinate t of e_t
  S value;
  std::string part;          // which half of a two-part check, else empty
};

template <Scalar S>
struct ResidualReport {
  std::string kind;
  std::vector<ResidualEntry<S>> entries;
  bool all_zero() const { return entries.empty(); }
};

namespace detail {

template <Scalar S>
void record(ResidualReport<S>& rep, std::vector<int> idx, const Vec<S>& v, const std::string& part = {}) {
  for (std::size_t t = 0; t < v.size(); ++t)
    if (!is_zero(v[t])) rep.entries.push_back({idx, static_cast<int>(t) + 1, v[t], part});
}

template <Scalar S>
Vec<S> sub(Vec<S> a, const Vec<S>& b) {
  for (std::size_t t = 0; t < a.size(); ++t) a[t] = a[t] - b[t];
  return a;
}

template <Scalar S>
Vec<S> add(Vec<S> a, const Vec<S>& b) {
  for (std::size_t t = 0; t < a.size(); ++t) a[t] = a[t] + b[t];
  return a;
}

template <Scalar S>
Vec<S> scale(const S& c, Vec<S> a) {
  for (auto& x : a) x = c * x;
  return a;
}

}  // namespace detail

// Evaluates the identity on every ordered basis pair/triple and records each
// nonzero coordinate. Never short-circuits.
template <Scalar S>
ResidualReport<S> check_identity(const PoissonPair<S>& p, Identity kind) {
  using detail::add;
  using detail::record;
  using detail::scale;
  using detail::sub;
  const int n = p.dim();
  check_dims(p.product.dim(), p.bracket.dim(), "check_identity");
  ResidualReport<S> rep{identity_name(kind), {}};
  auto e = [&](int i) { return basis_vec<S>(n, i); };
  auto mul = [&](const Vec<S>& x, const Vec<S>& y) { return p.product.multiply(x, y); };
  auto br = [&](const Vec<S>& x, const Vec<S>& y) { return p.bracket.apply(x, y); };
  const S& d = p.delta;

  if (kind == Identity::commutative) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) record(rep, {i, j}, sub(p.product.product(i, j), p.product.product(j, i)));
    return rep;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        const Vec<S> x = e(a), y = e(b), z = e(c);
        switch (kind) {
          case Identity::associative:
            record(rep, {a, b, c}, sub(mul(mul(x, y), z), mul(x, mul(y, z))));
            break;
          case Identity::jacobi:
            record(rep, {a, b, c}, add(add(br(br(x, y), z), br(br(y, z), x)), br(br(z, x), y)));
            break;
          case Identity::delta_poisson:
            // [x, y z] = d ([x,y] z + y [x,z])
            record(rep, {a, b, c}, sub(br(x, mul(y, z)), scale(d, add(mul(br(x, y), z), mul(y, br(x, z))))));
            break;
          case Identity::transposed:
            // d z [x,y] = [z x, y] + [x, z y]
            record(rep, {a, b, c}, sub(scale(d, mul(z, br(x, y))), add(br(mul(z, x), y), br(x, mul(z, y)))));
            break;
          case Identity::cyclic_dp:
            record(rep, {a, b, c}, add(add(br(x, mul(y, z)), br(y, mul(z, x))), br(z, mul(x, y))));
            break;
          case Identity::cyclic_tdp:
            record(rep, {a, b, c}, add(add(mul(x, br(y, z)), mul(y, br(z, x))), mul(z, br(x, y))));
            break;
          case Identity::mixed_trivial:
            record(rep, {a, b, c}, mul(x, br(y, z)), "x.[y,z]");
            record(rep, {a, b, c}, br(mul(x, y), z), "[x.y,z]");
            break;
          case Identity::commutative:
            break;
        }
      }
  return rep;
}

struct PowerDims {
  std::vector<int> dims;  // dim A^1, dim A^2, ... ending in 0 when nilpotent
  bool nilpotent = false;
  bool null_filiform = false;
  int nilpotency_index = 0;  // smallest i with A^i = 0, or 0 if not nilpotent
};

PowerDims power_dims(const CommAlgebra<Rat>& a);

// Rank and row-reduced basis of a list of rational vectors.
std::vector<Vec<Rat>> span_basis(std::vector<Vec<Rat>> rows);

}  // namespace nilpoisson
