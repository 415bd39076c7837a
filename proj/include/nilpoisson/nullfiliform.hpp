#pragma once

#include <vector>

#include "nilpoisson/algebra.hpp"

namespace nilpoisson {

// mu_0^n: e_i e_j = e_{i+j} for i + j <= n.
template <Scalar S>
CommAlgebra<S> mu0(int n) {
  if (n < 1) throw DomainError("mu0 needs n >= 1");
  CommAlgebra<S> a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) a.set_product(i, j, basis_vec<S>(n, i + j), false);
  return a;
}

// Automorphism of mu_0^n fixed by phi(e_1) = sum A_k e_k. Viewing mu_0^n as
// x C[x] / x^{n+1}, phi(e_i) = a(x)^i truncated, a(x) = sum A_k x^k; expanding
// the power is exactly the sum over compositions of j into i positive parts.
template <Scalar S>
class Automorphism {
 public:
  Automorphism() = default;

  static Automorphism build(std::vector<S> A) {
    const int n = static_cast<int>(A.size());
    if (n < 1) throw DomainError("automorphism needs n >= 1");
    if (is_zero(A[0])) throw NotInvertible("A_1 = 0 does not give an automorphism");
    Automorphism f;
    f.A_ = std::move(A);
    f.cols_.push_back(f.A_);
    for (int i = 2; i <= n; ++i) {
      const Vec<S>& prev = f.cols_.back();
      Vec<S> next = zero_vec<S>(n);
      // coefficient of x^j in a^{i-1} * a
      for (int p = 1; p <= n; ++p) {
        if (is_zero(prev[p - 1])) continue;
        for (int k = 1; p + k <= n; ++k)
          if (!is_zero(f.A_[k - 1])) next[p + k - 1] = next[p + k - 1] + prev[p - 1] * f.A_[k - 1];
      }
      f.cols_.push_back(std::move(next));
    }
    f.inv_a1_ = inverse(f.A_[0]);
    return f;
  }

  static Automorphism identity(int n) {
    std::vector<S> A(n, S(Rat(0)));
    A.at(0) = S(Rat(1));
    return build(std::move(A));
  }

  int dim() const { return static_cast<int>(A_.size()); }
  const std::vector<S>& params() const { return A_; }
  const Vec<S>& column(int i) const { return cols_.at(i - 1); }
  // M(row, col): coefficient of e_row in phi(e_col)
  const S& at(int row, int col) const { return cols_.at(col - 1).at(row - 1); }

  Vec<S> apply(const Vec<S>& x) const {
    check_dims(x.size(), dim(), "automorphism apply");
    Vec<S> out = zero_vec<S>(dim());
    for (int i = 1; i <= dim(); ++i) axpy(out, x[i - 1], cols_[i - 1]);
    return out;
  }

  // Forward substitution; the diagonal is A_1^i.
  Vec<S> apply_inverse(const Vec<S>& y) const {
    check_dims(y.size(), dim(), "automorphism inverse");
    const int n = dim();
    Vec<S> x = zero_vec<S>(n);
    S dinv(Rat(1));
    for (int i = 1; i <= n; ++i) {
      dinv = dinv * inv_a1_;
      S acc = y[i - 1];
      for (int k = 1; k < i; ++k)
        if (!is_zero(x[k - 1])) acc = acc - at(i, k) * x[k - 1];
      x[i - 1] = acc * dinv;
    }
    return x;
  }

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.cols_ == b.cols_; }

 private:
  std::vector<S> A_;
  std::vector<Vec<S>> cols_;
  S inv_a1_;
};

template <Scalar S>
Automorphism<S> build_automorphism(std::vector<S> A) {
  return Automorphism<S>::build(std::move(A));
}

// phi(e_i e_j) - phi(e_i) phi(e_j) over all basis pairs.
template <Scalar S>
ResidualReport<S> verify_automorphism(const Automorphism<S>& f) {
  const int n = f.dim();
  const CommAlgebra<S> a = mu0<S>(n);
  ResidualReport<S> rep{"automorphism", {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec<S> lhs = f.apply(a.product(i, j));
      Vec<S> rhs = a.multiply(f.column(i), f.column(j));
      detail::record(rep, {i, j}, detail::sub(lhs, rhs));
    }
  return rep;
}

// f o g. Transport composes contravariantly:
// push(compose(f, g), b) == push(g, push(f, b)).
template <Scalar S>
Automorphism<S> compose(const Automorphism<S>& f, const Automorphism<S>& g) {
  check_dims(f.dim(), g.dim(), "compose");
  Vec<S> a = f.apply(g.params());
  return Automorphism<S>::build(std::vector<S>(a.begin(), a.end()));
}

template <Scalar S>
Automorphism<S> invert(const Automorphism<S>& f) {
  Vec<S> a = f.apply_inverse(basis_vec<S>(f.dim(), 1));
  return Automorphism<S>::build(std::vector<S>(a.begin(), a.end()));
}

template <Scalar T, Scalar S>
Automorphism<T> convert(const Automorphism<S>& f) {
  std::vector<T> A;
  for (const auto& x : f.params()) A.push_back(T(x));
  return Automorphism<T>::build(std::move(A));
}

// b'(x, y) = phi^{-1} b(phi x, phi y); phi is then an isomorphism from
// (mu_0^n, ., b') onto (mu_0^n, ., b).
template <Scalar S>
Bracket<S> push_bracket(const Automorphism<S>& f, const Bracket<S>& b) {
  check_dims(f.dim(), b.dim(), "push_bracket");
  const int n = f.dim();
  Bracket<S> out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.set(i, j, f.apply_inverse(b.apply(f.column(i), f.column(j))));
  return out;
}

template <Scalar S>
PoissonPair<S> push_bracket(const Automorphism<S>& f, const PoissonPair<S>& p) {
  return PoissonPair<S>{p.product, push_bracket(f, p.bracket), p.delta};
}

// Only b'(e_i, e_j); cheaper when just one bracket entry is needed.
template <Scalar S>
Vec<S> pushed_entry(const Automorphism<S>& f, const Bracket<S>& b, int i, int j) {
  check_dims(f.dim(), b.dim(), "pushed_entry");
  return f.apply_inverse(b.apply(f.column(i), f.column(j)));
}

}  // namespace nilpoisson
