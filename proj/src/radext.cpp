#include "nilpoisson/radext.hpp"

#include <sstream>
#include <utility>

namespace nilpoisson {

namespace {

using Poly = std::vector<Rat>;  // dense, low degree first

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  rem = a;
  trim(rem);
  quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rat(0));
  const Rat& lead = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Rat f = rem.back() / lead;
    quo[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    trim(rem);
  }
  trim(quo);
}

}  // namespace

RadExt RadExt::generator(int m, const Rat& q) {
  if (m < 1) throw DomainError("radical degree must be positive");
  if (is_zero(q)) throw DomainError("radicand must be nonzero");
  std::vector<Rat> c(m, Rat(0));
  if (m == 1) {
    c[0] = q;
  } else {
    c[1] = 1;
  }
  return from_coeffs(m, q, std::move(c));
}

RadExt RadExt::from_coeffs(int m, const Rat& q, std::vector<Rat> c) {
  if (m < 1 || static_cast<int>(c.size()) != m) throw DomainError("radext coefficient count must equal m");
  RadExt out;
  out.m_ = m;
  out.q_ = q;
  out.c_ = std::move(c);
  out.normalize();
  return out;
}

void RadExt::normalize() {
  bool rational = true;
  for (int i = 1; i < m_; ++i)
    if (!is_zero(c_[i])) rational = false;
  if (rational) {
    c_.resize(1);
    m_ = 1;
    q_ = 1;
  }
}

Rat RadExt::to_rat() const {
  if (!is_rational()) throw DomainError("radext element is not rational: " + to_string(*this));
  return c_[0];
}

void common_extension(const RadExt& a, const RadExt& b, int& m, Rat& q) {
  if (a.degree() == 1) {
    m = b.degree();
    q = b.radicand();
  } else if (b.degree() == 1 || (a.degree() == b.degree() && a.radicand() == b.radicand())) {
    m = a.degree();
    q = a.radicand();
  } else {
    throw UnsupportedTower("cannot mix Q(" + to_string(a.radicand()) + "^(1/" + std::to_string(a.degree()) +
                           ")) with Q(" + to_string(b.radicand()) + "^(1/" + std::to_string(b.degree()) + "))");
  }
}

RadExt RadExt::operator-() const {
  RadExt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {
std::vector<Rat> lifted(const RadExt& a, int m) {
  std::vector<Rat> c = a.coeffs();
  c.resize(m, Rat(0));
  return c;
}
}  // namespace

RadExt operator+(const RadExt& a, const RadExt& b) {
  int m;
  Rat q;
  common_extension(a, b, m, q);
  auto c = lifted(a, m);
  for (int i = 0; i < b.degree(); ++i) c[i] += b.coeffs()[i];
  return RadExt::from_coeffs(m, q, std::move(c));
}

RadExt operator-(const RadExt& a, const RadExt& b) { return a + (-b); }

RadExt operator*(const RadExt& a, const RadExt& b) {
  int m;
  Rat q;
  common_extension(a, b, m, q);
  std::vector<Rat> c(m, Rat(0));
  for (int i = 0; i < a.degree(); ++i) {
    if (is_zero(a.coeffs()[i])) continue;
    for (int j = 0; j < b.degree(); ++j) {
      Rat t = a.coeffs()[i] * b.coeffs()[j];
      int k = i + j;
      if (k >= m) {
        t *= q;
        k -= m;
      }
      c[k] += t;
    }
  }
  return RadExt::from_coeffs(m, q, std::move(c));
}

bool operator==(const RadExt& a, const RadExt& b) {
  // normalized: rational values always have m == 1
  return a.m_ == b.m_ && (a.m_ == 1 || a.q_ == b.q_) && a.c_ == b.c_;
}

RadExt inverse(const RadExt& a) {
  if (is_zero(a)) throw NotInvertible("inverse of zero");
  if (a.is_rational()) return RadExt(inverse(a.c_[0]));
  // extended Euclid: s*a + t*(x^m - q) = g
  Poly mod(a.m_ + 1, Rat(0));
  mod[0] = -a.q_;
  mod[a.m_] = 1;
  Poly r0 = mod, r1 = a.c_;
  trim(r1);
  Poly s0, s1{Rat(1)};
  while (!r1.empty()) {
    Poly quo, rem;
    poly_divmod(r0, r1, quo, rem);
    Poly s2 = poly_sub(s0, poly_mul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw NotInvertible("zero divisor: x^" + std::to_string(a.m_) + " - (" + to_string(a.q_) +
                        ") is reducible and shares a factor with this element");
  Rat g = r0[0];
  std::vector<Rat> c(a.m_, Rat(0));
  for (std::size_t i = 0; i < s0.size(); ++i) c[i] = s0[i] / g;
  return RadExt::from_coeffs(a.m_, a.q_, std::move(c));
}

RadExt pow(const RadExt& a, long e) {
  if (e < 0) return pow(inverse(a), -e);
  RadExt out(1), base = a;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::string to_string(const RadExt& a) {
  if (a.is_rational()) return to_string(a.coeffs()[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < a.degree(); ++i) {
    const Rat& c = a.coeffs()[i];
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << "*";
      os << "r";
      if (i > 1) os << "^" << i;
    }
  }
  os << " [r^" << a.degree() << " = " << to_string(a.radicand()) << "]";
  return os.str();
}

RadExt rat_root(const Rat& q, int m) {
  if (m < 1) throw DomainError("root degree must be positive");
  if (is_zero(q)) throw DomainError("rat_root of zero");
  Rat r;
  if (exact_root(q, static_cast<unsigned>(m), r)) return RadExt(r);
  // q = c^d with d | m: an (m/d)-th root of c is an m-th root of q
  for (int d = m - 1; d >= 2; --d) {
    if (m % d != 0) continue;
    if (exact_root(q, static_cast<unsigned>(d), r)) return rat_root(r, m / d);
  }
  return RadExt::generator(m, q);
}

}  // namespace nilpoisson
