#include "nilpoisson/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilpoisson {

namespace {

const MPoly::Registry& empty_registry() {
  static const MPoly::Registry r = std::make_shared<const std::vector<std::string>>();
  return r;
}

void add_term(MPoly::Terms& t, const MPoly::Exps& e, const Rat& c) {
  if (is_zero(c)) return;
  auto it = t.find(e);
  if (it == t.end()) {
    t.emplace(e, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) t.erase(it);
  }
}

}  // namespace

bool MPoly::GrlexDesc::operator()(const Exps& a, const Exps& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly() : reg_(empty_registry()) {}

MPoly::MPoly(const Rat& c) : reg_(empty_registry()) {
  if (!nilpoisson::is_zero(c)) terms_.emplace(Exps{}, c);
}

MPoly::MPoly(int c) : MPoly(Rat(c)) {}

MPoly MPoly::var(const std::string& name, int exponent) {
  MPoly p;
  p.reg_ = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{name});
  p.terms_.emplace(Exps{exponent}, Rat(1));
  return p;
}

MPoly MPoly::from_terms(std::vector<std::string> names, const std::vector<std::pair<Exps, Rat>>& terms) {
  MPoly p;
  std::size_t k = names.size();
  p.reg_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  for (const auto& [e, c] : terms) {
    if (e.size() != k) throw DomainError("exponent vector length does not match variable count");
    add_term(p.terms_, e, c);
  }
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + str());
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

bool MPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

int MPoly::degree_in(const std::string& name) const {
  auto it = std::find(reg_->begin(), reg_->end(), name);
  if (it == reg_->end()) return 0;
  std::size_t i = it - reg_->begin();
  int d = 0;
  bool any = false;
  for (const auto& [e, c] : terms_) {
    d = any ? std::max(d, e[i]) : e[i];
    any = true;
  }
  return d;
}

MPoly MPoly::coeff(const std::string& name, int k) const {
  auto it = std::find(reg_->begin(), reg_->end(), name);
  MPoly out;
  out.reg_ = reg_;
  if (it == reg_->end()) {
    if (k == 0) out.terms_ = terms_;
    return out;
  }
  std::size_t i = it - reg_->begin();
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exps f = e;
    f[i] = 0;
    add_term(out.terms_, f, c);
  }
  return out;
}

bool MPoly::is_pure_power(std::string& name) const {
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  int found = -1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (e[i] < 0 || found >= 0) return false;
    found = static_cast<int>(i);
  }
  if (found < 0) return false;
  name = (*reg_)[found];
  return true;
}

std::vector<std::string> MPoly::support() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < reg_->size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        out.push_back((*reg_)[i]);
        break;
      }
  return out;
}

MPoly MPoly::reindexed(const Registry& r) const {
  if (r == reg_) return *this;
  std::vector<std::size_t> where(reg_->size());
  for (std::size_t i = 0; i < reg_->size(); ++i) {
    auto it = std::find(r->begin(), r->end(), (*reg_)[i]);
    if (it == r->end()) throw DomainError("variable missing from target registry: " + (*reg_)[i]);
    where[i] = it - r->begin();
  }
  MPoly out;
  out.reg_ = r;
  for (const auto& [e, c] : terms_) {
    Exps f(r->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void MPoly::align(const MPoly& a, const MPoly& b, MPoly& x, MPoly& y) {
  if (a.reg_ == b.reg_ || *a.reg_ == *b.reg_) {
    x = a;
    y = b.reindexed(a.reg_);
    return;
  }
  // b constant: nothing to rename
  if (b.reg_->empty()) {
    x = a;
    y.reg_ = a.reg_;
    y.terms_.clear();
    for (const auto& [e, c] : b.terms_) y.terms_.emplace(Exps(a.reg_->size(), 0), c);
    return;
  }
  if (a.reg_->empty()) {
    align(b, a, y, x);
    return;
  }
  std::vector<std::string> names = *a.reg_;
  for (const auto& v : *b.reg_)
    if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
  Registry r = names.size() == a.reg_->size() ? a.reg_ : std::make_shared<const std::vector<std::string>>(names);
  x = a.reindexed(r);
  y = b.reindexed(r);
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly x, y;
  MPoly::align(a, b, x, y);
  for (const auto& [e, c] : y.terms_) add_term(x.terms_, e, c);
  return x;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly x, y;
  MPoly::align(a, b, x, y);
  MPoly out;
  out.reg_ = x.reg_;
  MPoly::Exps e(x.reg_->size());
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rat c = ca * cb;
      add_term(out.terms_, e, c);
    }
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  MPoly x, y;
  MPoly::align(a, b, x, y);
  return x.terms_ == y.terms_;
}

MPoly MPoly::subs(const std::map<std::string, MPoly>& values) const {
  std::vector<const MPoly*> img(reg_->size(), nullptr);
  for (std::size_t i = 0; i < reg_->size(); ++i) {
    auto it = values.find((*reg_)[i]);
    if (it != values.end()) img[i] = &it->second;
  }
  // variables that stay symbolic keep their slot in a reduced registry
  std::vector<std::string> keep;
  std::vector<int> keep_at(reg_->size(), -1);
  for (std::size_t i = 0; i < reg_->size(); ++i)
    if (!img[i]) {
      keep_at[i] = static_cast<int>(keep.size());
      keep.push_back((*reg_)[i]);
    }
  MPoly out;
  std::map<std::pair<std::size_t, int>, MPoly> pow_cache;
  auto power = [&](std::size_t i, int k) -> const MPoly& {
    auto key = std::make_pair(i, k);
    auto it = pow_cache.find(key);
    if (it == pow_cache.end()) it = pow_cache.emplace(key, pow(*img[i], k)).first;
    return it->second;
  };
  Registry kept = std::make_shared<const std::vector<std::string>>(keep);
  for (const auto& [e, c] : terms_) {
    MPoly t;
    t.reg_ = kept;
    Exps f(keep.size(), 0);
    bool vanished = false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (img[i] && e[i] > 0 && img[i]->is_zero()) vanished = true;
    if (vanished) continue;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!img[i]) f[keep_at[i]] = e[i];
    t.terms_.emplace(f, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (img[i] && e[i] != 0) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

Rat MPoly::eval(const std::map<std::string, Rat>& values) const {
  std::vector<const Rat*> val(reg_->size(), nullptr);
  for (std::size_t i = 0; i < reg_->size(); ++i) {
    auto it = values.find((*reg_)[i]);
    if (it != values.end()) val[i] = &it->second;
  }
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!val[i]) throw DomainError("no value for variable " + (*reg_)[i]);
      t *= pow(*val[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  Rat lead = inverse(terms_.begin()->second);
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c *= lead;
  return out;
}

MPoly inverse(const MPoly& p) {
  if (p.size() != 1) throw NotInvertible("only monomials are invertible: " + p.str());
  const auto& [e, c] = *p.terms().begin();
  MPoly::Exps f = e;
  for (int& x : f) x = -x;
  return MPoly::from_terms(p.vars(), {{f, inverse(c)}});
}

MPoly pow(const MPoly& p, long e) {
  if (e < 0) return pow(inverse(p), -e);
  MPoly out(1), base = p;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = sgn(c) < 0;
    Rat a = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << "*";
      mono << (*reg_)[i];
      if (e[i] != 1) mono << "^" << e[i];
      has_var = true;
    }
    if (!has_var) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace nilpoisson
