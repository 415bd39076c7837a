#include "nilpoisson/rat.hpp"

#include <cctype>

namespace nilpoisson {

Rat parse_rat(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw DomainError("empty rational string");
  // mpq accepts things like "0x10" and "+"; keep the grammar to [-]digits[/digits]
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  std::size_t slash = t.find('/');
  auto digits = [&](std::size_t a, std::size_t b) {
    if (a >= b) return false;
    for (std::size_t k = a; k < b; ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(i, t.size())
                                        : digits(i, slash) && digits(slash + 1, t.size());
  if (!ok) throw DomainError("malformed rational '" + std::string(s) + "'");
  if (t[0] == '+') t.erase(0, 1);
  Rat r;
  if (r.set_str(t, 10) != 0) throw DomainError("malformed rational '" + std::string(s) + "'");
  if (sgn(r.get_den()) == 0) throw DomainError("zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

Rat pow(const Rat& r, long e) {
  if (e < 0) return pow(inverse(r), -e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  out.canonicalize();
  return out;
}

bool exact_root(const Rat& q, unsigned m, Rat& out) {
  if (m == 0) throw DomainError("zeroth root");
  if (sgn(q) < 0 && m % 2 == 0) return false;
  mpz_class num = abs(q.get_num()), den = q.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), m)) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), m)) return false;
  if (sgn(q) < 0) rn = -rn;
  out = Rat(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace nilpoisson
