#include "nilpoisson/families.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace nilpoisson {

namespace {
constexpr std::array<std::pair<FamilyTag, const char*>, 8> kTagNames{{
    {FamilyTag::TP0, "TP0"},
    {FamilyTag::TP1, "TP1"},
    {FamilyTag::TP2, "TP2"},
    {FamilyTag::TPdelta, "TPdelta"},
    {FamilyTag::Dim2, "Dim2"},
    {FamilyTag::Dim3, "Dim3"},
    {FamilyTag::Dim4, "Dim4"},
    {FamilyTag::TrivialDeltaPoisson, "TrivialDeltaPoisson"},
}};
}  // namespace

FamilyTag parse_tag(std::string_view s) {
  for (const auto& [t, name] : kTagNames)
    if (s == name) return t;
  throw DomainError("unknown family tag '" + std::string(s) + "'");
}

std::string tag_name(FamilyTag t) {
  for (const auto& [tag, name] : kTagNames)
    if (tag == t) return name;
  return "?";
}

void check_family_dims(FamilyTag tag, int n) {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw DomainError(tag_name(tag) + " requires " + what + ", got n=" + std::to_string(n));
  };
  switch (tag) {
    case FamilyTag::TP0:
    case FamilyTag::TP1:
    case FamilyTag::TP2:
      need(n >= 2, "n >= 2");
      break;
    case FamilyTag::TPdelta:
      need(n >= 5, "n >= 5");
      break;
    case FamilyTag::Dim2:
      need(n == 2, "n = 2");
      break;
    case FamilyTag::Dim3:
      need(n == 3, "n = 3");
      break;
    case FamilyTag::Dim4:
      need(n == 4, "n = 4");
      break;
    case FamilyTag::TrivialDeltaPoisson:
      need(n >= 1, "n >= 1");
      break;
  }
}

std::vector<int> slot_labels(FamilyTag tag, int n) {
  check_family_dims(tag, n);
  std::vector<int> out;
  auto range = [&](int a, int b) {
    for (int t = a; t <= b; ++t) out.push_back(t);
  };
  switch (tag) {
    case FamilyTag::TP0:
    case FamilyTag::Dim2:
    case FamilyTag::Dim3:
    case FamilyTag::Dim4:
      range(1, n);
      break;
    case FamilyTag::TP1:
    case FamilyTag::TP2:
      range(2, n);
      break;
    case FamilyTag::TPdelta:
      range(n - 2, n);
      break;
    case FamilyTag::TrivialDeltaPoisson:
      break;
  }
  return out;
}

FamilySpec<MPoly> symbolic_family(FamilyTag tag, int n, const MPoly& delta) {
  FamilySpec<MPoly> f{tag, n, delta, {}};
  for (int t : slot_labels(tag, n)) f.alphas.push_back(MPoly::var("alpha_" + std::to_string(t)));
  return f;
}

FamilySpec<Rat> CatalogEntry::specialize(const Rat& alpha) const {
  FamilySpec<Rat> f{spec.tag, spec.n, spec.delta.constant_value(), {}};
  for (const auto& a : spec.alphas) f.alphas.push_back(a.is_constant() ? a.constant_value() : alpha);
  return f;
}

std::string spec_label(FamilyTag tag, int n, const std::string& delta, const std::vector<std::string>& alphas) {
  std::ostringstream os;
  os << tag_name(tag) << "[n=" << n << ", delta=" << delta << "](";
  for (std::size_t k = 0; k < alphas.size(); ++k) os << (k ? ", " : "") << alphas[k];
  os << ")";
  return os.str();
}

SpecialDeltas special_deltas(int n) {
  std::set<Rat> vals;
  SpecialDeltas out;
  vals.insert(rat(n - 2, 2));
  vals.insert(rat(n - 1, 2));
  // delta^2 + 3 delta - (2n - 4): rational roots iff 8n - 7 is a square
  mpz_class disc = 8 * n - 7, root;
  if (disc >= 0 && mpz_root(root.get_mpz_t(), disc.get_mpz_t(), 2)) {
    vals.insert(rat(-3 + root.get_si(), 2));
    vals.insert(rat(-3 - root.get_si(), 2));
  } else {
    out.conditions.push_back("delta^2 + 3*delta - " + std::to_string(2 * n - 4));
  }
  if (n == 4) {
    vals.insert(Rat(-4));
    vals.insert(rat(3, 2));
  }
  for (Rat v : vals) {
    v.canonicalize();
    out.values.push_back(v);
  }
  return out;
}

namespace {

class CatalogBuilder {
 public:
  CatalogBuilder(FamilyTag tag, int n, const Rat& delta) : tag_(tag), n_(n), delta_(delta) {}

  // ones: basis labels set to 1; mod: label holding the modulus (0 = none)
  void add(std::vector<int> ones, int mod = 0, bool nonzero = true) {
    CatalogEntry e;
    e.spec = FamilySpec<MPoly>{tag_, n_, MPoly(delta_), {}};
    std::vector<std::string> shown;
    for (int t : slot_labels(tag_, n_)) {
      if (t == mod) {
        e.spec.alphas.push_back(MPoly::var("alpha"));
        shown.push_back("alpha");
      } else {
        bool one = std::find(ones.begin(), ones.end(), t) != ones.end();
        e.spec.alphas.push_back(MPoly(one ? 1 : 0));
        shown.push_back(one ? "1" : "0");
      }
    }
    e.modulus_slot = mod;
    e.modulus_nonzero = mod != 0 && nonzero;
    e.label = spec_label(tag_, n_, to_string(delta_), shown);
    if (mod != 0) e.label += nonzero ? ", alpha != 0" : ", alpha any";
    out_.push_back(std::move(e));
  }
  void zero() { add({}); }
  std::vector<CatalogEntry> take() { return std::move(out_); }

 private:
  FamilyTag tag_;
  int n_;
  Rat delta_;
  std::vector<CatalogEntry> out_;
};

}  // namespace

std::vector<CatalogEntry> canonical_catalog(int n, const Rat& delta) {
  if (n < 2) throw DomainError("catalog needs n >= 2");
  const Rat d = delta;
  if (is_zero(d)) {
    CatalogBuilder b(FamilyTag::TP0, n, d);
    for (int s = 1; s <= n; ++s) {
      if (s == 3)
        b.add({}, 3);
      else
        b.add({s});
    }
    b.zero();
    return b.take();
  }
  if (n == 2) {
    CatalogBuilder b(FamilyTag::Dim2, n, d);
    b.add({2});
    b.zero();
    return b.take();
  }
  if (n == 3) {
    CatalogBuilder b(FamilyTag::Dim3, n, d);
    if (d == -1) b.add({1});
    b.add({2});
    if (d == 1) b.add({2}, 3);
    b.add({}, 3);
    b.zero();
    return b.take();
  }
  if (n == 4) {
    CatalogBuilder b(FamilyTag::Dim4, n, d);
    // Jacobi on (e_1, e_2, e_3) leaves alpha_2^2 delta(delta-1)(delta-2)(delta+1) e_4
    if (d == 1 || d == 2 || d == -1) {
      b.add({2});
      if (d == 1) {
        b.add({2}, 3);
        b.add({2}, 4);
      }
    }
    b.add({}, 3);
    if (d == rat(3, 2)) b.add({4}, 3);
    b.add({4});
    b.zero();
    return b.take();
  }
  if (d == 1) {
    CatalogBuilder b(FamilyTag::TP1, n, d);
    b.add({2});
    for (int k = 3; k <= n; ++k) b.add({2}, k);
    b.add({}, 3);
    for (int s = 4; s <= n; ++s) b.add({s});
    b.zero();
    return b.take();
  }
  if (d == 2) {
    CatalogBuilder b(FamilyTag::TP2, n, d);
    b.add({2});
    b.add({}, 3);
    for (int s = 4; s <= n; ++s) {
      if (2 * s - 3 <= n)
        b.add({s}, 2 * s - 3, false);
      else
        b.add({s});
    }
    b.zero();
    return b.take();
  }
  CatalogBuilder b(FamilyTag::TPdelta, n, d);
  const Rat c1 = 2 * d - n + 2;          // A_2 coefficient on alpha_{n-1}
  const Rat c2 = d * d + 3 * d - 2 * n + 4;  // A_3 coefficient on alpha_n
  const Rat c3 = 2 * d - n + 1;          // A_2 coefficient on alpha_n once s = n-1
  if (n == 5) {
    // alpha_3 has scaling exponent 0 here
    b.add({}, 3);
    if (is_zero(c1)) b.add({4}, 3);
  } else {
    b.add({n - 2});
    if (is_zero(c1)) b.add({n - 2}, n - 1);
    if (is_zero(c2)) b.add({n - 2}, n);
  }
  b.add({n - 1});
  if (is_zero(c3)) b.add({n - 1}, n);
  b.add({n});
  b.zero();
  return b.take();
}

}  // namespace nilpoisson
