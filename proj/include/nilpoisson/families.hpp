#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilpoisson/nullfiliform.hpp"

namespace nilpoisson {

enum class FamilyTag { TP0, TP1, TP2, TPdelta, Dim2, Dim3, Dim4, TrivialDeltaPoisson };

FamilyTag parse_tag(std::string_view s);
std::string tag_name(FamilyTag t);

// Basis label t of each parameter: parameter k is the coefficient of e_t in
// [e_1, e_2], t = slot_labels(...)[k].
std::vector<int> slot_labels(FamilyTag tag, int n);
void check_family_dims(FamilyTag tag, int n);

// The identity a family is meant to satisfy.
inline Identity family_identity(FamilyTag tag) {
  return tag == FamilyTag::TrivialDeltaPoisson ? Identity::delta_poisson : Identity::transposed;
}

template <Scalar S>
struct FamilySpec {
  FamilyTag tag = FamilyTag::TP0;
  int n = 0;
  S delta;
  std::vector<S> alphas;

  S alpha(int t) const {
    auto labels = slot_labels(tag, n);
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == t) return alphas[k];
    return S(Rat(0));
  }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

template <Scalar T, Scalar S>
FamilySpec<T> convert(const FamilySpec<S>& f) {
  FamilySpec<T> out{f.tag, f.n, T(f.delta), {}};
  for (const auto& a : f.alphas) out.alphas.push_back(T(a));
  return out;
}

// FamilySpec with alpha_t variables in every slot.
FamilySpec<MPoly> symbolic_family(FamilyTag tag, int n, const MPoly& delta);

template <Scalar S>
Bracket<S> family_bracket(const FamilySpec<S>& f) {
  check_family_dims(f.tag, f.n);
  const int n = f.n;
  auto labels = slot_labels(f.tag, n);
  if (f.alphas.size() != labels.size())
    throw DomainError(tag_name(f.tag) + " with n=" + std::to_string(n) + " takes " + std::to_string(labels.size()) +
                      " parameters, got " + std::to_string(f.alphas.size()));
  const S& d = f.delta;
  auto a = [&](int t) { return f.alpha(t); };
  const S half(rat(1, 2));
  Bracket<S> b(n);
  switch (f.tag) {
    case FamilyTag::TP0:
      for (int t = 1; t <= n; ++t) b.add(1, 2, t, a(t));
      break;
    case FamilyTag::TP1:
      // [e_1, e_i] = sum_{t >= i} alpha_{t-i+2} e_t
      for (int i = 2; i <= n; ++i)
        for (int t = i; t <= n; ++t) b.add(1, i, t, a(t - i + 2));
      break;
    case FamilyTag::TP2:
      // [e_i, e_j] = (j - i) sum_{t >= i+j-1} alpha_{t-i-j+3} e_t
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int t = i + j - 1; t <= n; ++t) b.add(i, j, t, S(Rat(j - i)) * a(t - i - j + 3));
      break;
    case FamilyTag::TPdelta: {
      const S p = a(n - 2), q = a(n - 1), r = a(n);
      b.add(1, 2, n - 2, p);
      b.add(1, 2, n - 1, q);
      b.add(1, 2, n, r);
      b.add(1, 3, n - 1, d * p);
      b.add(1, 3, n, d * q);
      b.add(1, 4, n, half * (d * d + d) * p);
      b.add(2, 3, n, half * (d * d - d) * p);
      break;
    }
    case FamilyTag::Dim2:
      b.add(1, 2, 1, a(1));
      b.add(1, 2, 2, a(2));
      break;
    case FamilyTag::Dim3:
      for (int t = 1; t <= 3; ++t) b.add(1, 2, t, a(t));
      b.add(1, 3, 2, d * a(1));
      b.add(1, 3, 3, d * a(2));
      b.add(2, 3, 3, d * d * a(1));
      break;
    case FamilyTag::Dim4:
      for (int t = 1; t <= 4; ++t) b.add(1, 2, t, a(t));
      b.add(1, 3, 3, d * a(2));
      b.add(1, 3, 4, d * a(3));
      b.add(1, 4, 4, half * (d * d + d) * a(2));
      b.add(2, 3, 4, half * (d * d - d) * a(2));
      break;
    case FamilyTag::TrivialDeltaPoisson:
      break;
  }
  return b;
}

// The low-dimensional forms only exist under a constraint on alpha_1:
// delta*alpha_1 = 0, or delta*(delta+1)*alpha_1 = 0 in dimension 3.
template <Scalar S>
S dim_constraint(const FamilySpec<S>& f) {
  if (f.alphas.empty()) return S(Rat(0));
  switch (f.tag) {
    case FamilyTag::Dim2:
    case FamilyTag::Dim4:
      return f.delta * f.alpha(1);
    case FamilyTag::Dim3:
      return f.delta * (f.delta + S(Rat(1))) * f.alpha(1);
    default:
      return S(Rat(0));
  }
}

template <Scalar S>
PoissonPair<S> instantiate(const FamilySpec<S>& f) {
  Bracket<S> b = family_bracket(f);
  S c = dim_constraint(f);
  bool violated;
  if constexpr (std::same_as<S, MPoly>) {
    violated = c.is_constant() && !is_zero(c);  // symbolic constraints are left to the caller
  } else {
    violated = !is_zero(c);
  }
  if (violated)
    throw DomainError(tag_name(f.tag) + ": parameters violate the alpha_1 constraint (" + to_string(c) + " != 0)");
  return PoissonPair<S>{mu0<S>(f.n), std::move(b), f.delta};
}

// Coefficients of e_t in [e_1, e_2] at the family's slot labels.
template <Scalar S>
std::vector<S> read_params(FamilyTag tag, int n, const Bracket<S>& b) {
  std::vector<S> out;
  if (n < 2) return out;
  const Vec<S>& v = b.upper(1, 2);
  for (int t : slot_labels(tag, n)) out.push_back(v.at(t - 1));
  return out;
}

struct CatalogEntry {
  FamilySpec<MPoly> spec;  // constants plus at most one modulus variable "alpha"
  int modulus_slot = 0;    // basis label of the modulus slot, 0 if none
  bool modulus_nonzero = false;
  std::string label;

  FamilySpec<Rat> specialize(const Rat& alpha) const;
};

// Complete list of canonical representatives for rational delta.
std::vector<CatalogEntry> canonical_catalog(int n, const Rat& delta);

// Special values of delta on mu_0^n where an extra modulus appears.
struct SpecialDeltas {
  std::vector<Rat> values;              // rational special values, sorted, unique
  std::vector<std::string> conditions;  // polynomial conditions with irrational roots
};
SpecialDeltas special_deltas(int n);

std::string spec_label(FamilyTag tag, int n, const std::string& delta, const std::vector<std::string>& alphas);

template <Scalar S>
std::string spec_label(const FamilySpec<S>& f) {
  std::vector<std::string> a;
  for (const auto& x : f.alphas) a.push_back(to_string(x));
  return spec_label(f.tag, f.n, to_string(f.delta), a);
}

}  // namespace nilpoisson
