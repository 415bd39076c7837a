#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilpoisson/families.hpp"
#include "nilpoisson/nullfiliform.hpp"

namespace nilpoisson {

namespace detail {

// [phi(e_1), phi(e_2)] read off the family's own bracket table, in old coordinates.
template <Scalar S>
Vec<S> image_of_e1e2(const FamilySpec<S>& spec, const Automorphism<S>& f) {
  const int n = spec.n;
  const std::vector<S>& A = f.params();
  auto M2 = [&](int r) { return r >= 1 && r <= n ? f.at(r, 2) : S(Rat(0)); };
  auto alpha = [&](int t) { return t >= 1 && t <= n ? spec.alpha(t) : S(Rat(0)); };
  auto Ai = [&](int i) { return i >= 1 && i <= n ? A[i - 1] : S(Rat(0)); };
  Vec<S> rhs = zero_vec<S>(n);
  const auto labels = slot_labels(spec.tag, n);
  switch (spec.tag) {
    case FamilyTag::TP0:
      // only [e_1, e_2] is nonzero: the image is A_1^3 [e_1, e_2]
      for (int t = 1; t <= n; ++t) rhs[t - 1] = A[0] * A[0] * A[0] * alpha(t);
      break;
    case FamilyTag::TP1:
      // [e_1, e_i] = sum_j alpha_j e_{j+i-2}, and e_{>=2} is abelian
      for (int t = 1; t <= n; ++t)
        for (int j : labels) rhs[t - 1] += A[0] * M2(t - j + 2) * alpha(j);
      break;
    case FamilyTag::TP2:
      // [e_i, e_r] = (r - i) sum_j alpha_j e_{j+i+r-3}
      for (int t = 1; t <= n; ++t)
        for (int j : labels)
          for (int i = 1; i <= n; ++i) {
            int r = t - i - j + 3;
            if (r < 1 || r > n || is_zero(Ai(i))) continue;
            rhs[t - 1] += S(Rat(t - 2 * i - j + 3)) * Ai(i) * M2(r) * alpha(j);
          }
      break;
    default:
      throw DomainError("no closed transformation law for " + tag_name(spec.tag));
  }
  return rhs;
}

}  // namespace detail

// Parameters of push_bracket(phi_A, family) read in the family's own slots.
template <Scalar S>
std::vector<S> transform_params(const FamilySpec<S>& spec, const std::vector<S>& A) {
  const int n = spec.n;
  check_family_dims(spec.tag, n);
  if (static_cast<int>(A.size()) != n) throw DomainError("transform_params: need A_1..A_n");
  if (is_zero(A[0])) throw DomainError("transform_params: A_1 = 0");
  const S inv1 = inverse(A[0]);
  const S d = spec.delta;
  if (spec.tag == FamilyTag::TPdelta) {
    // closed forms, with nu = n as a scalar
    const S a = spec.alpha(n - 2), b = spec.alpha(n - 1), c = spec.alpha(n);
    const S A1 = A[0], A2 = A[1], A3 = n >= 3 ? A[2] : S(Rat(0));
    const S N{Rat(n)};
    const S two{Rat(2)};
    S a_new = a * scalar_pow(inv1, n - 5);
    S b_new = (A1 * b + A2 * a * (two * d - N + two)) * scalar_pow(inv1, n - 3);
    S quad = S(Rat(3)) * d * d + d * (S(Rat(3)) - S(Rat(4)) * N) + N * N - N - two;
    S c_num = two * c * A1 * A1 + two * b * A1 * A2 * (two * d - N + S(Rat(1))) +
              a * (A1 * A3 * (d * d + S(Rat(3)) * d - two * N + S(Rat(4))) + A2 * A2 * quad);
    S c_new = c_num * inverse(two) * scalar_pow(inv1, n - 1);
    return {a_new, b_new, c_new};
  }
  if (spec.tag != FamilyTag::TP0 && spec.tag != FamilyTag::TP1 && spec.tag != FamilyTag::TP2)
    throw DomainError("transform_params supports TP0, TP1, TP2, TPdelta, not " + tag_name(spec.tag));
  const Automorphism<S> f = build_automorphism(A);
  Vec<S> rhs = detail::image_of_e1e2(spec, f);
  // M alpha' = rhs, M lower triangular with diagonal A_1^t
  Vec<S> out = zero_vec<S>(n);
  S diag_inv = S(Rat(1));
  for (int t = 1; t <= n; ++t) {
    diag_inv = diag_inv * inv1;
    S acc = rhs[t - 1];
    for (int u = 1; u < t; ++u) acc = acc - f.at(t, u) * out[u - 1];
    out[t - 1] = acc * diag_inv;
  }
  std::vector<S> params;
  for (int t : slot_labels(spec.tag, n)) params.push_back(out[t - 1]);
  return params;
}

// push_bracket of the symbolic family against the family at transform_params,
// over symbolic A_1..A_n and alphas. Zero residuals mean the law is right.
ResidualReport<MPoly> verify_transform_formula(FamilyTag tag, int n, const MPoly& delta);

struct IsoWitness {
  std::vector<Automorphism<RadExt>> steps;  // applied first to last
  Automorphism<RadExt> total;               // compose(steps[0], steps[1], ...)
};

struct CanonicalForm {
  FamilySpec<RadExt> spec;
  IsoWitness witness;
  std::vector<int> modulus_slots;  // basis labels kept as moduli
  int scaled_slot = 0;             // label normalized to 1 by the scaling, 0 if none
  std::optional<std::pair<int, Rat>> radical;  // (m, q) of x^m = q when adjoined
  std::vector<std::string> notes;
};

CanonicalForm canonicalize(const FamilySpec<Rat>& spec);

struct InvariantTuple {
  FamilyTag tag = FamilyTag::TP0;
  int n = 0;
  Rat delta;
  std::optional<int> s;                          // first nonzero slot label, none for the zero bracket
  std::vector<std::pair<int, std::string>> signature;  // (label, "one" | "modulus")
  std::vector<Rat> moduli;                       // one per modulus entry of the signature

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

InvariantTuple invariants(const FamilySpec<Rat>& spec);

struct IsoResult {
  enum class Decision { isomorphic, not_isomorphic, inconclusive };
  Decision decision = Decision::inconclusive;
  std::optional<Automorphism<RadExt>> witness;  // maps a onto b under push_bracket
  std::string reason;
  std::vector<std::string> notes;
};

std::string decision_name(IsoResult::Decision d);

IsoResult iso_test(const FamilySpec<Rat>& a, const FamilySpec<Rat>& b);

// Index of the catalog entry containing the canonical form, or -1.
int catalog_index(const CanonicalForm& c, const std::vector<CatalogEntry>& catalog);

}  // namespace nilpoisson
