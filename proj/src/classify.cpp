#include "nilpoisson/classify.hpp"

#include <numeric>

namespace nilpoisson {

ResidualReport<MPoly> verify_transform_formula(FamilyTag tag, int n, const MPoly& delta) {
  const FamilySpec<MPoly> spec = symbolic_family(tag, n, delta);
  std::vector<MPoly> A;
  for (int k = 1; k <= n; ++k) A.push_back(MPoly::var("A_" + std::to_string(k)));
  const auto f = build_automorphism(A);
  const Bracket<MPoly> lhs = push_bracket(f, family_bracket(spec));
  const Bracket<MPoly> rhs = family_bracket(FamilySpec<MPoly>{tag, n, delta, transform_params(spec, A)});
  ResidualReport<MPoly> rep;
  rep.kind = "transform_law";
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int t = 1; t <= n; ++t) {
        MPoly d = lhs.upper(i, j)[t - 1] - rhs.upper(i, j)[t - 1];
        if (!d.is_zero()) rep.entries.push_back({{i, j}, t, d, ""});
      }
  return rep;
}

namespace {

template <Scalar S>
std::vector<S> pushed_params(const FamilySpec<S>& cur, const Automorphism<S>& f) {
  const Vec<S> v = pushed_entry(f, family_bracket(cur), 1, 2);
  std::vector<S> out;
  for (int t : slot_labels(cur.tag, cur.n)) out.push_back(v[t - 1]);
  return out;
}

// A shift a(x) = x + c x^m that zeroes slot k and leaves slots below k fixed
// identically in c; the new slot-k value must be affine in c.
template <Scalar S>
std::optional<S> shift_for(const FamilySpec<S>& cur, std::size_t k, int m) {
  using P = UPoly<S>;
  const int n = cur.n;
  std::vector<P> A(n, P(Rat(0)));
  A[0] = P(Rat(1));
  A[m - 1] = P::x();
  const auto f = build_automorphism(A);
  const auto v = pushed_params(convert<P>(cur), f);
  for (std::size_t j = 0; j < k; ++j)
    if (!(v[j] == P(cur.alphas[j]))) return std::nullopt;
  if (v[k].degree() != 1) return std::nullopt;
  return -v[k].coeff(0) * inverse(v[k].coeff(1));
}

template <Scalar S>
struct Walk {
  FamilySpec<S> cur;
  std::vector<Automorphism<S>> steps;
  std::optional<int> first;  // label of the first surviving slot
  int scaled = 0;            // label used for the scaling, 0 if none
  int scaled_exp = 0;
  S scaled_value = S(Rat(0));  // raw value at the scaled slot
  std::vector<std::pair<int, S>> moduli;  // (label, value when reached)
  std::vector<std::string> notes;
};

RadExt scaling_root(const RadExt& v, int e) {
  if (!v.is_rational()) throw std::logic_error("scaling reached after a radical was adjoined");
  const Rat q = v.to_rat();
  return e > 0 ? rat_root(inverse(q), e) : rat_root(q, -e);
}

// Replays the normalization lemmas: at each nonzero slot in ascending order,
// kill it by a shift if one exists, else spend the single scaling on it when
// its exponent 3 - t is nonzero, else keep it as a modulus. With scale=false
// the scaling is only recorded, which keeps everything rational.
template <Scalar S>
Walk<S> walk(const FamilySpec<S>& input, bool scale) {
  Walk<S> w;
  w.cur = input;
  const int n = input.n;
  const auto labels = slot_labels(input.tag, n);
  auto apply = [&](std::vector<S> A) {
    auto f = build_automorphism(std::move(A));
    w.cur.alphas = pushed_params(w.cur, f);
    w.steps.push_back(std::move(f));
  };
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (is_zero(w.cur.alphas[k])) continue;
    const int t = labels[k];
    if (!w.first) w.first = t;
    std::vector<int> order;
    int natural = t - *w.first + 1;
    if (natural >= 2 && natural <= n) order.push_back(natural);
    for (int m = 2; m <= n; ++m)
      if (m != natural) order.push_back(m);
    bool killed = false;
    for (int m : order) {
      auto c = shift_for(w.cur, k, m);
      if (!c) continue;
      std::vector<S> A(n, S(Rat(0)));
      A[0] = S(Rat(1));
      A[m - 1] = *c;
      apply(std::move(A));
      killed = true;
      break;
    }
    if (killed) {
      if (!is_zero(w.cur.alphas[k])) throw std::logic_error("shift did not clear its slot");
      continue;
    }
    const int e = 3 - t;
    if (w.scaled == 0 && e != 0) {
      w.scaled = t;
      w.scaled_exp = e;
      w.scaled_value = w.cur.alphas[k];
      if constexpr (std::same_as<S, RadExt>) {
        if (scale && w.cur.alphas[k] != S(Rat(1))) {
          std::vector<S> A(n, S(Rat(0)));
          A[0] = scaling_root(w.cur.alphas[k], e);
          apply(std::move(A));
        }
      }
      continue;
    }
    w.moduli.emplace_back(t, w.cur.alphas[k]);
    if (e == 0)
      w.notes.push_back("slot " + std::to_string(t) + " kept as a modulus: scaling exponent 3-t is 0 and no shift moves it");
    else
      w.notes.push_back("slot " + std::to_string(t) + " kept as a modulus: no shift moves it and the scaling is fixed by slot " +
                        std::to_string(w.scaled));
  }
  return w;
}

}  // namespace

CanonicalForm canonicalize(const FamilySpec<Rat>& spec) {
  check_family_dims(spec.tag, spec.n);
  if (spec.alphas.size() != slot_labels(spec.tag, spec.n).size())
    throw DomainError("canonicalize: " + tag_name(spec.tag) + " at n=" + std::to_string(spec.n) + " takes " +
                      std::to_string(slot_labels(spec.tag, spec.n).size()) + " parameters");
  // reject inputs outside the family before spending work on them
  const auto pair = instantiate(spec);
  Walk<RadExt> w = walk(convert<RadExt>(spec), true);
  CanonicalForm out;
  if (!check_identity(pair, Identity::jacobi).all_zero())
    out.notes.push_back("input bracket fails the Jacobi identity; normal form of the transposed relation only");
  out.spec = w.cur;
  out.witness.steps = w.steps;
  out.witness.total = Automorphism<RadExt>::identity(spec.n);
  for (const auto& s : w.steps) out.witness.total = compose(out.witness.total, s);
  for (const auto& [t, v] : w.moduli) out.modulus_slots.push_back(t);
  out.scaled_slot = w.scaled;
  out.notes.insert(out.notes.end(), w.notes.begin(), w.notes.end());
  for (const auto& a : out.witness.total.params())
    if (!a.is_rational()) {
      out.radical = std::make_pair(a.degree(), a.radicand());
      out.notes.push_back("scaling adjoins r with r^" + std::to_string(a.degree()) + " = " + to_string(a.radicand()));
      break;
    }
  return out;
}

InvariantTuple invariants(const FamilySpec<Rat>& spec) {
  check_family_dims(spec.tag, spec.n);
  Walk<Rat> w = walk(spec, false);
  InvariantTuple inv;
  inv.tag = spec.tag;
  inv.n = spec.n;
  inv.delta = spec.delta;
  inv.s = w.first;
  // merge the scaled slot and the moduli in label order
  std::vector<std::pair<int, std::string>> sig;
  if (w.scaled) sig.emplace_back(w.scaled, "one");
  for (const auto& [t, v] : w.moduli) sig.emplace_back(t, "modulus");
  std::sort(sig.begin(), sig.end());
  inv.signature = sig;
  for (const auto& [t, mu] : w.moduli) {
    const int ek = 3 - t;
    if (w.scaled == 0 || ek == 0) {
      inv.moduli.push_back(mu);
      continue;
    }
    // mu scales by lambda^ek and v_s by lambda^es; mu^p v_s^(-sign(es) ek/g) is fixed
    const int es = w.scaled_exp;
    const int g = std::gcd(std::abs(es), std::abs(ek));
    const long p = std::abs(es) / g;
    const long q = -(es > 0 ? 1 : -1) * ek / g;
    inv.moduli.push_back(Rat(pow(mu, p) * pow(w.scaled_value, q)));
  }
  return inv;
}

std::string decision_name(IsoResult::Decision d) {
  switch (d) {
    case IsoResult::Decision::isomorphic:
      return "isomorphic";
    case IsoResult::Decision::not_isomorphic:
      return "not_isomorphic";
    case IsoResult::Decision::inconclusive:
      return "inconclusive";
  }
  return "?";
}

IsoResult iso_test(const FamilySpec<Rat>& a, const FamilySpec<Rat>& b) {
  if (a.tag != b.tag || a.n != b.n || a.delta != b.delta)
    throw DomainError("iso_test compares specs with the same family, n and delta");
  IsoResult r;
  const CanonicalForm ca = canonicalize(a), cb = canonicalize(b);
  if (ca.spec == cb.spec) {
    r.decision = IsoResult::Decision::isomorphic;
    r.reason = "equal canonical forms";
    try {
      r.witness = compose(ca.witness.total, invert(cb.witness.total));
    } catch (const UnsupportedTower&) {
      r.notes.push_back("witnesses live in different radical extensions; composed witness omitted");
    }
    return r;
  }
  const InvariantTuple ia = invariants(a), ib = invariants(b);
  if (!(ia == ib)) {
    r.decision = IsoResult::Decision::not_isomorphic;
    r.reason = ia.signature != ib.signature ? "invariant signatures differ" : "moduli invariants differ";
    return r;
  }
  r.decision = IsoResult::Decision::inconclusive;
  r.reason = "equal invariants but different canonical representatives";
  return r;
}

int catalog_index(const CanonicalForm& c, const std::vector<CatalogEntry>& catalog) {
  for (std::size_t e = 0; e < catalog.size(); ++e) {
    const auto& spec = catalog[e].spec;
    if (spec.tag != c.spec.tag || spec.n != c.spec.n || RadExt(spec.delta.constant_value()) != c.spec.delta) continue;
    bool ok = spec.alphas.size() == c.spec.alphas.size();
    for (std::size_t k = 0; ok && k < spec.alphas.size(); ++k) {
      const MPoly& x = spec.alphas[k];
      if (x.is_constant())
        ok = RadExt(x.constant_value()) == c.spec.alphas[k];
      else
        ok = !(catalog[e].modulus_nonzero && is_zero(c.spec.alphas[k]));
    }
    if (ok) return static_cast<int>(e);
  }
  return -1;
}

}  // namespace nilpoisson
