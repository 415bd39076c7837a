#include "nilpoisson/solver.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace nilpoisson {

std::string unknown_name(int i, int j, int t) {
  return "c_{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(t) + "}";
}

AnsatzBracket::AnsatzBracket(int n_) : n(n_) {
  if (n < 2) throw DomainError("ansatz needs n >= 2");
  for (int i = n - 1; i >= 1; --i)
    for (int j = n; j > i; --j)
      for (int t = 1; t <= n; ++t) {
        unknowns.push_back({i, j, t});
        names.push_back(unknown_name(i, j, t));
      }
}

int AnsatzBracket::index(int i, int j, int t) const {
  // pair blocks in descending order: (n-1,n), (n-2,n), (n-2,n-1), ...
  int block = 0;
  for (int a = n - 1; a > i; --a) block += n - a;
  block += n - j;
  return block * n + (t - 1);
}

Bracket<MPoly> AnsatzBracket::bracket() const {
  Bracket<MPoly> b(n);
  const std::size_t k = names.size();
  for (std::size_t u = 0; u < k; ++u) {
    MPoly::Exps e(k, 0);
    e[u] = 1;
    // one shared registry keeps arithmetic on the fast path
    b.add(unknowns[u].i, unknowns[u].j, unknowns[u].t, MPoly::from_terms(names, {{e, Rat(1)}}));
  }
  return b;
}

LinearSystem assemble(int n, const MPoly& delta, Identity kind) {
  if (!delta.is_constant())
    throw UnsupportedMode("solve needs a rational delta; symbolic delta is supported by verify mode only");
  return assemble(n, delta.constant_value(), kind);
}

LinearSystem assemble(int n, const Rat& delta, Identity kind) {
  if (kind != Identity::transposed && kind != Identity::delta_poisson)
    throw DomainError("assemble supports transposed and delta_poisson, not " + identity_name(kind));
  AnsatzBracket ansatz(n);
  LinearSystem sys;
  sys.n = n;
  sys.delta = delta;
  sys.kind = kind;
  sys.unknowns = ansatz.names;
  std::unordered_map<std::string, int> column;
  for (std::size_t u = 0; u < ansatz.names.size(); ++u) column[ansatz.names[u]] = static_cast<int>(u);

  // The residuals of the identity on the ansatz are exactly the row forms.
  PoissonPair<MPoly> p{mu0<MPoly>(n), ansatz.bracket(), MPoly(delta)};
  auto rep = check_identity(p, kind);
  std::set<std::vector<std::pair<int, Rat>>> seen;
  const std::size_t triples = static_cast<std::size_t>(n) * n * n;
  sys.generated = triples * n;
  for (const auto& r : rep.entries) {
    std::vector<std::pair<int, Rat>> row;
    for (const auto& [e, c] : r.value.terms()) {
      int col = -1;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (e[v] != 1 || col >= 0) throw DomainError("nonlinear term in assembled row");
        col = column.at(r.value.vars()[v]);
      }
      if (col < 0) throw DomainError("constant term in homogeneous row");
      row.emplace_back(col, c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Rat lead = inverse(row.front().second);
    for (auto& [col, c] : row) c *= lead;
    if (!seen.insert(row).second) continue;
    sys.rows.push_back({std::move(row), {r.indices[0], r.indices[1], r.indices[2]}, r.coord});
  }
  return sys;
}

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

IntRow to_integer_row(const std::vector<std::pair<int, Rat>>& row) {
  mpz_class l = 1;
  for (const auto& [c, v] : row) l = lcm(l, v.get_den());
  IntRow out;
  for (const auto& [c, v] : row) {
    Rat s = v * l;
    out.emplace_back(c, s.get_num());
  }
  return out;
}

const mpz_class* find_col(const IntRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& p, int c) { return p.first < c; });
  return it != r.end() && it->first == col ? &it->second : nullptr;
}

void remove_content(IntRow& r) {
  mpz_class g = 0;
  for (const auto& [c, v] : r) g = gcd(g, v);
  if (g > 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r <- a*r - b*p, where a = p[col], b = r[col]; clears column col of r.
void eliminate(IntRow& r, const IntRow& p, int col) {
  mpz_class a = *find_col(p, col), b = *find_col(r, col);
  IntRow out;
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      mpz_class v = a * r[i].second - b * p[j].second;
      if (sgn(v) != 0) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  remove_content(out);
  r = std::move(out);
}

}  // namespace

SolutionSpace nullspace(const LinearSystem& sys) {
  const int ncols = static_cast<int>(sys.unknowns.size());
  std::vector<IntRow> rows;
  for (const auto& r : sys.rows) rows.push_back(to_integer_row(r.coeffs));
  std::vector<bool> used(rows.size(), false);
  std::vector<int> pivot_col_of_row(rows.size(), -1);
  std::vector<int> pivot_row_of_col(ncols, -1);

  for (int col = 0; col < ncols; ++col) {
    // smallest provenance among unused rows with an entry in this column
    int piv = -1;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && find_col(rows[r], col)) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    used[piv] = true;
    pivot_col_of_row[piv] = col;
    pivot_row_of_col[col] = piv;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != piv && find_col(rows[r], col)) eliminate(rows[r], rows[piv], col);
  }

  SolutionSpace out;
  out.n = sys.n;
  out.delta = sys.delta;
  out.kind = sys.kind;
  AnsatzBracket ansatz(sys.n);
  int k = 0;
  for (int f = 0; f < ncols; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<Rat> x(ncols, Rat(0));
    x[f] = 1;
    for (int col = 0; col < ncols; ++col) {
      int r = pivot_row_of_col[col];
      if (r < 0) continue;
      const mpz_class* v = find_col(rows[r], f);
      if (!v) continue;
      Rat val(-*v, *find_col(rows[r], col));
      val.canonicalize();
      x[col] = val;
    }
    Bracket<Rat> b(sys.n);
    for (int u = 0; u < ncols; ++u)
      if (!is_zero(x[u])) b.add(ansatz.unknowns[u].i, ansatz.unknowns[u].j, ansatz.unknowns[u].t, x[u]);
    out.free.push_back("p" + std::to_string(++k));
    out.origin.push_back(sys.unknowns[f]);
    out.basis.push_back(std::move(b));
  }
  return out;
}

Bracket<MPoly> SolutionSpace::parametrized() const {
  Bracket<MPoly> b(n);
  const std::size_t k = free.size();
  for (std::size_t q = 0; q < k; ++q) {
    MPoly::Exps e(k, 0);
    e[q] = 1;
    MPoly p = MPoly::from_terms(free, {{e, Rat(1)}});
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const auto& v = basis[q].upper(i, j);
        for (int t = 1; t <= n; ++t)
          if (!is_zero(v[t - 1])) b.add(i, j, t, MPoly(v[t - 1]) * p);
      }
  }
  return b;
}

PoissonPair<MPoly> SolutionSpace::pair() const { return PoissonPair<MPoly>{mu0<MPoly>(n), parametrized(), MPoly(delta)}; }

SolutionSpace jacobi_reduce(const SolutionSpace& space) {
  SolutionSpace cur = space;
  for (;;) {
    auto rep = check_identity(cur.pair(), Identity::jacobi);
    std::vector<MPoly> residuals;
    std::set<std::string> seen;
    for (const auto& r : rep.entries) {
      MPoly m = r.value.monic();
      if (seen.insert(m.str()).second) residuals.push_back(m);
    }
    std::vector<std::string> zeroed;
    for (const auto& r : residuals) {
      std::string v;
      if (r.is_pure_power(v) && std::find(zeroed.begin(), zeroed.end(), v) == zeroed.end()) zeroed.push_back(v);
    }
    if (zeroed.empty()) {
      cur.residual_conditions = std::move(residuals);
      return cur;
    }
    // p = 0 removes its basis bracket; the others are untouched
    SolutionSpace next = cur;
    next.free.clear();
    next.origin.clear();
    next.basis.clear();
    for (std::size_t q = 0; q < cur.free.size(); ++q) {
      if (std::find(zeroed.begin(), zeroed.end(), cur.free[q]) != zeroed.end()) {
        next.forced.push_back(cur.free[q] + "=0");
        continue;
      }
      next.free.push_back(cur.free[q]);
      next.origin.push_back(cur.origin[q]);
      next.basis.push_back(cur.basis[q]);
    }
    cur = std::move(next);
  }
}

SolutionSpace solve(int n, const Rat& delta, Identity kind) { return jacobi_reduce(nullspace(assemble(n, delta, kind))); }

std::string outcome_name(MatchReport::Outcome o) {
  switch (o) {
    case MatchReport::Outcome::match:
      return "match";
    case MatchReport::Outcome::mismatch:
      return "mismatch";
    case MatchReport::Outcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// Flatten a bracket to (pair, t) coordinates; labels kept for witnesses.
std::vector<Rat> flatten(const Bracket<Rat>& b) {
  std::vector<Rat> v;
  for (int i = 1; i <= b.dim(); ++i)
    for (int j = i + 1; j <= b.dim(); ++j)
      for (const auto& x : b.upper(i, j)) v.push_back(x);
  return v;
}

std::string coord_label(int n, std::size_t pos) {
  std::size_t t = pos % n, pair = pos / n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (pair == 0)
        return "[e_" + std::to_string(i) + ",e_" + std::to_string(j) + "] coefficient of e_" + std::to_string(t + 1);
      --pair;
    }
  return "?";
}

// Row-reduce; returns pivot columns alongside the reduced rows.
struct Echelon {
  std::vector<std::vector<Rat>> rows;
  std::vector<std::size_t> pivots;
};

Echelon echelon(std::vector<std::vector<Rat>> rows) {
  Echelon e;
  if (rows.empty()) return e;
  const std::size_t m = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = inverse(rows[r][col]);
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || is_zero(rows[k][col])) continue;
      Rat f = rows[k][col];
      for (std::size_t t = col; t < m; ++t) rows[k][t] -= f * rows[r][t];
    }
    e.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

// Remainder of v modulo the row space of e (zero iff v lies in it).
std::vector<Rat> reduce(const Echelon& e, std::vector<Rat> v) {
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    Rat f = v[e.pivots[k]];
    if (is_zero(f)) continue;
    for (std::size_t t = 0; t < v.size(); ++t) v[t] -= f * e.rows[k][t];
  }
  return v;
}

}  // namespace

MatchReport match_family(const SolutionSpace& space, const FamilySpec<MPoly>& spec) {
  MatchReport rep;
  if (spec.n != space.n) throw DomainError("match_family: dimension mismatch");
  if (!space.residual_conditions.empty()) {
    rep.note = "space carries " + std::to_string(space.residual_conditions.size()) +
               " unresolved conditions; only pure forced-zero closures are compared";
    return rep;
  }
  const int n = space.n;
  Bracket<MPoly> fb = family_bracket(spec);
  // linear parameters of the family, in first-appearance order
  std::vector<std::string> params;
  for (const auto& a : spec.alphas)
    for (const auto& v : a.support())
      if (std::find(params.begin(), params.end(), v) == params.end()) params.push_back(v);
  std::vector<Bracket<Rat>> fam(params.size(), Bracket<Rat>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int t = 1; t <= n; ++t) {
        const MPoly& c = fb.upper(i, j)[t - 1];
        MPoly rest = c;
        for (std::size_t k = 0; k < params.size(); ++k) {
          MPoly lin = c.coeff(params[k], 1);
          if (!lin.is_constant()) {
            rep.note = "family bracket is not linear in its parameters";
            return rep;
          }
          if (!lin.is_zero()) fam[k].add(i, j, t, lin.constant_value());
          rest -= lin * MPoly::var(params[k]);
        }
        if (!rest.is_zero()) {
          rep.note = "family bracket has parameter-free or nonlinear terms (" + rest.str() + ")";
          return rep;
        }
      }

  std::vector<std::vector<Rat>> bs, fs;
  for (const auto& b : space.basis) bs.push_back(flatten(b));
  for (const auto& f : fam) fs.push_back(flatten(f));
  Echelon eb = echelon(bs), ef = echelon(fs);
  auto first_nonzero = [](const std::vector<Rat>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) return i;
    return v.size();
  };
  for (std::size_t k = 0; k < fs.size(); ++k) {
    auto r = reduce(eb, fs[k]);
    std::size_t pos = first_nonzero(r);
    if (pos < r.size()) {
      rep.outcome = MatchReport::Outcome::mismatch;
      rep.witness = coord_label(n, pos);
      rep.note = "family direction " + params[k] + " is not in the solved space";
      return rep;
    }
  }
  for (std::size_t k = 0; k < bs.size(); ++k) {
    auto r = reduce(ef, bs[k]);
    std::size_t pos = first_nonzero(r);
    if (pos < r.size()) {
      rep.outcome = MatchReport::Outcome::mismatch;
      rep.witness = coord_label(n, pos);
      rep.note = "solved direction " + space.free[k] + " is not in the family";
      return rep;
    }
  }
  if (eb.rows.size() != bs.size() || ef.rows.size() != fs.size()) {
    rep.note = "same span but dependent parameters; no invertible substitution";
    return rep;
  }
  // sum_k alpha_k F_k = sum_j p_j B_j: write each F_k in the B basis
  rep.outcome = MatchReport::Outcome::match;
  std::vector<MPoly> sub(bs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    // solve B^T y = F_k by elimination on the augmented system
    const std::size_t m = bs.size();
    std::vector<std::vector<Rat>> aug;
    for (std::size_t pos = 0; pos < fs[k].size(); ++pos) {
      std::vector<Rat> row;
      for (std::size_t j = 0; j < m; ++j) row.push_back(bs[j][pos]);
      row.push_back(fs[k][pos]);
      aug.push_back(std::move(row));
    }
    Echelon ea = echelon(aug);
    for (std::size_t r = 0; r < ea.rows.size(); ++r) {
      std::size_t j = ea.pivots[r];
      if (j < m && !is_zero(ea.rows[r][m])) sub[j] += MPoly(ea.rows[r][m]) * MPoly::var(params[k]);
    }
  }
  for (std::size_t j = 0; j < bs.size(); ++j) rep.substitution[space.free[j]] = sub[j];
  return rep;
}

FamilySpec<MPoly> expected_family(int n, const Rat& delta, Identity kind, bool after_jacobi) {
  if (kind == Identity::delta_poisson) return FamilySpec<MPoly>{FamilyTag::TrivialDeltaPoisson, n, MPoly(delta), {}};
  if (is_zero(delta)) return symbolic_family(FamilyTag::TP0, n, MPoly(delta));
  if (n >= 5) {
    FamilyTag tag = delta == 1 ? FamilyTag::TP1 : delta == 2 ? FamilyTag::TP2 : FamilyTag::TPdelta;
    return symbolic_family(tag, n, MPoly(delta));
  }
  FamilyTag tag = n == 2 ? FamilyTag::Dim2 : n == 3 ? FamilyTag::Dim3 : FamilyTag::Dim4;
  auto f = symbolic_family(tag, n, MPoly(delta));
  if (!(n == 3 && delta == -1)) f.alphas[0] = MPoly(0);
  if (n == 4 && after_jacobi && delta != 1 && delta != 2 && delta != -1) f.alphas[1] = MPoly(0);
  return f;
}

}  // namespace nilpoisson
