#include "nilpoisson/algebra.hpp"

#include <array>
#include <utility>

namespace nilpoisson {

namespace {
constexpr std::array<std::pair<Identity, const char*>, 8> kIdentityNames{{
    {Identity::commutative, "commutative"},
    {Identity::associative, "associative"},
    {Identity::jacobi, "jacobi"},
    {Identity::delta_poisson, "delta_poisson"},
    {Identity::transposed, "transposed"},
    {Identity::cyclic_dp, "cyclic_dp"},
    {Identity::cyclic_tdp, "cyclic_tdp"},
    {Identity::mixed_trivial, "mixed_trivial"},
}};
}  // namespace

Identity parse_identity(std::string_view s) {
  for (const auto& [k, name] : kIdentityNames)
    if (s == name) return k;
  throw DomainError("unknown identity kind '" + std::string(s) + "'");
}

std::string identity_name(Identity k) {
  for (const auto& [id, name] : kIdentityNames)
    if (id == k) return name;
  return "?";
}

std::vector<Vec<Rat>> span_basis(std::vector<Vec<Rat>> rows) {
  std::vector<Vec<Rat>> basis;
  if (rows.empty()) return basis;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = inverse(rows[r][col]);
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || is_zero(rows[k][col])) continue;
      Rat f = rows[k][col];
      for (std::size_t t = 0; t < n; ++t) rows[k][t] -= f * rows[r][t];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

PowerDims power_dims(const CommAlgebra<Rat>& a) {
  const int n = a.dim();
  PowerDims out;
  // level[i] spans A^{i+1}
  std::vector<std::vector<Vec<Rat>>> level;
  std::vector<Vec<Rat>> first;
  for (int i = 1; i <= n; ++i) first.push_back(basis_vec<Rat>(n, i));
  level.push_back(span_basis(first));
  out.dims.push_back(static_cast<int>(level[0].size()));
  // a nilpotent n-dimensional algebra has A^{n+1} = 0
  for (int p = 2; p <= n + 1 && out.dims.back() > 0; ++p) {
    std::vector<Vec<Rat>> gens;
    for (int k = 1; k < p; ++k)
      for (const auto& u : level[k - 1])
        for (const auto& v : level[p - k - 1]) gens.push_back(a.multiply(u, v));
    level.push_back(span_basis(gens));
    out.dims.push_back(static_cast<int>(level.back().size()));
  }
  if (out.dims.back() == 0) {
    out.nilpotent = true;
    out.nilpotency_index = static_cast<int>(out.dims.size());
  }
  std::vector<int> filiform;
  for (int d = n; d >= 0; --d) filiform.push_back(d);
  out.null_filiform = n > 0 && out.dims == filiform;
  return out;
}

}  // namespace nilpoisson
