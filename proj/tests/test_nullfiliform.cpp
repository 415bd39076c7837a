#include <functional>

#include "doctest.h"
#include "helpers.hpp"

using namespace nilpoisson;
using namespace testing_support;

namespace {

// Independent route to phi(e_i): sum over compositions of j into i positive parts.
Rat composition_sum(const std::vector<Rat>& A, int i, int j) {
  Rat total = 0;
  std::function<void(int, int, Rat)> rec = [&](int parts_left, int remaining, Rat prod) {
    if (parts_left == 0) {
      if (remaining == 0) total += prod;
      return;
    }
    for (int k = 1; k <= remaining - (parts_left - 1); ++k) rec(parts_left - 1, remaining - k, Rat(prod * A[k - 1]));
  };
  rec(i, j, Rat(1));
  return total;
}

std::vector<std::vector<Rat>> matmul(const Automorphism<Rat>& f, const Automorphism<Rat>& g) {
  int n = f.dim();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      for (int k = 1; k <= n; ++k) m[r - 1][c - 1] += f.at(r, k) * g.at(k, c);
  return m;
}

}  // namespace

TEST_CASE("mu0 structure") {
  auto a = mu0<Rat>(3);
  CHECK(a.product(1, 1) == basis_vec<Rat>(3, 2));
  CHECK(a.product(1, 2) == basis_vec<Rat>(3, 3));
  CHECK(a.product(2, 1) == basis_vec<Rat>(3, 3));
  CHECK(is_zero_vec(a.product(2, 2)));
  auto one = mu0<Rat>(1);
  CHECK(is_zero_vec(one.product(1, 1)));
  // {(i,j): i+j <= 5}: 6 unordered pairs including squares, 10 ordered
  int unordered = 0, ordered = 0;
  auto five = mu0<Rat>(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (!is_zero_vec(five.product(i, j))) {
        ++ordered;
        if (i <= j) ++unordered;
      }
  CHECK(unordered == 6);
  CHECK(ordered == 10);
  CHECK_THROWS_AS(mu0<Rat>(0), DomainError);
}

TEST_CASE("build_automorphism") {
  auto f = build_automorphism<Rat>({1, 1, 0});
  CHECK(f.column(1) == Vec<Rat>{1, 1, 0});
  CHECK(f.column(2) == Vec<Rat>{0, 1, 2});
  CHECK(f.column(3) == Vec<Rat>{0, 0, 1});
  CHECK(build_automorphism<Rat>({1, 0, 0, 0}) == Automorphism<Rat>::identity(4));
  auto s = build_automorphism<Rat>({2, 0, 0});
  for (int i = 1; i <= 3; ++i) CHECK(s.at(i, i) == pow(Rat(2), i));
  CHECK_THROWS_AS(build_automorphism<Rat>({0, 1, 0}), NotInvertible);
}

TEST_CASE("columns agree with the composition sums") {
  std::mt19937 g(101);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      auto A = random_aut_params(g, n);
      auto f = build_automorphism(A);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) CHECK(f.at(j, i) == composition_sum(A, i, j));
    }
}

TEST_CASE("automorphisms respect the product") {
  std::mt19937 g(7);
  for (int n = 2; n <= 8; ++n)
    for (int trial = 0; trial < 6; ++trial)
      CHECK(verify_automorphism(build_automorphism(random_aut_params(g, n))).all_zero());
  // symbolic parameters
  std::vector<MPoly> A;
  for (int i = 1; i <= 5; ++i) A.push_back(MPoly::var("A_" + std::to_string(i)));
  CHECK(verify_automorphism(build_automorphism(A)).all_zero());
}

TEST_CASE("group operations") {
  auto id = Automorphism<Rat>::identity(3);
  CHECK(invert(id) == id);
  CHECK(invert(build_automorphism<Rat>({2, 0, 0})).params() == std::vector<Rat>{rat(1, 2), 0, 0});
  std::mt19937 g(9);
  for (int n = 2; n <= 7; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      auto f = build_automorphism(random_aut_params(g, n));
      auto h = build_automorphism(random_aut_params(g, n));
      auto k = build_automorphism(random_aut_params(g, n));
      CHECK(compose(f, invert(f)) == Automorphism<Rat>::identity(n));
      CHECK(compose(invert(f), f) == Automorphism<Rat>::identity(n));
      CHECK(compose(compose(f, h), k) == compose(f, compose(h, k)));
      // matrix-level: the column-1 rebuild equals the full product
      auto fh = compose(f, h);
      auto m = matmul(f, h);
      for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) CHECK(fh.at(r, c) == m[r - 1][c - 1]);
      Vec<Rat> x = random_vec(g, n);
      CHECK(f.apply_inverse(f.apply(x)) == x);
    }
}

TEST_CASE("push_bracket") {
  Bracket<Rat> b(3);
  b.set(1, 2, basis_vec<Rat>(3, 3));
  CHECK(push_bracket(Automorphism<Rat>::identity(3), b) == b);
  CHECK(push_bracket(build_automorphism<Rat>({2, 0, 0}), b) == b);

  auto tp0 = instantiate(FamilySpec<Rat>{FamilyTag::TP0, 5, Rat(0), {1, 0, 0, 0, 0}});
  auto pushed = push_bracket(build_automorphism<Rat>({2, 0, 0, 0, 0}), tp0);
  auto want = instantiate(FamilySpec<Rat>{FamilyTag::TP0, 5, Rat(0), {4, 0, 0, 0, 0}});
  CHECK(pushed == want);
}

TEST_CASE("push composes contravariantly and preserves identities") {
  std::mt19937 g(31);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 5 + trial % 2;
    Rat d = trial % 3 == 0 ? Rat(0) : nonzero_rat(g);
    FamilySpec<Rat> f{FamilyTag::TPdelta, n, d, sparse_params(g, 3, 0.2)};
    if (is_zero(d)) f = FamilySpec<Rat>{FamilyTag::TP0, n, d, sparse_params(g, n, 0.2)};
    auto p = instantiate(f);
    auto a = build_automorphism(random_aut_params(g, n));
    auto c = build_automorphism(random_aut_params(g, n));
    auto q = push_bracket(a, p);
    CHECK(push_bracket(compose(a, c), p) == push_bracket(c, q));
    CHECK(check_identity(q, Identity::transposed).all_zero());
    CHECK(check_identity(q, Identity::jacobi).all_zero());
    // first nonzero parameter position is preserved
    auto before = read_params(f.tag, n, p.bracket), after = read_params(f.tag, n, q.bracket);
    std::size_t s0 = 0, s1 = 0;
    while (s0 < before.size() && is_zero(before[s0])) ++s0;
    while (s1 < after.size() && is_zero(after[s1])) ++s1;
    CHECK(s0 == s1);
  }
  for (int n = 3; n <= 5; ++n) {
    PoissonPair<Rat> z{mu0<Rat>(n), Bracket<Rat>(n), Rat(3)};
    CHECK(check_identity(push_bracket(build_automorphism(random_aut_params(g, n)), z), Identity::delta_poisson)
              .all_zero());
  }
}
