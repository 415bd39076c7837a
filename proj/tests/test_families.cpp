#include "doctest.h"
#include "helpers.hpp"

using namespace nilpoisson;
using namespace testing_support;

namespace {

Vec<Rat> v(std::initializer_list<int> xs) {
  Vec<Rat> out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

}  // namespace

TEST_CASE("instantiate examples") {
  auto p = instantiate(FamilySpec<Rat>{FamilyTag::TP0, 5, Rat(0), {1, 0, 0, 0, 0}});
  Bracket<Rat> want(5);
  want.set(1, 2, v({1, 0, 0, 0, 0}));
  CHECK(p.bracket == want);

  CHECK(instantiate(FamilySpec<Rat>{FamilyTag::TP1, 5, Rat(1), {0, 0, 0, 0}}).bracket.is_zero());

  auto q = instantiate(FamilySpec<Rat>{FamilyTag::TPdelta, 5, Rat(3), {1, 0, 0}});
  CHECK(q.bracket.upper(1, 2) == v({0, 0, 1, 0, 0}));
  CHECK(q.bracket.upper(1, 3) == v({0, 0, 0, 3, 0}));
  CHECK(q.bracket.upper(2, 3) == v({0, 0, 0, 0, 3}));
  CHECK(q.bracket.upper(1, 4) == v({0, 0, 0, 0, 6}));
  CHECK(is_zero_vec(q.bracket.upper(2, 4)));
}

TEST_CASE("instantiate validation") {
  CHECK_THROWS_AS(instantiate(FamilySpec<Rat>{FamilyTag::TPdelta, 4, Rat(3), {1, 0, 0}}), DomainError);
  CHECK_THROWS_AS(instantiate(FamilySpec<Rat>{FamilyTag::TP1, 5, Rat(1), {0, 0, 0}}), DomainError);
  CHECK_THROWS_AS(instantiate(FamilySpec<Rat>{FamilyTag::Dim2, 2, Rat(1), {1, 0}}), DomainError);
  CHECK_THROWS_AS(instantiate(FamilySpec<Rat>{FamilyTag::Dim3, 3, Rat(2), {1, 0, 0}}), DomainError);
  // the dimension-3 exception at delta = -1
  CHECK_NOTHROW(instantiate(FamilySpec<Rat>{FamilyTag::Dim3, 3, Rat(-1), {1, 0, 0}}));
  CHECK_THROWS_AS(parse_tag("TP3"), DomainError);
}

TEST_CASE("families satisfy their identity symbolically") {
  const MPoly d = MPoly::var("delta");
  for (int n = 2; n <= 7; ++n) {
    auto tp0 = instantiate(symbolic_family(FamilyTag::TP0, n, MPoly(0)));
    CHECK(check_identity(tp0, Identity::transposed).all_zero());
    CHECK(check_identity(tp0, Identity::jacobi).all_zero());
    auto tp1 = instantiate(symbolic_family(FamilyTag::TP1, n, MPoly(1)));
    CHECK(check_identity(tp1, Identity::transposed).all_zero());
    CHECK(check_identity(tp1, Identity::jacobi).all_zero());
    auto tp2 = instantiate(symbolic_family(FamilyTag::TP2, n, MPoly(2)));
    CHECK(check_identity(tp2, Identity::transposed).all_zero());
    CHECK(check_identity(tp2, Identity::jacobi).all_zero());
    if (n >= 5) {
      auto td = instantiate(symbolic_family(FamilyTag::TPdelta, n, d));
      CHECK(check_identity(td, Identity::transposed).all_zero());
      CHECK(check_identity(td, Identity::jacobi).all_zero());
    }
    auto triv = instantiate(FamilySpec<MPoly>{FamilyTag::TrivialDeltaPoisson, n, d, {}});
    CHECK(check_identity(triv, Identity::delta_poisson).all_zero());
  }
}

TEST_CASE("low-dimensional forms") {
  const MPoly d = MPoly::var("delta");
  // alpha_1 = 0 branch: transposed for every delta
  for (FamilyTag tag : {FamilyTag::Dim2, FamilyTag::Dim3, FamilyTag::Dim4}) {
    int n = tag == FamilyTag::Dim2 ? 2 : tag == FamilyTag::Dim3 ? 3 : 4;
    auto f = symbolic_family(tag, n, d);
    f.alphas[0] = MPoly(0);
    CHECK(check_identity(instantiate(f), Identity::transposed).all_zero());
  }
  // the sl2-like branch of dimension 3 exists only at delta = -1
  auto f3 = symbolic_family(FamilyTag::Dim3, 3, MPoly(-1));
  CHECK(check_identity(instantiate(f3), Identity::transposed).all_zero());
  CHECK(check_identity(instantiate(f3), Identity::jacobi).all_zero());

  // Dimension 4: Jacobi on (e1,e2,e3) leaves
  //   -alpha_2^2 delta (delta - 1)(delta - 2)(delta + 1) / 4 * e_4
  auto f4 = symbolic_family(FamilyTag::Dim4, 4, d);
  f4.alphas[0] = MPoly(0);
  auto rep = check_identity(instantiate(f4), Identity::jacobi);
  MPoly a2 = MPoly::var("alpha_2");
  MPoly want = MPoly(rat(-1, 4)) * a2 * a2 * d * (d - MPoly(1)) * (d - MPoly(2)) * (d + MPoly(1));
  REQUIRE_FALSE(rep.all_zero());
  for (const auto& r : rep.entries) {
    CHECK(r.coord == 4);
    // every ordered triple is a signed copy of the (1,2,3) residual
    CHECK((r.value == want || r.value == -want));
  }
}

TEST_CASE("per-delta bracket shapes for n >= 5") {
  std::mt19937 g(44);
  for (int n = 5; n <= 7; ++n) {
    auto a = sparse_params(g, n - 1, 0.2);
    auto tp1 = instantiate(FamilySpec<Rat>{FamilyTag::TP1, n, Rat(1), a});
    auto tp2 = instantiate(FamilySpec<Rat>{FamilyTag::TP2, n, Rat(2), a});
    auto alpha = [&](int t) { return t >= 2 ? a[t - 2] : Rat(0); };
    for (int i = 2; i <= n; ++i) {
      Vec<Rat> w1 = zero_vec<Rat>(n), w2 = zero_vec<Rat>(n);
      for (int t = i - 1; t <= n; ++t) {
        w1[t - 1] = alpha(t - i + 2);
        w2[t - 1] = Rat(i - 1) * alpha(t - i + 2);
      }
      CHECK(tp1.bracket.entry(1, i) == w1);
      CHECK(tp2.bracket.entry(1, i) == w2);
    }
    auto tp0 = instantiate(FamilySpec<Rat>{FamilyTag::TP0, n, Rat(0), sparse_params(g, n, 0.2)});
    for (int i = 3; i <= n; ++i) CHECK(is_zero_vec(tp0.bracket.entry(1, i)));
  }
}

TEST_CASE("catalog examples") {
  auto c5 = canonical_catalog(5, Rat(0));
  REQUIRE(c5.size() == 6);
  CHECK(c5[0].specialize(0).alphas == std::vector<Rat>{1, 0, 0, 0, 0});
  CHECK(c5[2].modulus_slot == 3);
  CHECK(c5[5].specialize(0).alphas == std::vector<Rat>(5, Rat(0)));

  auto c4 = canonical_catalog(4, rat(3, 2));
  bool has_a1 = false, has_a0 = false;
  for (const auto& e : c4) {
    if (e.modulus_slot == 3 && e.spec.alpha(4) == MPoly(1)) has_a1 = true;
    if (e.modulus_slot == 3 && e.spec.alpha(4).is_zero()) has_a0 = true;
  }
  CHECK(has_a1);
  CHECK(has_a0);

  auto c2 = canonical_catalog(2, Rat(0));
  CHECK(c2.size() == 3);
}

TEST_CASE("catalog entries are sound") {
  const std::vector<Rat> deltas{Rat(0), Rat(1), Rat(2), Rat(3), rat(3, 2), Rat(-4), rat(1, 2), Rat(-1)};
  for (int n = 2; n <= 7; ++n)
    for (const Rat& d : deltas)
      for (const auto& entry : canonical_catalog(n, d))
        for (int m : {0, 1, -1, 2, 7}) {
          auto p = instantiate(entry.specialize(Rat(m)));
          INFO(entry.label);
          CHECK(check_identity(p, Identity::commutative).all_zero());
          CHECK(check_identity(p, Identity::associative).all_zero());
          CHECK(check_identity(p, Identity::jacobi).all_zero());
          CHECK(check_identity(p, Identity::transposed).all_zero());
        }
}

TEST_CASE("special deltas") {
  auto s4 = special_deltas(4);
  CHECK(s4.values == std::vector<Rat>{-4, 1, rat(3, 2)});
  auto s5 = special_deltas(5);
  CHECK(s5.values == std::vector<Rat>{rat(3, 2), 2});
  CHECK(s5.conditions == std::vector<std::string>{"delta^2 + 3*delta - 6"});
  // 8n - 7 = 49 at n = 7: delta = 2 or -5
  auto s7 = special_deltas(7);
  CHECK(s7.values == std::vector<Rat>{-5, 2, rat(5, 2), 3});
}
