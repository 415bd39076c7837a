#include "doctest.h"
#include "helpers.hpp"
#include "nilpoisson/json_io.hpp"

using namespace nilpoisson;
using namespace testing_support;

namespace {

template <class T>
T round_trip(const T& x) {
  json j = x;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(json(rat(-3, 2)).get<std::string>() == "-3/2");
  CHECK(round_trip(rat(7, 9)) == rat(7, 9));
  CHECK_THROWS_AS(json(1.5).get<Rat>(), DomainError);
  CHECK_THROWS_AS(json("1.5").get<Rat>(), DomainError);

  RadExt r = rat_root(rat(1, 3), 2);
  CHECK(round_trip(r) == r);
  CHECK(round_trip(RadExt(rat(5, 4))) == RadExt(rat(5, 4)));
  CHECK(json(RadExt(2)).is_string());

  MPoly p = MPoly::var("x") * MPoly::var("y") - MPoly(rat(3, 2)) * pow(MPoly::var("x"), -1);
  CHECK(round_trip(p) == p);
  CHECK(json(p).at("text").get<std::string>() == p.str());
  CHECK(json("4/3").get<MPoly>() == MPoly(rat(4, 3)));
}

TEST_CASE("structures") {
  std::mt19937 g(3);
  auto pair = instantiate(FamilySpec<Rat>{FamilyTag::TPdelta, 6, 3, {1, 2, -1}});
  CHECK(round_trip(pair.bracket) == pair.bracket);
  auto back = round_trip(pair);
  CHECK(back.bracket == pair.bracket);
  CHECK(back.product == pair.product);
  CHECK(back.delta == pair.delta);

  auto f = build_automorphism(random_aut_params(g, 5));
  CHECK(round_trip(f) == f);

  auto sym = symbolic_family(FamilyTag::TP2, 5, MPoly(2));
  CHECK(round_trip(sym) == sym);
  FamilySpec<Rat> spec{FamilyTag::TP0, 5, 0, {3, 1, 2, 0, 5}};
  CHECK(round_trip(spec) == spec);

  auto rep = check_identity(instantiate(FamilySpec<Rat>{FamilyTag::Dim4, 4, -4, {0, 1, 0, 0}}), Identity::jacobi);
  auto rep2 = round_trip(rep);
  REQUIRE(rep2.entries.size() == rep.entries.size());
  CHECK(rep2.entries[0].value == rep.entries[0].value);
  CHECK(rep2.entries[0].indices == rep.entries[0].indices);
  auto mixed = check_identity(instantiate(FamilySpec<Rat>{FamilyTag::TP0, 4, 0, {1, 0, 0, 0}}), Identity::mixed_trivial);
  CHECK(round_trip(mixed).entries.front().part == mixed.entries.front().part);
}

TEST_CASE("results") {
  auto space = solve(4, Rat(3), Identity::transposed);
  auto s2 = round_trip(space);
  CHECK(s2.free == space.free);
  CHECK(s2.basis == space.basis);
  CHECK(s2.forced == space.forced);
  CHECK(s2.kind == space.kind);
  json j = space;
  CHECK(j.at("kind") == "transposed");
  CHECK(j.at("delta") == "3");

  auto m = match_family(solve(5, Rat(1), Identity::transposed), symbolic_family(FamilyTag::TP1, 5, MPoly(1)));
  auto m2 = round_trip(m);
  CHECK(m2.outcome == m.outcome);
  CHECK(m2.substitution == m.substitution);

  auto c = canonicalize(FamilySpec<Rat>{FamilyTag::TP0, 5, 0, {3, 1, 2, 0, 5}});
  auto c2 = round_trip(c);
  CHECK(c2.spec == c.spec);
  CHECK(c2.witness.total == c.witness.total);
  CHECK(c2.witness.steps.size() == c.witness.steps.size());
  CHECK(c2.radical == c.radical);
  CHECK(c2.notes == c.notes);
  CHECK(json(c).at("radical").at("m") == 2);

  auto inv = invariants(FamilySpec<Rat>{FamilyTag::TP1, 6, 1, {1, 0, 5, 0, 0}});
  CHECK(round_trip(inv) == inv);
  auto inv0 = invariants(FamilySpec<Rat>{FamilyTag::TP1, 6, 1, {0, 0, 0, 0, 0}});
  CHECK(json(inv0).at("s") == "inf");
  CHECK(round_trip(inv0) == inv0);

  auto r = iso_test(FamilySpec<Rat>{FamilyTag::TP0, 5, 0, {4, 0, 0, 0, 0}}, FamilySpec<Rat>{FamilyTag::TP0, 5, 0, {9, 0, 0, 0, 0}});
  auto r2 = round_trip(r);
  CHECK(r2.decision == r.decision);
  CHECK(r2.witness == r.witness);
}
