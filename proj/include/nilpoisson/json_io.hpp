#pragma once

// JSON forms of every public value. Rationals are exact strings ("3/2").

#include <json.hpp>

#include "nilpoisson/classify.hpp"
#include "nilpoisson/solver.hpp"

namespace nlohmann {
template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = nilpoisson::to_string(q); }
  static void from_json(const json& j, mpq_class& q) {
    if (!j.is_string()) throw nilpoisson::DomainError("rational must be a string like \"3/2\"");
    q = nilpoisson::parse_rat(j.get<std::string>());
  }
};
}  // namespace nlohmann

namespace nilpoisson {

using json = nlohmann::json;

void to_json(json& j, const RadExt& a);
void from_json(const json& j, RadExt& a);
void to_json(json& j, const MPoly& p);
void from_json(const json& j, MPoly& p);

template <Scalar S>
void to_json(json& j, const Bracket<S>& b) {
  json entries = json::array();
  for (int i = 1; i <= b.dim(); ++i)
    for (int k = i + 1; k <= b.dim(); ++k)
      if (!is_zero_vec(b.upper(i, k))) entries.push_back({{"i", i}, {"j", k}, {"coeffs", b.upper(i, k)}});
  j = {{"n", b.dim()}, {"entries", entries}};
}

template <Scalar S>
void from_json(const json& j, Bracket<S>& b) {
  b = Bracket<S>(j.at("n").get<int>());
  for (const auto& e : j.at("entries")) b.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("coeffs").get<Vec<S>>());
}

template <Scalar S>
void to_json(json& j, const CommAlgebra<S>& a) {
  json entries = json::array();
  for (int i = 1; i <= a.dim(); ++i)
    for (int k = i; k <= a.dim(); ++k)
      if (!is_zero_vec(a.product(i, k))) entries.push_back({{"i", i}, {"j", k}, {"coeffs", a.product(i, k)}});
  j = {{"n", a.dim()}, {"entries", entries}};
}

template <Scalar S>
void from_json(const json& j, CommAlgebra<S>& a) {
  a = CommAlgebra<S>(j.at("n").get<int>());
  for (const auto& e : j.at("entries"))
    a.set_product(e.at("i").get<int>(), e.at("j").get<int>(), e.at("coeffs").get<Vec<S>>(), true);
}

template <Scalar S>
void to_json(json& j, const PoissonPair<S>& p) {
  j = {{"delta", p.delta}, {"product", p.product}, {"bracket", p.bracket}};
}

template <Scalar S>
void from_json(const json& j, PoissonPair<S>& p) {
  p.delta = j.at("delta").get<S>();
  p.product = j.at("product").get<CommAlgebra<S>>();
  p.bracket = j.at("bracket").get<Bracket<S>>();
}

template <Scalar S>
void to_json(json& j, const Automorphism<S>& f) {
  j = {{"A", f.params()}};
}

template <Scalar S>
void from_json(const json& j, Automorphism<S>& f) {
  f = build_automorphism(j.at("A").get<std::vector<S>>());
}

template <Scalar S>
void to_json(json& j, const FamilySpec<S>& f) {
  j = {{"family", tag_name(f.tag)}, {"n", f.n}, {"delta", f.delta}, {"alphas", f.alphas}};
}

template <Scalar S>
void from_json(const json& j, FamilySpec<S>& f) {
  f.tag = parse_tag(j.at("family").get<std::string>());
  f.n = j.at("n").get<int>();
  f.delta = j.at("delta").get<S>();
  f.alphas = j.at("alphas").get<std::vector<S>>();
}

template <Scalar S>
void to_json(json& j, const ResidualReport<S>& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json x = {{"indices", e.indices}, {"coord", e.coord}, {"value", e.value}};
    if (!e.part.empty()) x["part"] = e.part;
    entries.push_back(x);
  }
  j = {{"kind", r.kind}, {"all_zero", r.all_zero()}, {"entries", entries}};
}

template <Scalar S>
void from_json(const json& j, ResidualReport<S>& r) {
  r.kind = j.at("kind").get<std::string>();
  r.entries.clear();
  for (const auto& e : j.at("entries"))
    r.entries.push_back({e.at("indices").get<std::vector<int>>(), e.at("coord").get<int>(), e.at("value").get<S>(),
                         e.value("part", std::string())});
}

void to_json(json& j, const SolutionSpace& s);
void from_json(const json& j, SolutionSpace& s);
void to_json(json& j, const MatchReport& m);
void from_json(const json& j, MatchReport& m);
void to_json(json& j, const CanonicalForm& c);
void from_json(const json& j, CanonicalForm& c);
void to_json(json& j, const InvariantTuple& t);
void from_json(const json& j, InvariantTuple& t);
void to_json(json& j, const IsoResult& r);
void from_json(const json& j, IsoResult& r);

}  // namespace nilpoisson
