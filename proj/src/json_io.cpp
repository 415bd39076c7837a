#include "nilpoisson/json_io.hpp"

namespace nilpoisson {

void to_json(json& j, const RadExt& a) {
  if (a.is_rational()) {
    j = to_string(a.to_rat());
    return;
  }
  j = {{"m", a.degree()}, {"q", a.radicand()}, {"coeffs", a.coeffs()}, {"text", to_string(a)}};
}

void from_json(const json& j, RadExt& a) {
  if (j.is_string()) {
    a = RadExt(parse_rat(j.get<std::string>()));
    return;
  }
  a = RadExt::from_coeffs(j.at("m").get<int>(), j.at("q").get<Rat>(), j.at("coeffs").get<std::vector<Rat>>());
}

void to_json(json& j, const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, c}));
  j = {{"text", p.str()}, {"vars", p.vars()}, {"terms", terms}};
}

void from_json(const json& j, MPoly& p) {
  // a bare rational string is accepted as a constant
  if (j.is_string()) {
    p = MPoly(parse_rat(j.get<std::string>()));
    return;
  }
  std::vector<std::pair<MPoly::Exps, Rat>> terms;
  for (const auto& t : j.at("terms")) terms.emplace_back(t.at(0).get<MPoly::Exps>(), t.at(1).get<Rat>());
  p = MPoly::from_terms(j.at("vars").get<std::vector<std::string>>(), terms);
}

void to_json(json& j, const SolutionSpace& s) {
  j = {{"n", s.n},
       {"delta", s.delta},
       {"kind", identity_name(s.kind)},
       {"free", s.free},
       {"origin", s.origin},
       {"basis", s.basis},
       {"residual_conditions", s.residual_conditions},
       {"forced", s.forced}};
}

void from_json(const json& j, SolutionSpace& s) {
  s.n = j.at("n").get<int>();
  s.delta = j.at("delta").get<Rat>();
  s.kind = parse_identity(j.at("kind").get<std::string>());
  s.free = j.at("free").get<std::vector<std::string>>();
  s.origin = j.value("origin", std::vector<std::string>(s.free.size()));
  s.basis = j.at("basis").get<std::vector<Bracket<Rat>>>();
  s.residual_conditions = j.at("residual_conditions").get<std::vector<MPoly>>();
  s.forced = j.at("forced").get<std::vector<std::string>>();
}

void to_json(json& j, const MatchReport& m) {
  json sub = json::object();
  for (const auto& [k, v] : m.substitution) sub[k] = v;
  j = {{"outcome", outcome_name(m.outcome)}, {"substitution", sub}, {"witness", m.witness}, {"note", m.note}};
}

void from_json(const json& j, MatchReport& m) {
  const std::string o = j.at("outcome").get<std::string>();
  if (o == "match")
    m.outcome = MatchReport::Outcome::match;
  else if (o == "mismatch")
    m.outcome = MatchReport::Outcome::mismatch;
  else if (o == "inconclusive")
    m.outcome = MatchReport::Outcome::inconclusive;
  else
    throw DomainError("unknown match outcome '" + o + "'");
  m.substitution.clear();
  for (const auto& [k, v] : j.at("substitution").items()) m.substitution[k] = v.get<MPoly>();
  m.witness = j.at("witness").get<std::string>();
  m.note = j.at("note").get<std::string>();
}

void to_json(json& j, const CanonicalForm& c) {
  json steps = json::array();
  for (const auto& s : c.witness.steps) steps.push_back(s.params());
  j = {{"spec", c.spec},
       {"witness", steps},
       {"total", c.witness.total.params()},
       {"modulus_slots", c.modulus_slots},
       {"scaled_slot", c.scaled_slot},
       {"radical", c.radical ? json{{"m", c.radical->first}, {"q", c.radical->second}} : json(nullptr)},
       {"notes", c.notes}};
}

void from_json(const json& j, CanonicalForm& c) {
  c.spec = j.at("spec").get<FamilySpec<RadExt>>();
  c.witness.steps.clear();
  for (const auto& s : j.at("witness")) c.witness.steps.push_back(build_automorphism(s.get<std::vector<RadExt>>()));
  c.witness.total = build_automorphism(j.at("total").get<std::vector<RadExt>>());
  c.modulus_slots = j.at("modulus_slots").get<std::vector<int>>();
  c.scaled_slot = j.at("scaled_slot").get<int>();
  const json& r = j.at("radical");
  if (r.is_null())
    c.radical.reset();
  else
    c.radical = std::make_pair(r.at("m").get<int>(), r.at("q").get<Rat>());
  c.notes = j.at("notes").get<std::vector<std::string>>();
}

void to_json(json& j, const InvariantTuple& t) {
  json sig = json::array();
  for (const auto& [label, kind] : t.signature) sig.push_back(json::array({label, kind}));
  j = {{"family", tag_name(t.tag)},
       {"n", t.n},
       {"delta", t.delta},
       {"s", t.s ? json(*t.s) : json("inf")},
       {"signature", sig},
       {"moduli", t.moduli}};
}

void from_json(const json& j, InvariantTuple& t) {
  t.tag = parse_tag(j.at("family").get<std::string>());
  t.n = j.at("n").get<int>();
  t.delta = j.at("delta").get<Rat>();
  const json& s = j.at("s");
  if (s.is_string()) {
    if (s.get<std::string>() != "inf") throw DomainError("s must be an integer or \"inf\"");
    t.s.reset();
  } else {
    t.s = s.get<int>();
  }
  t.signature.clear();
  for (const auto& x : j.at("signature")) t.signature.emplace_back(x.at(0).get<int>(), x.at(1).get<std::string>());
  t.moduli = j.at("moduli").get<std::vector<Rat>>();
}

void to_json(json& j, const IsoResult& r) {
  j = {{"decision", decision_name(r.decision)},
       {"reason", r.reason},
       {"witness", r.witness ? json(r.witness->params()) : json(nullptr)},
       {"notes", r.notes}};
}

void from_json(const json& j, IsoResult& r) {
  const std::string d = j.at("decision").get<std::string>();
  if (d == "isomorphic")
    r.decision = IsoResult::Decision::isomorphic;
  else if (d == "not_isomorphic")
    r.decision = IsoResult::Decision::not_isomorphic;
  else if (d == "inconclusive")
    r.decision = IsoResult::Decision::inconclusive;
  else
    throw DomainError("unknown iso decision '" + d + "'");
  r.reason = j.at("reason").get<std::string>();
  if (j.at("witness").is_null())
    r.witness.reset();
  else
    r.witness = build_automorphism(j.at("witness").get<std::vector<RadExt>>());
  r.notes = j.at("notes").get<std::vector<std::string>>();
}

}  // namespace nilpoisson
