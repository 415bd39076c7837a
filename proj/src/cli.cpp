#include "nilpoisson/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "nilpoisson/json_io.hpp"

namespace nilpoisson::cli {

namespace {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_n() {
  const char* env = std::getenv("NILPOISSON_MAX_N");
  if (!env) return 10;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw ValidationError(std::string("NILPOISSON_MAX_N is not an integer: '") + env + "'");
  }
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

Rat rational_flag(const std::string& what, const std::string& s) {
  try {
    return parse_rat(s);
  } catch (const DomainError&) {
    throw ValidationError("malformed rational for " + what + ": '" + s + "' (expected p or p/q)");
  }
}

bool is_symbol(const std::string& s) {
  return !s.empty() && std::isalpha(static_cast<unsigned char>(s[0])) &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<int> dims_flag(const std::string& s, int lo) {
  std::vector<int> out;
  for (const auto& x : split(s)) {
    int v;
    try {
      std::size_t used = 0;
      v = std::stoi(x, &used);
      if (used != x.size()) throw std::invalid_argument(x);
    } catch (const std::exception&) {
      throw ValidationError("malformed dimension: '" + x + "'");
    }
    if (v < lo) throw ValidationError("dimension " + std::to_string(v) + " is below the minimum " + std::to_string(lo));
    if (v > max_n()) throw ValidationError("dimension " + std::to_string(v) + " exceeds NILPOISSON_MAX_N=" + std::to_string(max_n()));
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("no dimension given");
  return out;
}

int single_dim(const std::string& s, int lo) {
  auto v = dims_flag(s, lo);
  if (v.size() != 1) throw ValidationError("this subcommand takes a single --n");
  return v[0];
}

std::vector<Rat> rationals(const std::string& what, const std::string& s) {
  std::vector<Rat> out;
  for (const auto& x : split(s)) out.push_back(rational_flag(what, x));
  return out;
}

FamilySpec<Rat> concrete_spec(const std::string& fam, int n, const Rat& d, const std::string& alphas) {
  FamilyTag tag;
  try {
    tag = parse_tag(fam);
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
  try {
    check_family_dims(tag, n);
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
  auto a = alphas.empty() ? std::vector<Rat>{} : rationals("--alphas", alphas);
  const std::size_t want = slot_labels(tag, n).size();
  if (a.size() != want)
    throw ValidationError("family " + tag_name(tag) + " at n=" + std::to_string(n) + " takes " + std::to_string(want) +
                          " parameters, got " + std::to_string(a.size()));
  FamilySpec<Rat> s{tag, n, d, a};
  try {
    (void)instantiate(s);
  } catch (const DomainError& e) {
    throw ValidationError(std::string("parameters outside the family: ") + e.what());
  }
  return s;
}

// ---- human-readable rendering ----

template <Scalar S>
std::string linear_combination(const Vec<S>& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (is_zero(v[t])) continue;
    std::string c = to_string(v[t]);
    if (!s.empty()) s += " + ";
    if (c == "1")
      c.clear();
    else if (c == "-1")
      c = "-";
    else if (c.find_first_of(" +") != std::string::npos || (c.find('-', 1) != std::string::npos))
      c = "(" + c + ") ";
    else
      c += " ";
    s += c + "e_" + std::to_string(t + 1);
  }
  return s.empty() ? "0" : s;
}

void product_table(std::ostream& out, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) out << "  e_" << i << " · e_" << j << " = e_" << i + j << "\n";
}

template <Scalar S>
void bracket_rows(std::ostream& out, const Bracket<S>& b) {
  bool any = false;
  for (int i = 1; i <= b.dim(); ++i)
    for (int j = i + 1; j <= b.dim(); ++j) {
      if (is_zero_vec(b.upper(i, j))) continue;
      any = true;
      out << "  [e_" << i << ", e_" << j << "] = " << linear_combination(b.upper(i, j)) << "\n";
    }
  if (!any) out << "  (zero bracket)\n";
}

std::string params_text(const std::vector<RadExt>& A) {
  std::string s = "(";
  for (std::size_t k = 0; k < A.size(); ++k) s += (k ? ", " : "") + to_string(A[k]);
  return s + ")";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Runs jobs concurrently; results come back in job order.
template <class Job, class F>
std::vector<json> fan_out(const std::vector<Job>& jobs, F f) {
  std::vector<std::future<json>> fs;
  for (const auto& job : jobs) fs.push_back(std::async(std::launch::async, [&f, job] { return f(job); }));
  std::vector<json> out;
  for (auto& x : fs) out.push_back(x.get());
  return out;
}

struct Options {
  std::string n, delta = "0", identity, family, alphas, a, b, format = "json";
  bool law = false;
  int batch = 0;
  unsigned seed = 1;
};

std::vector<std::pair<int, Rat>> job_keys(const Options& o, int lo) {
  std::vector<std::pair<int, Rat>> jobs;
  for (int n : dims_flag(o.n, lo))
    for (const auto& d : split(o.delta)) {
      if (is_symbol(d)) throw UnsupportedMode("symbolic delta '" + d + "' cannot be solved; use the verify subcommand");
      jobs.emplace_back(n, rational_flag("--delta", d));
    }
  std::sort(jobs.begin(), jobs.end());
  jobs.erase(std::unique(jobs.begin(), jobs.end()), jobs.end());
  return jobs;
}

int cmd_solve(const Options& o, std::ostream& out) {
  Identity kind = o.identity.empty() ? Identity::transposed : parse_identity(o.identity);
  if (kind != Identity::transposed && kind != Identity::delta_poisson)
    throw ValidationError("solve takes --identity transposed or delta_poisson");
  auto jobs = job_keys(o, 2);
  struct Result {
    SolutionSpace space;
    MatchReport match;
    std::string family;
  };
  std::vector<Result> results(jobs.size());
  auto js = fan_out(jobs, [&](const std::pair<int, Rat>& job) {
    auto space = solve(job.first, job.second, kind);
    auto fam = expected_family(job.first, job.second, kind, true);
    auto m = match_family(space, fam);
    json j = {{"space", space}, {"match", m}, {"expected_family", tag_name(fam.tag)}, {"free_count", space.free.size()}};
    return j;
  });
  if (o.format == "human") {
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      const auto space = js[k].at("space").get<SolutionSpace>();
      out << "n=" << space.n << ", delta=" << to_string(space.delta) << ", identity " << identity_name(space.kind) << "\n";
      out << "product:\n";
      product_table(out, space.n);
      out << "bracket (" << space.free.size() << " free parameters):\n";
      Bracket<MPoly> b = space.parametrized();
      for (int i = 1; i <= b.dim(); ++i)
        for (int j = i + 1; j <= b.dim(); ++j)
          if (!is_zero_vec(b.upper(i, j))) out << "  [e_" << i << ", e_" << j << "] = " << linear_combination(b.upper(i, j)) << "\n";
      if (space.free.empty()) out << "  (zero bracket)\n";
      for (const auto& f : space.forced) out << "forced: " << f << "\n";
      for (const auto& c : space.residual_conditions) out << "condition: " << c.str() << " = 0\n";
      out << "match " << js[k].at("expected_family").get<std::string>() << ": " << js[k].at("match").at("outcome").get<std::string>()
          << "\n";
      if (k + 1 < jobs.size()) out << "\n";
    }
    return 0;
  }
  emit(out, js.size() == 1 ? js[0] : json(js));
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw ValidationError("verify needs --family");
  FamilyTag tag;
  try {
    tag = parse_tag(o.family);
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
  const int n = single_dim(o.n, 1);
  try {
    check_family_dims(tag, n);
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
  MPoly d = is_symbol(o.delta) ? MPoly::var(o.delta) : MPoly(rational_flag("--delta", o.delta));
  if (o.law) {
    try {
      auto rep = verify_transform_formula(tag, n, d);
      emit(out, rep);
    } catch (const DomainError& e) {
      throw ValidationError(e.what());
    }
    return 0;
  }
  FamilySpec<MPoly> spec = symbolic_family(tag, n, d);
  if (!o.alphas.empty()) {
    auto a = rationals("--alphas", o.alphas);
    if (a.size() != spec.alphas.size())
      throw ValidationError("family " + tag_name(tag) + " at n=" + std::to_string(n) + " takes " +
                            std::to_string(spec.alphas.size()) + " parameters, got " + std::to_string(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) spec.alphas[k] = MPoly(a[k]);
  }
  PoissonPair<MPoly> p;
  try {
    p = instantiate(spec);
  } catch (const DomainError& e) {
    throw ValidationError(std::string("parameters outside the family: ") + e.what());
  }
  std::vector<Identity> kinds;
  if (o.identity.empty() || o.identity == "all")
    kinds = {Identity::commutative, Identity::associative, Identity::jacobi, family_identity(tag)};
  else
    for (const auto& k : split(o.identity)) kinds.push_back(parse_identity(k));
  json reports = json::array();
  for (auto k : kinds) reports.push_back(check_identity(p, k));
  if (o.format == "human") {
    out << spec_label(spec) << "\n";
    for (const auto& r : reports) {
      out << "  " << r.at("kind").get<std::string>() << ": "
          << (r.at("all_zero").get<bool>() ? std::string("holds") : std::to_string(r.at("entries").size()) + " nonzero residuals")
          << "\n";
      for (const auto& e : r.at("entries")) {
        out << "    at " << e.at("indices").dump() << ", e_" << e.at("coord").get<int>() << ": " << e.at("value").at("text").get<std::string>();
        if (e.contains("part")) out << " (" << e.at("part").get<std::string>() << ")";
        out << "\n";
      }
    }
    return 0;
  }
  emit(out, reports.size() == 1 ? reports[0] : reports);
  return 0;
}

void human_canonical(std::ostream& out, const FamilySpec<Rat>& input, const CanonicalForm& c) {
  out << spec_label(input) << "\n  canonical: " << spec_label(c.spec) << "\n";
  bracket_rows(out, family_bracket(c.spec));
  for (std::size_t k = 0; k < c.witness.steps.size(); ++k)
    out << "  step " << k + 1 << ": A = " << params_text(c.witness.steps[k].params()) << "\n";
  out << "  total: A = " << params_text(c.witness.total.params()) << "\n";
  for (const auto& nt : c.notes) out << "  note: " << nt << "\n";
}

int cmd_canon(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw ValidationError("canon needs --family");
  const int n = single_dim(o.n, 1);
  const Rat d = rational_flag("--delta", o.delta);
  if (o.batch <= 0) {
    auto spec = concrete_spec(o.family, n, d, o.alphas);
    auto c = canonicalize(spec);
    if (o.format == "human")
      human_canonical(out, spec, c);
    else
      emit(out, json{{"input", spec}, {"canonical", c}, {"catalog_index", catalog_index(c, canonical_catalog(n, d))}});
    return 0;
  }
  // batch: a seeded corpus of random family members; the seed never
  // influences the mathematics, only which inputs are drawn
  FamilyTag tag;
  try {
    tag = parse_tag(o.family);
    check_family_dims(tag, n);
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
  std::mt19937 g(o.seed);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::bernoulli_distribution zero(0.4);
  std::vector<FamilySpec<Rat>> inputs;
  for (int tries = 0; static_cast<int>(inputs.size()) < o.batch && tries < 50 * o.batch; ++tries) {
    FamilySpec<Rat> s{tag, n, d, {}};
    for (std::size_t k = 0; k < slot_labels(tag, n).size(); ++k) s.alphas.push_back(zero(g) ? Rat(0) : rat(num(g), den(g)));
    try {
      (void)instantiate(s);
    } catch (const DomainError&) {
      continue;
    }
    inputs.push_back(std::move(s));
  }
  const auto catalog = canonical_catalog(n, d);
  auto js = fan_out(inputs, [&](const FamilySpec<Rat>& s) {
    auto c = canonicalize(s);
    return json{{"input", s}, {"canonical", c}, {"catalog_index", catalog_index(c, catalog)}};
  });
  if (o.format == "human") {
    for (const auto& j : js) human_canonical(out, j.at("input").get<FamilySpec<Rat>>(), j.at("canonical").get<CanonicalForm>());
    return 0;
  }
  emit(out, json{{"seed", o.seed}, {"results", js}});
  return 0;
}

int cmd_iso(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw ValidationError("iso needs --family");
  const int n = single_dim(o.n, 1);
  const Rat d = rational_flag("--delta", o.delta);
  auto a = concrete_spec(o.family, n, d, o.a);
  auto b = concrete_spec(o.family, n, d, o.b);
  auto r = iso_test(a, b);
  if (o.format == "human") {
    out << decision_name(r.decision) << " (" << r.reason << ")\n";
    if (r.witness) out << "  witness: A = " << params_text(r.witness->params()) << "\n";
    for (const auto& nt : r.notes) out << "  note: " << nt << "\n";
  } else {
    emit(out, json{{"a", a}, {"b", b}, {"result", r}, {"invariants", {invariants(a), invariants(b)}}});
  }
  return r.decision == IsoResult::Decision::inconclusive ? 2 : 0;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  auto jobs = job_keys(o, 1);
  auto js = fan_out(jobs, [](const std::pair<int, Rat>& job) {
    json entries = json::array();
    for (const auto& e : canonical_catalog(job.first, job.second))
      entries.push_back({{"label", e.label}, {"spec", e.spec}, {"modulus_slot", e.modulus_slot}, {"modulus_nonzero", e.modulus_nonzero}});
    return json{{"n", job.first}, {"delta", job.second}, {"entries", entries}};
  });
  if (o.format == "human") {
    for (const auto& j : js) {
      out << "n=" << j.at("n").get<int>() << ", delta=" << j.at("delta").get<std::string>() << "\n";
      for (const auto& e : j.at("entries")) out << "  " << e.at("label").get<std::string>() << "\n";
    }
    return 0;
  }
  emit(out, js.size() == 1 ? js[0] : json(js));
  return 0;
}

int cmd_discriminant(const Options& o, std::ostream& out) {
  json j = {{"polynomial", "delta^3 - 3*delta^2 + 2*delta"}, {"factored", "delta*(delta - 1)*(delta - 2)"}, {"roots", {"0", "1", "2"}}};
  if (!o.n.empty()) {
    const int n = single_dim(o.n, 2);
    auto sd = special_deltas(n);
    j["n"] = n;
    j["special_deltas"] = sd.values;
    j["irrational_conditions"] = sd.conditions;
  }
  if (o.format == "human") {
    out << "delta^3 - 3*delta^2 + 2*delta = delta*(delta - 1)*(delta - 2), roots 0, 1, 2\n";
    if (j.contains("n")) {
      out << "special delta at n=" << j["n"].get<int>() << ":";
      for (const auto& v : j["special_deltas"]) out << " " << v.get<std::string>();
      out << "\n";
      for (const auto& c : j["irrational_conditions"]) out << "  and the roots of " << c.get<std::string>() << " = 0\n";
    }
    return 0;
  }
  emit(out, j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transposed delta-Poisson structures on the null-filiform associative algebra"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "json or human")->check(CLI::IsMember({"json", "human"})); };

  auto* solve_cmd = app.add_subcommand("solve", "solve the linear system and reduce Jacobi on mu_0^n");
  solve_cmd->add_option("--n", o.n, "dimension, or a comma list")->required();
  solve_cmd->add_option("--delta", o.delta, "rational delta, or a comma list");
  solve_cmd->add_option("--identity", o.identity, "transposed or delta_poisson");
  add_format(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check identities of a family, or its transformation law");
  verify_cmd->add_option("--family", o.family, "TP0, TP1, TP2, TPdelta, Dim2, Dim3, Dim4, Trivial");
  verify_cmd->add_option("--n", o.n)->required();
  verify_cmd->add_option("--delta", o.delta, "rational, or a symbol such as delta");
  verify_cmd->add_option("--alphas", o.alphas, "comma list; omitted means symbolic");
  verify_cmd->add_option("--identity", o.identity, "identity name, comma list, or all");
  verify_cmd->add_flag("--law", o.law, "check the closed transformation law against push_bracket");
  add_format(verify_cmd);

  auto* canon_cmd = app.add_subcommand("canon", "canonical form with automorphism witness");
  canon_cmd->add_option("--family", o.family);
  canon_cmd->add_option("--n", o.n)->required();
  canon_cmd->add_option("--delta", o.delta);
  canon_cmd->add_option("--alphas", o.alphas);
  canon_cmd->add_option("--batch", o.batch, "canonicalize this many seeded random members instead");
  canon_cmd->add_option("--seed", o.seed);
  add_format(canon_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test between two members of a family");
  iso_cmd->add_option("--family", o.family);
  iso_cmd->add_option("--n", o.n)->required();
  iso_cmd->add_option("--delta", o.delta);
  iso_cmd->add_option("--a", o.a, "alphas of the first algebra")->required();
  iso_cmd->add_option("--b", o.b, "alphas of the second algebra")->required();
  add_format(iso_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "canonical representatives");
  catalog_cmd->add_option("--n", o.n)->required();
  catalog_cmd->add_option("--delta", o.delta);
  add_format(catalog_cmd);

  auto* disc_cmd = app.add_subcommand("discriminant", "the regime polynomial and special delta values");
  disc_cmd->add_option("--n", o.n);
  add_format(disc_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (canon_cmd->parsed()) return cmd_canon(o, out);
    if (iso_cmd->parsed()) return cmd_iso(o, out);
    if (catalog_cmd->parsed()) return cmd_catalog(o, out);
    if (disc_cmd->parsed()) return cmd_discriminant(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnsupportedMode& e) {
    err << "unsupported mode: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace nilpoisson::cli
