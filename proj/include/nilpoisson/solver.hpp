#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nilpoisson/families.hpp"

namespace nilpoisson {

// General antisymmetric bracket on mu_0^n: [e_i, e_j] = sum_t c_{i,j,t} e_t.
// Unknowns are ordered with the pair (i, j) descending and t ascending, so
// that under first-nonzero-column pivoting the [e_1, e_2] coefficients are
// the ones left free.
struct AnsatzBracket {
  struct Unknown {
    int i, j, t;
  };
  int n = 0;
  std::vector<Unknown> unknowns;
  std::vector<std::string> names;

  explicit AnsatzBracket(int n);
  int index(int i, int j, int t) const;
  Bracket<MPoly> bracket() const;
};

std::string unknown_name(int i, int j, int t);

struct LinearSystem {
  struct Row {
    std::vector<std::pair<int, Rat>> coeffs;  // sorted by column, leading coefficient 1
    std::array<int, 3> triple;                // (x, y, z) as in the identity's formula
    int coord;
  };
  int n = 0;
  Rat delta;
  Identity kind = Identity::transposed;
  std::vector<std::string> unknowns;
  std::vector<Row> rows;
  std::size_t generated = 0;  // rows before dropping zeros and duplicates
};

LinearSystem assemble(int n, const Rat& delta, Identity kind);
// Symbolic delta is only meaningful for verification; a constant MPoly is accepted.
LinearSystem assemble(int n, const MPoly& delta, Identity kind);

struct SolutionSpace {
  int n = 0;
  Rat delta;
  Identity kind = Identity::transposed;
  std::vector<std::string> free;    // p1, p2, ...
  std::vector<std::string> origin;  // unknown each parameter was read from
  std::vector<Bracket<Rat>> basis;  // one per free parameter
  std::vector<MPoly> residual_conditions;
  std::vector<std::string> forced;  // "p3=0"

  Bracket<MPoly> parametrized() const;
  PoissonPair<MPoly> pair() const;
};

SolutionSpace nullspace(const LinearSystem& sys);
SolutionSpace jacobi_reduce(const SolutionSpace& space);
SolutionSpace solve(int n, const Rat& delta, Identity kind);

struct MatchReport {
  enum class Outcome { match, mismatch, inconclusive };
  Outcome outcome = Outcome::inconclusive;
  std::map<std::string, MPoly> substitution;  // free parameter -> linear form in alphas
  std::string witness;                        // where the two sides differ
  std::string note;
};

std::string outcome_name(MatchReport::Outcome o);

// Equality of two linearly parametrized brackets up to an invertible linear
// change of parameters.
MatchReport match_family(const SolutionSpace& space, const FamilySpec<MPoly>& spec);

// The family a solved transposed space is expected to match, with the
// alpha_1 constraint of the low-dimensional forms already applied.
FamilySpec<MPoly> expected_family(int n, const Rat& delta, Identity kind, bool after_jacobi);

}  // namespace nilpoisson
