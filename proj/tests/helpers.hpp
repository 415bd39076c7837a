#pragma once

#include <random>
#include <vector>

#include "nilpoisson/families.hpp"

namespace testing_support {

using namespace nilpoisson;

inline Rat small_rat(std::mt19937& g, int span = 6) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  return rat(num(g), den(g));
}

inline Rat nonzero_rat(std::mt19937& g, int span = 6) {
  Rat r;
  do r = small_rat(g, span);
  while (is_zero(r));
  return r;
}

// Random parameters with frequent zeros so degenerate shapes show up.
inline std::vector<Rat> sparse_params(std::mt19937& g, std::size_t k, double zero_prob = 0.4) {
  std::bernoulli_distribution z(zero_prob);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(z(g) ? Rat(0) : nonzero_rat(g));
  return out;
}

inline std::vector<Rat> random_aut_params(std::mt19937& g, int n) {
  std::vector<Rat> A;
  A.push_back(nonzero_rat(g, 3));
  for (int i = 2; i <= n; ++i) A.push_back(small_rat(g, 3));
  return A;
}

inline Vec<Rat> random_vec(std::mt19937& g, int n) {
  Vec<Rat> v;
  for (int i = 0; i < n; ++i) v.push_back(small_rat(g));
  return v;
}

}  // namespace testing_support
