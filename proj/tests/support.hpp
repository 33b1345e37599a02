#pragma once

// Shared fixtures: small named algebras and seeded random generators.

#include <random>

#include "slie/catalog.hpp"
#include "slie/recognize.hpp"
#include "slie/superalg.hpp"

namespace slie::testing {

inline SuperAlgebra entry(const char* id) { return find_entry(id)->algebra; }

inline SuperAlgebra heis(std::size_t m, std::size_t n) {
  return build_canonical(FamilyDescriptor::even_heisenberg(m, n));
}
inline SuperAlgebra odd_heis(std::size_t m) { return build_canonical(FamilyDescriptor::odd_heisenberg(m)); }

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Vector basis_vector(const SuperAlgebra& a, std::size_t k1) { return unit_vector(a.size(), k1 - 1); }

/// Random class <= 2 superalgebra of dim <= (3|3): brackets of the first
/// generators land in a chosen central block, so Jacobi holds trivially.
inline SuperAlgebra random_class_two(std::mt19937& rng, int id) {
  std::uniform_int_distribution<int> dim3(0, 3), coef(-2, 2);
  std::size_t even = 0, odd = 0;
  while (even + odd == 0) {
    even = dim3(rng);
    odd = dim3(rng);
  }
  std::vector<std::string> en, on;
  for (std::size_t i = 0; i < even; ++i) en.push_back("e" + std::to_string(i + 1));
  for (std::size_t i = 0; i < odd; ++i) on.push_back("o" + std::to_string(i + 1));
  const std::size_t n = even + odd;
  std::vector<bool> central(n);
  for (std::size_t k = 0; k < n; ++k) central[k] = std::bernoulli_distribution(0.4)(rng);
  auto parity = [&](std::size_t k) { return k < even ? Parity::Even : Parity::Odd; };

  std::vector<SuperAlgebra::Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (central[i] || central[j]) continue;
      if (i == j && parity(i) == Parity::Even) continue;
      const Parity target = parity(i) + parity(j);
      Vector v = zero_vector(n);
      for (std::size_t k = 0; k < n; ++k)
        if (central[k] && parity(k) == target) v[k] = coef(rng);
      if (!is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  return SuperAlgebra::from_brackets("R" + std::to_string(id), en, on, entries);
}

/// Random invertible parity-preserving integer basis change.
inline Matrix random_basis_change(std::mt19937& rng, const GradedDim& d) {
  std::uniform_int_distribution<int> coef(-2, 2);
  const std::size_t n = d.total();
  while (true) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((i < d.even) == (j < d.even)) p(i, j) = coef(rng);
    if (inverse(p)) return p;
  }
}

}  // namespace slie::testing
