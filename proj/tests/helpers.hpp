#pragma once

#include <random>
#include <string>
#include <vector>

#include "rigdim/errors.hpp"
#include "rigdim/rigidity.hpp"

namespace testing {

using namespace rigdim;

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int spread = 3,
                            int zero_bias = 0) {
  std::uniform_int_distribution<int> d(-spread, spread + zero_bias);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      int v = d(rng);
      if (v > spread) v = 0;
      m.set(i, j, Scalar(v));
    }
  return m;
}

struct Named {
  std::string name;
  AlgebraPtr alg;
};

/// The fixture algebras used throughout the suites.
inline std::vector<Named> fixture_algebras() {
  return {
      {"A2", fixtures::a2()},
      {"CYC2", fixtures::cyc2()},
      {"DUAL", fixtures::dual_numbers()},
      {"A3R", fixtures::a3r()},
      {"A3", fixtures::a3()},
      {"X3", fixtures::truncated_poly(3)},
      {"NAK3", fixtures::cyclic_nakayama(3)},
  };
}

inline std::vector<Module> projectives(const AlgebraPtr& alg) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) out.push_back(projective(alg, v));
  return out;
}

inline std::vector<Module> with(std::vector<Module> base, const std::vector<Module>& more) {
  base.insert(base.end(), more.begin(), more.end());
  return base;
}

inline bool maps_commute(const std::vector<ModuleMap>& maps) {
  for (const auto& f : maps)
    if (!f.commutes()) return false;
  return true;
}

}  // namespace testing
