#pragma once

#include <cstddef>
#include <vector>

#include "rigdim/homological.hpp"

namespace rigdim {

/// E = End_A(X_1 + ... + X_n) for indecomposable, pairwise non-isomorphic X_i,
/// rebuilt as a basic algebra over its own quiver: vertex i is the summand
/// X_i, the product is "first f, then g" (g o f), and the basis is a monomial
/// basis adapted to the radical filtration.
struct EndoAlgebra {
  std::vector<Module> summands;
  AlgebraPtr algebra;
  /// dim Hom(X_i, X_j), row-major.
  std::vector<std::size_t> block_dims;
  std::size_t radical_dim = 0;
};

/// Throws UnsupportedCharacteristic (p <= dim E), SplitnessError,
/// NonBasicInput.
EndoAlgebra endo_algebra(const std::vector<Module>& summands);

/// End(M) is local, by the trace-form radical. Throws
/// UnsupportedCharacteristic when p <= dim End(M).
bool is_indecomposable(const Module& m);

/// gldim End(M) through minimal right add(M)-approximations over A.
/// Throws NotGenerator.
ValueWithStatus endo_gldim(const std::vector<Module>& summands, const Options& opt = {});
/// gldim of the structure-constant algebra E itself.
ValueWithStatus endo_gldim_direct(const std::vector<Module>& summands, const Options& opt = {});
ValueWithStatus endo_domdim(const std::vector<Module>& summands, const Options& opt = {});

struct MuellerResult {
  ValueWithStatus evd_plus_2;
  ValueWithStatus domdim_direct;
  bool agree = false;
};
/// Throws NotGeneratorCogenerator.
MuellerResult mueller_check(const std::vector<Module>& summands, const Options& opt = {});

/// Every P(i) is isomorphic to some summand (and every I(i), for the second).
bool is_generator(const std::vector<Module>& summands);
bool is_generator_cogenerator(const std::vector<Module>& summands);

}  // namespace rigdim
