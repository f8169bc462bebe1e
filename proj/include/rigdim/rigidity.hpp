#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rigdim/endo.hpp"

namespace rigdim {

/// Nakayama algebras: every P(i)/rad^j, complete. Otherwise the distinct
/// standard modules, incomplete.
IndecList enumerate_indecomposables(const AlgebraPtr& alg);

/// Largest n <= cutoff with Ext^j(D(A), A) = 0 for 1 <= j <= n.
/// Throws SelfInjectiveInput.
ValueWithStatus ext_vanishing_bound(const AlgebraPtr& alg, const Options& opt = {});

/// Removes summands isomorphic to an earlier one. Throws Inconclusive.
std::vector<Module> basic_part(const std::vector<Module>& summands, const Options& opt = {});

struct Candidate {
  std::vector<Module> summands;
  std::vector<std::string> names;
  ValueWithStatus evd;
  /// Filled only for candidates the search had to inspect.
  std::optional<ValueWithStatus> gldim;
};

struct RigidityReport {
  enum class Completeness { exact, lower_bound_only };

  /// Exact (or infinite) value, or at_least(lo) together with `upper`.
  ValueWithStatus cf;
  /// Upper end of the interval when cf is not exact; absent means unbounded.
  std::optional<std::size_t> upper;
  std::vector<std::string> witness;
  std::optional<ValueWithStatus> ext_bound;
  std::optional<ValueWithStatus> idim_bound;
  std::size_t candidates_examined = 0;
  Completeness completeness = Completeness::exact;
  /// Largest n with cf >= n + 1; absent when cf is infinite.
  std::optional<std::size_t> rep_n_finite_up_to;
  std::string search;
  /// All candidates in search order.
  std::vector<Candidate> candidates;
};

/// cf(A). Uses `indecs` when given, else enumerate_indecomposables.
RigidityReport rigidity_dimension(const AlgebraPtr& alg, const Options& opt = {},
                                  const std::optional<IndecList>& indecs = std::nullopt);

}  // namespace rigdim
