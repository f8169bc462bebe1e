#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigdim/module.hpp"

namespace rigdim {

enum class Status { exact, at_least, infinite };

/// A dimension-like value. For at_least, `value` is the bound reached.
struct ValueWithStatus {
  Status status = Status::exact;
  std::size_t value = 0;

  static ValueWithStatus exact(std::size_t v) { return {Status::exact, v}; }
  static ValueWithStatus at_least(std::size_t v) { return {Status::at_least, v}; }
  static ValueWithStatus infinite() { return {Status::infinite, 0}; }

  bool is_exact() const { return status == Status::exact; }
  bool is_infinite() const { return status == Status::infinite; }
  /// Shift by a constant; infinity absorbs.
  ValueWithStatus plus(std::size_t k) const;
  std::string str() const;

  friend bool operator==(const ValueWithStatus& a, const ValueWithStatus& b) {
    return a.status == b.status && (a.status == Status::infinite || a.value == b.value);
  }
};

/// max of several dimension values: infinity dominates, then any at_least.
ValueWithStatus combine_max(const std::vector<ValueWithStatus>& values);

inline constexpr std::size_t kDefaultCutoff = 30;

struct Options {
  std::size_t cutoff = kDefaultCutoff;
  std::uint64_t seed = kDefaultSeed;
  std::size_t iso_trials = kDefaultIsoTrials;
};

struct Resolution {
  enum class End { complete, truncated, periodic };

  Direction direction = Direction::syzygy;
  /// P_0, P_1, ... (or I^0, I^1, ...).
  std::vector<StandardSum> terms;
  /// Projective: P_0 -> M, then P_t -> P_{t-1}. Injective: M -> I^0, then
  /// I^{t-1} -> I^t.
  std::vector<ModuleMap> differentials;
  /// M, Omega M, Omega^2 M, ... (or cosyzygies), one past the last term.
  std::vector<Module> syzygies;
  End end = End::complete;
  /// complete: the length; truncated: the cutoff.
  std::size_t length = 0;
  /// periodic: syzygies[entry + period] is isomorphic to syzygies[entry].
  std::size_t period = 0;
  std::size_t entry = 0;
};

/// Minimal resolution, stopped by a zero syzygy, a certified repetition of
/// an earlier syzygy, or the cutoff.
Resolution projective_resolution(const Module& m, const Options& opt = {});
Resolution injective_resolution(const Module& m, const Options& opt = {});

ValueWithStatus projective_dimension(const Module& m, const Options& opt = {});
/// Computed from cosyzygies directly.
ValueWithStatus injective_dimension(const Module& m, const Options& opt = {});
ValueWithStatus global_dimension(const AlgebraPtr& alg, const Options& opt = {});
ValueWithStatus dominant_dimension(const AlgebraPtr& alg, const Options& opt = {});
bool is_selfinjective(const AlgebraPtr& alg);

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i);

/// Largest n <= cutoff with Ext^j(M, N) = 0 for 1 <= j <= n. Infinite when
/// the syzygies of M end, or repeat after all Ext groups so far vanished.
ValueWithStatus ext_vanishing_degree(const Module& m, const Module& n, const Options& opt = {});
/// evd(M) = ext_vanishing_degree(M, M).
ValueWithStatus rigidity_degree(const Module& m, const Options& opt = {});

struct HomologicalDims {
  ValueWithStatus gldim, domdim, idim_left, idim_right;
  bool selfinjective = false;
  bool nakayama = false;
};
HomologicalDims homological_dims(const AlgebraPtr& alg, const Options& opt = {});

/// A list of indecomposable modules; `complete` means every indecomposable
/// occurs up to isomorphism.
struct IndecList {
  std::vector<Module> modules;
  bool complete = false;
};

/// M = direct sum of `summands`. Throws IncompleteList, Inconclusive.
bool max_orthogonal_check(const std::vector<Module>& summands, std::size_t n, const IndecList& indecs,
                          const Options& opt = {});

struct NodeData {
  std::vector<Module> nodes;
  /// Absent when there are no nodes.
  std::optional<ValueWithStatus> rho;
};
/// Self-injective algebras only (throws NotSelfInjective).
NodeData nodes_and_rho(const AlgebraPtr& alg, const Options& opt = {});

}  // namespace rigdim
