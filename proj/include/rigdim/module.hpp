#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigdim/algebra.hpp"
#include "rigdim/matrix.hpp"

namespace rigdim {

/// A finite-dimensional module given as a representation of the quiver:
/// a space per vertex and, for each arrow a: s -> t, a dims[t] x dims[s]
/// matrix acting on column vectors.
class Module {
 public:
  Module() = default;
  /// Checks matrix shapes and, for presented algebras, every relation.
  /// Throws InvalidRepresentation.
  Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps, std::string name = {});

  /// No relation check; for modules produced by exact constructions.
  static Module trusted(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps,
                        std::string name = {});
  static Module zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const std::string& name() const { return name_; }
  Module named(std::string n) const;

  /// Composite of the arrow maps along a path (identity on vertex v if empty).
  Matrix path_action(const Path& p, std::size_t vertex) const;
  /// Action of basis element b of the algebra, M_source(b) -> M_target(b).
  Matrix element_action(std::size_t b) const;

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
  std::string name_;
};

/// Per-vertex linear maps commuting with the arrow actions.
struct ModuleMap {
  Module source;
  Module target;
  std::vector<Matrix> components;

  /// Exact check of the commutation relations.
  bool commutes() const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
};

ModuleMap identity_map(const Module& m);
ModuleMap zero_map(const Module& source, const Module& target);
/// first, then second (second o first).
ModuleMap compose(const ModuleMap& first, const ModuleMap& second);
ModuleMap add(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale(const ModuleMap& a, const Scalar& s);

struct HomSpace {
  std::vector<ModuleMap> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Throws AlgebraMismatch when the modules live over different algebras.
void require_same_algebra(const Module& a, const Module& b);

/// Basis of Hom(M, N) as the null space of the commutation system.
HomSpace hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

/// Maps flattened vertex by vertex, row-major: one column per map.
std::size_t hom_vector_length(const Module& m, const Module& n);
std::vector<Scalar> flatten(const ModuleMap& f);
ModuleMap unflatten(const Module& m, const Module& n, const std::vector<Scalar>& v);
/// Columns are the flattened basis maps.
Matrix hom_matrix(const HomSpace& h, const Module& m, const Module& n);

struct Inclusion {
  Module sub;
  ModuleMap map;
};
struct Projection {
  Module quotient;
  ModuleMap map;
};

/// Submodule spanned per vertex by the columns of `spans` (must be invariant).
Inclusion submodule(const Module& m, const std::vector<Matrix>& spans);
Projection quotient_module(const Module& m, const std::vector<Matrix>& spans);
Inclusion kernel(const ModuleMap& f);
Projection cokernel(const ModuleMap& f);
/// Per-vertex column bases of the image.
std::vector<Matrix> image_spans(const ModuleMap& f);

struct DirectSum {
  Module sum;
  std::vector<ModuleMap> inclusions;
  std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);
/// The map out of a direct sum whose restriction to part i is maps[i].
ModuleMap copairing(const DirectSum& ds, const std::vector<ModuleMap>& maps, const Module& target);

/// P(i): spanned by the basis elements starting at i, arrows acting by right
/// multiplication. dim Hom(P(i), M) = dim M_i.
Module projective(const AlgebraPtr& alg, std::size_t v);
Module simple(const AlgebraPtr& alg, std::size_t v);
/// I(i) = D(P_op(i)).
Module injective(const AlgebraPtr& alg, std::size_t v);
Module regular(const AlgebraPtr& alg);
/// D(A_A) as a left module: the direct sum of all I(i).
Module coregular(const AlgebraPtr& alg);

struct StandardModules {
  std::vector<Module> projectives, injectives, simples;
  Module regular, coregular;
};
StandardModules standard_modules(const AlgebraPtr& alg);

struct Structure {
  Inclusion radical;
  Inclusion socle;
  Projection top;
  /// dim top(M)_v per vertex.
  std::vector<std::size_t> top_multiplicities;
  std::vector<std::size_t> socle_multiplicities;
};
Structure structure(const Module& m);
std::vector<Matrix> radical_spans(const Module& m);
std::vector<Matrix> socle_spans(const Module& m);

/// A direct sum of indecomposable projectives (or injectives), one entry per
/// summand naming its vertex.
struct StandardSum {
  Module module;
  std::vector<std::size_t> vertices;
};

struct ProjectiveCover {
  StandardSum cover;
  ModuleMap epi;
};
struct InjectiveEnvelope {
  StandardSum envelope;
  ModuleMap mono;
};
ProjectiveCover projective_cover(const Module& m);
InjectiveEnvelope injective_envelope(const Module& m);

enum class Direction { syzygy, cosyzygy };
Inclusion syzygy(const Module& m);
Projection cosyzygy(const Module& m);
/// [Omega^1 M, ..., Omega^t M] (or cosyzygies).
std::vector<Module> syzygies(const Module& m, std::size_t t, Direction dir = Direction::syzygy);

/// D = Hom_k(-, k): a module over the opposite algebra with transposed maps.
Module dual(const Module& m);
ModuleMap dual(const ModuleMap& f);

/// Deterministic checks for indecomposable modules: P(i) and I(i) have
/// simple top/socle, so matching dimension vectors certify the isomorphism.
std::optional<std::size_t> projective_vertex(const Module& indecomposable);
std::optional<std::size_t> injective_vertex(const Module& indecomposable);
bool is_projective_indecomposable(const Module& m);
bool is_injective_indecomposable(const Module& m);

enum class IsoStatus { isomorphic, not_isomorphic, inconclusive };

struct IsoResult {
  IsoStatus status = IsoStatus::inconclusive;
  std::optional<ModuleMap> certificate;
};

inline constexpr std::uint64_t kDefaultSeed = 0;
inline constexpr std::size_t kDefaultIsoTrials = 64;

/// Quick invariants (dimension vectors, hom dimensions both ways), then a
/// seeded search for an invertible combination of the hom basis. A found
/// certificate is verified exactly; a miss is inconclusive, never "no".
IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed = kDefaultSeed,
                        std::size_t trials = kDefaultIsoTrials);

/// Random quotient of a sum of projectives by the image of a random map from
/// another sum of projectives. Always a valid module.
Module random_module(const AlgebraPtr& alg, std::uint64_t seed, std::size_t max_summands = 3);

}  // namespace rigdim
