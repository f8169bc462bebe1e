#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigdim/field.hpp"

namespace rigdim {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> vertex_index(const std::string& name) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;
  /// Throws Error on duplicate names or dangling endpoints.
  void validate() const;
};

/// Arrow indices, composed left to right: {a, b} is "first a, then b".
using Path = std::vector<std::size_t>;

struct Term {
  Scalar coeff;
  Path path;
};

struct Relation {
  std::vector<Term> terms;
  std::string text;
};

struct BasisElement {
  std::size_t source = 0;
  std::size_t target = 0;
  /// Path length for quiver algebras; radical layer for structure-constant
  /// algebras. rad^k is spanned by the elements of degree >= k.
  std::size_t degree = 0;
  /// Arrow word whose product equals this element (empty for idempotents).
  Path path;
};

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A finite-dimensional basic algebra with a complete set of primitive
/// orthogonal idempotents (one per vertex), given by a basis adapted to the
/// radical filtration and exact structure constants.
///
/// Products follow the path convention: product(a, b) is "first a, then b"
/// and vanishes unless target(a) == source(b). Every basis element is the
/// product of the arrows along its path, so a representation of the quiver is
/// enough to describe a module.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  struct Data {
    Field field = Field::rational();
    Quiver quiver;
    std::vector<BasisElement> basis;
    std::vector<std::size_t> idempotents;    // basis index per vertex
    std::vector<std::size_t> arrow_elements; // basis index per arrow
    std::vector<SparseVector> products;      // dim*dim, row-major (a, b)
    std::vector<Relation> relations;         // empty for structure-constant algebras
    bool has_presentation = false;
  };

  explicit Algebra(Data data);

  const Field& field() const { return d_.field; }
  const Quiver& quiver() const { return d_.quiver; }
  std::size_t num_vertices() const { return d_.quiver.vertices.size(); }
  const std::string& vertex_name(std::size_t v) const { return d_.quiver.vertices[v]; }
  const std::vector<Arrow>& arrows() const { return d_.quiver.arrows; }
  std::size_t dim() const { return d_.basis.size(); }
  const BasisElement& basis(std::size_t i) const { return d_.basis[i]; }
  const std::vector<BasisElement>& basis() const { return d_.basis; }
  std::size_t idempotent(std::size_t v) const { return d_.idempotents[v]; }
  std::size_t arrow_element(std::size_t a) const { return d_.arrow_elements[a]; }
  const SparseVector& product(std::size_t a, std::size_t b) const { return d_.products[a * dim() + b]; }
  const std::vector<Relation>& relations() const { return d_.relations; }
  bool has_presentation() const { return d_.has_presentation; }

  /// Least N with rad^N = 0.
  std::size_t loewy_length() const;
  bool is_semisimple() const { return arrows().empty(); }
  /// Every vertex has in-degree and out-degree at most one.
  bool is_nakayama() const;
  std::size_t in_degree(std::size_t v) const;
  std::size_t out_degree(std::size_t v) const;
  /// Connected components of the underlying graph, vertices ascending.
  std::vector<std::vector<std::size_t>> components() const;

  /// Bilinear product of coordinate vectors.
  std::vector<Scalar> multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

  /// Arrows reversed, relations mirrored, same basis with reversed words.
  /// Cached, and opposite(opposite(A)) returns A itself while A is alive.
  AlgebraPtr opposite() const;

  /// Same field, quiver, basis words and structure constants.
  bool same_structure(const Algebra& other) const;

  std::string path_label(const Path& p, std::size_t vertex) const;

  const Data& data() const { return d_; }

 private:
  Data d_;
  mutable std::mutex op_mutex_;
  mutable AlgebraPtr op_strong_;
  mutable std::weak_ptr<const Algebra> op_weak_;
};

inline constexpr std::size_t kDefaultMaxPathLength = 64;

/// kQ/I for a length-homogeneous admissible ideal. The basis is chosen
/// degree by degree: paths of length d modulo the degree-d part of the ideal,
/// keeping the lexicographically smallest paths (by arrow names) as normal
/// forms. Throws NotAdmissible, NotHomogeneous, NotFiniteDimensional.
AlgebraPtr build_algebra(Field field, Quiver quiver, std::vector<Relation> relations,
                         std::size_t max_path_length = kDefaultMaxPathLength);

/// Structure-constant algebra; `data.products` indexed by basis pairs.
AlgebraPtr make_algebra(Algebra::Data data);

AlgebraPtr opposite(const AlgebraPtr& alg);

/// Disjoint union of quivers, concatenated relations. Throws FieldMismatch.
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

/// Parses "alpha*beta - 2*gamma*delta". Throws ParseError on unknown arrows.
Relation parse_relation(const Field& field, const Quiver& quiver, const std::string& text);

/// Fixture algebras used throughout the tests and the acceptance suite.
namespace fixtures {
AlgebraPtr a2(Field f = Field::rational());           // 1 -> 2
AlgebraPtr a3(Field f = Field::rational());           // 1 -> 2 -> 3
AlgebraPtr a3r(Field f = Field::rational());          // 1 -> 2 -> 3, ab = 0
AlgebraPtr cyc2(Field f = Field::rational());         // 1 <-> 2, ab = ba = 0
AlgebraPtr dual_numbers(Field f = Field::rational()); // k[x]/(x^2)
AlgebraPtr truncated_poly(std::size_t n, Field f = Field::rational());  // k[x]/(x^n)
/// Cyclic quiver on e vertices, all paths of length 2 zero.
AlgebraPtr cyclic_nakayama(std::size_t e, Field f = Field::rational());
AlgebraPtr semisimple(std::size_t n, Field f = Field::rational());
}  // namespace fixtures

}  // namespace rigdim
