#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

using V = ValueWithStatus;

// Product of any two basis elements of positive degree stays in degrees
// >= the sum, so products of `loewy` radical elements vanish.
bool radical_nilpotent(const Algebra& e) {
  const std::size_t n = e.dim();
  std::vector<std::vector<Scalar>> layer;
  for (std::size_t b = 0; b < n; ++b)
    if (e.basis(b).degree >= 1) {
      std::vector<Scalar> v(n);
      v[b] = 1;
      layer.push_back(v);
    }
  std::vector<std::vector<Scalar>> rad = layer;
  for (std::size_t step = 0; step <= n && !layer.empty(); ++step) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& x : layer)
      for (const auto& y : rad) {
        auto z = e.multiply(x, y);
        bool nz = false;
        for (const auto& c : z) nz = nz || c != 0;
        if (nz) next.push_back(z);
      }
    // keep a spanning set small
    if (!next.empty()) {
      Matrix m = Matrix::from_columns(e.field(), n, next);
      Matrix basis = column_basis(m);
      next.clear();
      for (std::size_t c = 0; c < basis.cols(); ++c) next.push_back(basis.column(c));
    }
    layer = next;
  }
  return layer.empty();
}

}  // namespace

TEST_CASE("endomorphism algebra shapes") {
  auto a2 = fixtures::a2();
  EndoAlgebra e = endo_algebra(projectives(a2));
  CHECK(e.algebra->dim() == 3);
  CHECK(e.radical_dim == 1);
  CHECK(e.algebra->num_vertices() == 2);
  auto b = fixtures::cyc2();
  EndoAlgebra eb = endo_algebra(with(projectives(b), {simple(b, 0), simple(b, 1)}));
  std::size_t total = 0;
  for (auto d : eb.block_dims) total += d;
  CHECK(total == eb.algebra->dim());
  CHECK(eb.algebra->dim() - eb.radical_dim == 4);
  CHECK(endo_algebra({simple(b, 0)}).algebra->dim() == 1);
}

TEST_CASE("endomorphism algebra errors") {
  auto b = fixtures::cyc2();
  CHECK_THROWS_AS(endo_algebra({simple(b, 0), simple(b, 0)}), NonBasicInput);
  auto f2 = fixtures::cyc2(Field::prime(2));
  CHECK_THROWS_AS(endo_algebra(with(projectives(f2), {simple(f2, 0)})), UnsupportedCharacteristic);
  CHECK_THROWS_AS(is_indecomposable(regular(f2)), UnsupportedCharacteristic);
  // Kronecker module with End = Q(i)
  Field q = Field::rational();
  Quiver k{{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}};
  auto kr = build_algebra(q, k, {});
  Module rot(kr, {2, 2}, {Matrix::identity(q, 2), Matrix::from_rows(q, {{0, -1}, {1, 0}})});
  CHECK_THROWS_AS(endo_algebra({rot}), SplitnessError);
  CHECK_THROWS_AS(endo_gldim({simple(b, 0)}), NotGenerator);
  CHECK_THROWS_AS(mueller_check(projectives(fixtures::a2())), NotGeneratorCogenerator);
}

TEST_CASE("indecomposability") {
  auto a2 = fixtures::a2();
  CHECK(is_indecomposable(projective(a2, 0)));
  CHECK(is_indecomposable(simple(a2, 0)));
  CHECK_FALSE(is_indecomposable(regular(a2)));
  CHECK_FALSE(is_indecomposable(Module::zero(a2)));
  CHECK(is_indecomposable(regular(fixtures::truncated_poly(3))));
  auto b = fixtures::cyc2();
  for (const auto& m : enumerate_indecomposables(b).modules) CHECK(is_indecomposable(m));
}

TEST_CASE("generators") {
  auto b = fixtures::cyc2();
  CHECK(is_generator(projectives(b)));
  CHECK(is_generator_cogenerator(projectives(b)));
  auto a2 = fixtures::a2();
  CHECK(is_generator(projectives(a2)));
  CHECK_FALSE(is_generator_cogenerator(projectives(a2)));
  CHECK(is_generator_cogenerator(with(projectives(a2), {simple(a2, 0)})));
}

TEST_CASE("endo invariants over CYC2") {
  auto b = fixtures::cyc2();
  auto bs1 = with(projectives(b), {simple(b, 0)});
  auto bs2 = with(projectives(b), {simple(b, 1)});
  auto bs12 = with(projectives(b), {simple(b, 0), simple(b, 1)});
  CHECK(endo_domdim(bs1) == V::exact(3));
  CHECK(endo_domdim(bs2) == V::exact(3));
  CHECK(endo_domdim(bs12) == V::exact(2));
  CHECK(endo_gldim(bs1) == V::exact(3));
  CHECK(endo_gldim_direct(bs1) == V::exact(3));
  CHECK(endo_gldim(projectives(b)).is_infinite());
  CHECK(endo_gldim_direct(projectives(b)).is_infinite());
  MuellerResult m = mueller_check(bs1);
  CHECK(m.agree);
  CHECK(m.evd_plus_2 == V::exact(3));
}

TEST_CASE("endo invariants over A3R and NAK(e)") {
  auto a3r = fixtures::a3r();
  auto bd = with(projectives(a3r), {injective(a3r, 0)});
  CHECK(endo_gldim(bd) == V::exact(3));
  CHECK(endo_domdim(bd) == V::exact(3));
  for (std::size_t e = 2; e <= 4; ++e) {
    auto a = fixtures::cyclic_nakayama(e);
    auto as = with(projectives(a), {simple(a, 0)});
    CHECK(endo_gldim(as) == V::exact(e + 1));
    CHECK(endo_domdim(as) == V::exact(e + 1));
  }
}

TEST_CASE("property: idempotents, radical and the two gldim routes") {
  for (const auto& n : fixture_algebras()) {
    CAPTURE(n.name);
    IndecList l = enumerate_indecomposables(n.alg);
    EndoAlgebra e = endo_algebra(l.modules);
    std::size_t total = 0;
    for (auto d : e.block_dims) total += d;
    CHECK(total == e.algebra->dim());
    CHECK(e.algebra->dim() - e.radical_dim == l.modules.size());
    CHECK(radical_nilpotent(*e.algebra));
    RigidityReport r = rigidity_dimension(n.alg);
    for (const auto& c : r.candidates) {
      CAPTURE(c.names.size());
      V direct = endo_gldim_direct(c.summands);
      CHECK(endo_gldim(c.summands) == direct);
      if (c.gldim) CHECK(*c.gldim == direct);
      CHECK(mueller_check(c.summands).agree);
    }
  }
}
