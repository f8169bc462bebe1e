#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

std::vector<std::size_t> dims(const Module& m) { return m.dims(); }

bool associative(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::vector<Scalar> ex(n), ez(n), ey(n);
        ex[x] = 1;
        ey[y] = 1;
        ez[z] = 1;
        auto l = a.multiply(a.multiply(ex, ey), ez);
        auto r = a.multiply(ex, a.multiply(ey, ez));
        for (std::size_t i = 0; i < n; ++i)
          if (f.sub(l[i], r[i]) != 0) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("CYC2 basis") {
  auto b = fixtures::cyc2();
  CHECK(b->dim() == 4);
  CHECK(b->loewy_length() == 2);
  std::vector<std::string> labels;
  for (const auto& e : b->basis()) labels.push_back(b->path_label(e.path, e.source));
  CHECK(labels == std::vector<std::string>{"e1", "e2", "alpha", "beta"});
}

TEST_CASE("A2 and DUAL dimensions") {
  CHECK(fixtures::a2()->dim() == 3);
  auto d = fixtures::dual_numbers();
  CHECK(d->dim() == 2);
  CHECK(fixtures::truncated_poly(3)->dim() == 3);
  CHECK(fixtures::a3r()->dim() == 5);
  CHECK(fixtures::a3()->dim() == 6);
}

TEST_CASE("multiply follows the path convention") {
  auto b = fixtures::cyc2();
  const std::size_t n = b->dim();
  std::vector<Scalar> e1(n), alpha(n), beta(n);
  e1[b->idempotent(0)] = 1;
  alpha[b->arrow_element(0)] = 1;
  beta[b->arrow_element(1)] = 1;
  CHECK(b->multiply(e1, alpha) == alpha);
  CHECK(b->multiply(alpha, e1) == std::vector<Scalar>(n));
  CHECK(b->multiply(alpha, beta) == std::vector<Scalar>(n));
  auto d = fixtures::dual_numbers();
  std::vector<Scalar> x(2);
  x[d->arrow_element(0)] = 1;
  CHECK(d->multiply(x, x) == std::vector<Scalar>(2));
}

TEST_CASE("commutative relation is reduced to normal form") {
  // 1 -> 2 -> 4 and 1 -> 3 -> 4 with ab = cd
  Field q = Field::rational();
  Quiver qv{{"1", "2", "3", "4"}, {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}}};
  auto alg = build_algebra(q, qv, {parse_relation(q, qv, "a*b - c*d")});
  CHECK(alg->dim() == 4 + 4 + 1);
  std::vector<Scalar> a(alg->dim()), b(alg->dim()), c(alg->dim()), d(alg->dim());
  a[alg->arrow_element(0)] = 1;
  b[alg->arrow_element(1)] = 1;
  c[alg->arrow_element(2)] = 1;
  d[alg->arrow_element(3)] = 1;
  CHECK(alg->multiply(a, b) == alg->multiply(c, d));
  CHECK(associative(*alg));
}

TEST_CASE("malformed relations are rejected") {
  Field q = Field::rational();
  Quiver qv{{"1", "2"}, {{"alpha", 0, 1}, {"beta", 1, 0}}};
  CHECK_THROWS_AS(build_algebra(q, qv, {parse_relation(q, qv, "alpha")}), NotAdmissible);
  CHECK_THROWS_AS(build_algebra(q, qv, {parse_relation(q, qv, "alpha*alpha")}), NotAdmissible);
  CHECK_THROWS_AS(build_algebra(q, qv, {parse_relation(q, qv, "alpha*beta - alpha*beta*alpha*beta")}),
                  NotHomogeneous);
  CHECK_THROWS_AS(build_algebra(q, qv, {parse_relation(q, qv, "alpha*beta - beta*alpha")}), NotAdmissible);
  CHECK_THROWS_AS(parse_relation(q, qv, "alpha*gamma"), ParseError);
  CHECK_THROWS_AS(build_algebra(q, qv, {}, 10), NotFiniteDimensional);
}

TEST_CASE("opposite algebra") {
  auto a2 = fixtures::a2();
  auto op = a2->opposite();
  CHECK(op->arrows()[0].source == 1);
  CHECK(op->arrows()[0].target == 0);
  CHECK(op->dim() == 3);
  CHECK(op->opposite() == a2);
  auto b = fixtures::cyc2();
  auto bop = b->opposite();
  for (std::size_t x = 0; x < b->dim(); ++x)
    for (std::size_t y = 0; y < b->dim(); ++y) CHECK(bop->product(x, y) == b->product(y, x));
  // the swap of alpha and beta identifies CYC2 with its opposite
  CHECK(bop->dim() == b->dim());
  CHECK(bop->arrows()[0].source == b->arrows()[1].source);
  CHECK(bop->arrows()[0].target == b->arrows()[1].target);
  for (const auto& n : fixture_algebras()) {
    CHECK(n.alg->opposite()->opposite() == n.alg);
    CHECK(n.alg->opposite()->dim() == n.alg->dim());
  }
}

TEST_CASE("direct products") {
  auto t2 = direct_product(fixtures::a2(), fixtures::a2());
  CHECK(t2->dim() == 6);
  CHECK(t2->num_vertices() == 4);
  CHECK(t2->components().size() == 2);
  auto c = direct_product(fixtures::dual_numbers(), fixtures::dual_numbers());
  CHECK(c->dim() == 4);
  CHECK(c->relations().size() == 2);
  auto s = direct_product(fixtures::cyc2(), fixtures::semisimple(1));
  CHECK(s->dim() == 5);
  CHECK(s->components().size() == 2);
  CHECK(is_injective_indecomposable(simple(s, 2)));
  CHECK_THROWS_AS(direct_product(fixtures::a2(), fixtures::a2(Field::prime(3))), FieldMismatch);
}

TEST_CASE("standard modules") {
  auto a2 = fixtures::a2();
  CHECK(dims(projective(a2, 0)) == std::vector<std::size_t>{1, 1});
  CHECK(dims(projective(a2, 1)) == std::vector<std::size_t>{0, 1});
  CHECK(dims(injective(a2, 0)) == std::vector<std::size_t>{1, 0});
  CHECK(dims(injective(a2, 1)) == std::vector<std::size_t>{1, 1});
  auto b = fixtures::cyc2();
  Module p1 = projective(b, 0);
  CHECK(dims(p1) == std::vector<std::size_t>{1, 1});
  CHECK(structure(p1).socle_multiplicities == std::vector<std::size_t>{0, 1});
  for (std::size_t v = 0; v < 2; ++v) CHECK(injective_vertex(projective(b, v)).has_value());
  auto d = fixtures::dual_numbers();
  CHECK(dims(projective(d, 0)) == std::vector<std::size_t>{2});
  CHECK(is_isomorphic(projective(d, 0), injective(d, 0)).status == IsoStatus::isomorphic);
  CHECK(dims(simple(d, 0)) == std::vector<std::size_t>{1});
}

TEST_CASE("property: dimension counts, relations, associativity") {
  for (const auto& n : fixture_algebras()) {
    CAPTURE(n.name);
    auto s = standard_modules(n.alg);
    std::size_t sp = 0, si = 0;
    for (const auto& p : s.projectives) sp += p.total_dim();
    for (const auto& i : s.injectives) si += i.total_dim();
    CHECK(sp == n.alg->dim());
    CHECK(si == n.alg->dim());
    // the checked constructor re-verifies every relation
    for (const auto& group : {s.projectives, s.injectives, s.simples})
      for (const auto& m : group) CHECK_NOTHROW(Module(m.algebra(), m.dims(), m.maps()));
    CHECK_NOTHROW(Module(n.alg, s.regular.dims(), s.regular.maps()));
    if (n.alg->dim() <= 30) CHECK(associative(*n.alg));
  }
}
