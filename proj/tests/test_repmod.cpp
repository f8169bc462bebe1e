#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

bool iso(const Module& a, const Module& b) { return is_isomorphic(a, b).status == IsoStatus::isomorphic; }

std::vector<std::size_t> map_ranks(const Module& m) {
  std::vector<std::size_t> r;
  for (const auto& a : m.maps()) r.push_back(rank(a));
  return r;
}

}  // namespace

TEST_CASE("hom dimensions between projectives and simples") {
  auto a2 = fixtures::a2();
  Module p1 = projective(a2, 0), p2 = projective(a2, 1), s1 = simple(a2, 0);
  CHECK(hom_dim(p2, p1) == 1);
  CHECK(hom_dim(p1, p2) == 0);
  CHECK(hom_dim(p1, s1) == 1);
  CHECK(hom_dim(s1, p1) == 0);
  auto b = fixtures::cyc2();
  CHECK(hom_dim(projective(b, 0), projective(b, 1)) == 1);
  CHECK(hom_dim(projective(b, 0), projective(b, 0)) == 1);
  CHECK_THROWS_AS(hom_dim(p1, projective(b, 0)), AlgebraMismatch);
}

TEST_CASE("invalid representations are rejected") {
  auto b = fixtures::cyc2();
  const Field q = b->field();
  // alpha then beta nonzero violates alpha*beta = 0
  CHECK_THROWS_AS(Module(b, {1, 1}, {Matrix::from_rows(q, {{1}}), Matrix::from_rows(q, {{1}})}),
                  InvalidRepresentation);
  CHECK_THROWS_AS(Module(b, {1, 1}, {Matrix(q, 2, 1), Matrix(q, 1, 1)}), InvalidRepresentation);
  CHECK_NOTHROW(Module(b, {1, 1}, {Matrix::from_rows(q, {{1}}), Matrix(q, 1, 1)}));
}

TEST_CASE("radical, socle and top") {
  auto b = fixtures::cyc2();
  Structure s = structure(projective(b, 0));
  CHECK(s.top_multiplicities == std::vector<std::size_t>{1, 0});
  CHECK(s.socle_multiplicities == std::vector<std::size_t>{0, 1});
  CHECK(iso(s.radical.sub, simple(b, 1)));
  auto x3 = fixtures::truncated_poly(3);
  Structure r = structure(regular(x3));
  CHECK(r.radical.sub.total_dim() == 2);
  CHECK(r.socle.sub.total_dim() == 1);
}

TEST_CASE("projective covers and injective envelopes") {
  auto a2 = fixtures::a2();
  ProjectiveCover c = projective_cover(simple(a2, 0));
  CHECK(c.cover.vertices == std::vector<std::size_t>{0});
  CHECK(c.epi.is_surjective());
  CHECK(iso(syzygy(simple(a2, 0)).sub, projective(a2, 1)));
  InjectiveEnvelope e = injective_envelope(simple(a2, 1));
  CHECK(e.envelope.vertices == std::vector<std::size_t>{1});
  CHECK(e.mono.is_injective());
  CHECK(iso(cosyzygy(simple(a2, 1)).quotient, simple(a2, 0)));
  CHECK(projective_cover(Module::zero(a2)).cover.vertices.empty());
}

TEST_CASE("syzygies over CYC2 and the dual numbers") {
  auto b = fixtures::cyc2();
  auto om = syzygies(simple(b, 0), 2);
  REQUIRE(om.size() == 2);
  CHECK(iso(om[0], simple(b, 1)));
  CHECK(iso(om[1], simple(b, 0)));
  auto d = fixtures::dual_numbers();
  CHECK(iso(syzygy(simple(d, 0)).sub, simple(d, 0)));
  CHECK(syzygy(projective(d, 0)).sub.is_zero());
  auto co = syzygies(simple(b, 0), 2, Direction::cosyzygy);
  CHECK(iso(co[0], simple(b, 1)));
}

TEST_CASE("isomorphism certificates") {
  auto b = fixtures::cyc2();
  IsoResult r = is_isomorphic(projective(b, 0), injective(b, 1));
  CHECK(r.status == IsoStatus::isomorphic);
  REQUIRE(r.certificate);
  CHECK(r.certificate->is_isomorphism());
  CHECK(r.certificate->commutes());
  CHECK(is_isomorphic(projective(b, 0), projective(b, 1)).status == IsoStatus::not_isomorphic);
  CHECK(projective_vertex(projective(b, 1)) == std::optional<std::size_t>(1));
  CHECK(injective_vertex(projective(b, 1)) == std::optional<std::size_t>(0));
  CHECK_FALSE(projective_vertex(simple(b, 0)));
  auto a2 = fixtures::a2();
  CHECK(is_isomorphic(projective(a2, 1), simple(a2, 1)).status == IsoStatus::isomorphic);
  CHECK(is_isomorphic(projective(a2, 0), injective(a2, 1)).status == IsoStatus::isomorphic);
}

TEST_CASE("direct sums and hom bases commute") {
  auto b = fixtures::cyc2();
  DirectSum ds = direct_sum({projective(b, 0), simple(b, 0), projective(b, 1)});
  CHECK(ds.sum.dims() == std::vector<std::size_t>{3, 2});
  CHECK(maps_commute(ds.inclusions));
  CHECK(maps_commute(ds.projections));
  HomSpace h = hom_basis(ds.sum, ds.sum);
  CHECK(h.dim() == hom_dim(ds.sum, ds.sum));
  CHECK(maps_commute(h.basis));
  CHECK(rank(hom_matrix(h, ds.sum, ds.sum)) == h.dim());
}

TEST_CASE("dual of the regular module") {
  auto a2 = fixtures::a2();
  Module d = dual(regular(a2));
  CHECK(d.algebra() == a2->opposite());
  CHECK(dual(d).algebra() == a2);
  CHECK(iso(dual(dual(regular(a2))), regular(a2)));
  CHECK(iso(dual(projective(a2->opposite(), 0)), injective(a2, 0)));
}

TEST_CASE("property: random modules over every fixture") {
  for (const auto& n : fixture_algebras()) {
    CAPTURE(n.name);
    const auto& alg = n.alg;
    auto s = standard_modules(alg);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Module m = random_module(alg, seed);
      CAPTURE(seed);
      CHECK_NOTHROW(Module(alg, m.dims(), m.maps()));
      for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
        CHECK(hom_dim(s.projectives[v], m) == m.dim(v));
        CHECK(hom_dim(m, s.injectives[v]) == m.dim(v));
      }
      Module dd = dual(dual(m));
      CHECK(dd.dims() == m.dims());
      CHECK(map_ranks(dd) == map_ranks(m));
      if (seed % 5 != 0) continue;
      ProjectiveCover c = projective_cover(m);
      CHECK(c.epi.commutes());
      CHECK(c.epi.is_surjective());
      CHECK(structure(c.cover.module).top_multiplicities == structure(m).top_multiplicities);
      InjectiveEnvelope e = injective_envelope(m);
      CHECK(e.mono.commutes());
      CHECK(e.mono.is_injective());
      CHECK(structure(e.envelope.module).socle_multiplicities == structure(m).socle_multiplicities);
      Inclusion k = syzygy(m);
      CHECK(k.map.commutes());
      CHECK(k.sub.total_dim() + m.total_dim() == c.cover.module.total_dim());
      CHECK(maps_commute(hom_basis(m, m).basis));
    }
  }
}
