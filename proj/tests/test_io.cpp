#include <doctest.h>

#include "helpers.hpp"
#include "rigdim/io.hpp"

using namespace testing;

namespace {

std::string fixture(const std::string& f) { return std::string(RIGDIM_FIXTURES) + "/" + f; }

}  // namespace

TEST_CASE("toml subset") {
  Json j = parse_toml(R"(# comment
a = 1
b = "x # not a comment"
c = [1, -2, "3/4"]
"quoted key" = true
d.e = 5
[t]
u = { v = [[]], w = "z" }
[[arr]]
k = 1
[[arr]]
k = 2
)");
  CHECK(j["a"] == 1);
  CHECK(j["b"] == "x # not a comment");
  CHECK(j["c"][2] == "3/4");
  CHECK(j["quoted key"] == true);
  CHECK(j["d"]["e"] == 5);
  CHECK(j["t"]["u"]["w"] == "z");
  CHECK(j["arr"].size() == 2);
  CHECK(j["arr"][1]["k"] == 2);
  CHECK_THROWS_AS(parse_toml("a = 1\na = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_toml("[t]\n[t]\n"), ParseError);
  CHECK_THROWS_AS(parse_toml("a = 1.5\n"), ParseError);
  CHECK_THROWS_AS(parse_toml("a = [1, 2\n"), ParseError);
}

TEST_CASE("algebra files") {
  AlgebraFile b = read_algebra_file(fixture("cyc2.alg"));
  CHECK(b.algebra->same_structure(*fixtures::cyc2()));
  CHECK_FALSE(b.cutoff);
  AlgebraFile n = read_algebra_file(fixture("nak3.alg"));
  CHECK(n.cutoff == std::optional<std::size_t>(30));
  CHECK(n.algebra->dim() == 6);
  CHECK(read_algebra_file(fixture("cyc2_f2.alg")).algebra->field() == Field::prime(2));
  CHECK(read_algebra_file(fixture("dual_x_dual.alg")).algebra->dim() == 4);
  CHECK_THROWS_AS(read_algebra_file(fixture("bad_relation.alg")), NotAdmissible);
  CHECK_THROWS_AS(read_algebra_file(fixture("bad_syntax.alg")), ParseError);
  CHECK_THROWS_AS(parse_algebra("field = \"Q\"\nextra = 1\n[quiver]\nvertices = [\"1\"]\narrows = []\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("field = \"F4\"\n[quiver]\nvertices = [\"1\"]\narrows = []\n"), ParseError);
  try {
    read_algebra_file(fixture("bad_relation.alg"));
  } catch (const NotAdmissible& e) {
    CHECK(std::string(e.what()).find("alpha") != std::string::npos);
  }
}

TEST_CASE("module files") {
  auto b = read_algebra_file(fixture("cyc2.alg")).algebra;
  ModuleFile m = read_module_file(fixture("b_plus_s1.mod"), b);
  CHECK(m.name == "B+S1");
  REQUIRE(m.summands.size() == 3);
  CHECK(m.summands[2].dims() == std::vector<std::size_t>{1, 0});
  CHECK(is_isomorphic(m.summands[0], projective(b, 0)).status == IsoStatus::isomorphic);
  ModuleFile p = read_module_file(fixture("p1_explicit.mod"), b);
  CHECK(is_isomorphic(p.summands[0], projective(b, 0)).status == IsoStatus::isomorphic);
  CHECK_THROWS_AS(read_module_file(fixture("not_a_module.mod"), b), InvalidRepresentation);
  CHECK_THROWS_AS(parse_module("dims = [1]\n", b), ParseError);
  CHECK_THROWS_AS(parse_module("dims = [1, 0]\n[maps]\ngamma = [[]]\n", b), ParseError);
  CHECK_THROWS_AS(parse_module("[[module]]\nstandard = \"Q1\"\n", b), ParseError);
}

TEST_CASE("round trip through module files") {
  for (const auto& n : fixture_algebras()) {
    CAPTURE(n.name);
    IndecList l = enumerate_indecomposables(n.alg);
    std::vector<Module> mods = l.modules;
    mods.push_back(random_module(n.alg, 7));
    ModuleFile back = parse_module(write_module_file(mods, l.complete), n.alg);
    CHECK(back.complete == std::optional<bool>(l.complete));
    REQUIRE(back.summands.size() == mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) {
      CHECK(back.summands[i].name() == mods[i].name());
      CHECK(back.summands[i].maps() == mods[i].maps());
      CHECK(is_isomorphic(back.summands[i], mods[i]).status == IsoStatus::isomorphic);
    }
  }
  // rationals survive
  auto d = fixtures::dual_numbers();
  Module m(d, {2}, {Matrix::from_columns(d->field(), 2, {{Scalar(0), Scalar(0)}, {Scalar(-3, 7), Scalar(0)}})});
  CHECK(parse_module(write_module_file({m}, std::nullopt), d).summands[0].maps() == m.maps());
}

TEST_CASE("json shapes") {
  CHECK(to_json(ValueWithStatus::exact(2)).dump() == R"({"value":2,"status":"exact"})");
  CHECK(to_json(ValueWithStatus::infinite()).dump() == R"({"value":null,"status":"infinite"})");
  CHECK(to_json(ValueWithStatus::at_least(30)).dump() == R"({"value":30,"status":"at_least"})");
  Json r = to_json(rigidity_dimension(fixtures::cyc2()));
  CHECK(r["cf"]["value"] == 3);
  CHECK(r["completeness"] == "exact");
  CHECK(r["witness"] == Json::array({"P1", "P2", "S1"}));
  Json h = to_json(homological_dims(fixtures::a2()));
  CHECK(h["gldim"]["value"] == 1);
  CHECK(h["selfinjective"] == false);
}
