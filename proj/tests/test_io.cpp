#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "qpers/errors.hpp"
#include "qpers/io.hpp"

using namespace qpers;
using namespace qpers::testing;

namespace {

std::size_t parse_position(const std::string& text, bool filtration) {
  try {
    if (filtration)
      parse_filtration(text);
    else
      parse_representation(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("representation JSON") {
  const Representation r = parse_representation(R"({"field": 5, "vertices": {"s": 2, "t": 1},
    "edges": [{"id": "e", "src": "s", "dst": "t", "matrix": [[7, -1]]}]})");
  CHECK(r.field().characteristic() == 5);
  CHECK(r.dim("s") == 2);
  CHECK(same(r.map("e"), from_rows(r.field(), {{2, 4}})));
  CHECK_FALSE(r.is_commutative());

  const Representation empty_cols = parse_representation(
      R"({"field": 2, "vertices": {"a": 0, "b": 1}, "edges": [{"id": "e", "src": "a", "dst": "b", "matrix": [[]]}]})");
  CHECK(empty_cols.map("e").rows() == 1);
  CHECK(empty_cols.map("e").cols() == 0);
  const Representation empty_rows = parse_representation(
      R"({"field": 2, "vertices": {"a": 1, "b": 0}, "edges": [{"id": "e", "src": "a", "dst": "b", "matrix": []}]})");
  CHECK(empty_rows.map("e").rows() == 0);
  CHECK(empty_rows.map("e").cols() == 1);

  CHECK(parse_position("{\"field\": 2,", false) > 0);
  CHECK_THROWS_AS(parse_representation(R"({"field": 4, "vertices": {}, "edges": []})"), Error);
  CHECK_THROWS_AS(parse_representation(R"({"field": 2, "vertices": {"a": 1}, "edges": [{"id": "e", "src": "a", "dst": "a", "matrix": [[1, 1]]}]})"),
                  ShapeError);
  CHECK_THROWS_AS(parse_representation(R"({"field": 2, "vertices": {"a": 1}})"), ShapeError);
  CHECK_THROWS_AS(parse_representation(R"({"field": 2, "vertices": {"a": -1}, "edges": []})"), ShapeError);
  CHECK_THROWS_AS(parse_representation(R"({"field": 2, "vertices": {"a": 1}, "edges": [{"id": "e", "src": "a", "dst": "z", "matrix": [[1]]}]})"),
                  ShapeError);
}

TEST_CASE("representation JSON round-trips") {
  Rng rng(97);
  for (int t = 0; t < 30; ++t) {
    const PrimeField f(t % 3 ? 3 : 7);
    const Representation r = random_representation(f, random_dag(2 + t % 5, rng), rng);
    const Representation back = parse_representation(representation_to_json(r));
    CHECK(back.field().characteristic() == r.field().characteristic());
    CHECK(back.quiver().vertices() == r.quiver().vertices());
    CHECK(back.dims() == r.dims());
    for (const auto& [id, m] : r.mats()) CHECK(same(back.map(id), m));
    CHECK(representation_to_json(back) == representation_to_json(r));
  }
}

TEST_CASE("filtration text") {
  const GraphFiltration chi = parse_filtration(
      "field 3\n"
      "# comment\n"
      "complex X0:\n"
      "a b   # trailing comment\n"
      "complex X1:\n"
      "a b c\n"
      "edge X0 X1\n"
      "edge X0 X1\n");
  CHECK(chi.field.characteristic() == 3);
  CHECK(chi.quiver.vertices() == std::vector<std::string>{"X0", "X1"});
  CHECK(chi.quiver.has_edge("X0->X1"));
  CHECK(chi.quiver.has_edge("X0->X1#2"));
  CHECK(chi.complexes.at("X0").size() == 3);
  CHECK(chi.complexes.at("X1").dimension() == 2);

  CHECK(parse_position("field 2\na b\n", true) == 2);
  CHECK(parse_position("complex X:\na\n", true) == 3);
  CHECK(parse_position("field 2\nfield 2\n", true) == 2);
  CHECK(parse_position("field 6\n", true) == 1);
  CHECK(parse_position("field 2\ncomplex X\n", true) == 2);
  CHECK(parse_position("field 2\ncomplex X:\ncomplex X:\n", true) == 3);
  CHECK(parse_position("field 2\ncomplex X:\nedge X\n", true) == 3);
}

TEST_CASE("assignment files") {
  const PrimeField f(2);
  const Representation r(f, Quiver({"a", "b", "c"}, {{"ac", "a", "c"}, {"bc", "b", "c"}}),
                         {{"a", 2}, {"b", 1}, {"c", 1}},
                         {{"ac", from_rows(f, {{1, 0}})}, {"bc", from_rows(f, {{1}})}});
  const auto in = parse_assignment(R"({"a": [[1, 1]], "b": "zero"})", r);
  REQUIRE(in.size() == 2);
  CHECK(std::get<Subspace>(in.at("a")) == Subspace::span(f, from_rows(f, {{1, 1}})));
  CHECK(std::get<Subspace>(in.at("b")).is_zero());
  const auto ex = parse_assignment(R"j({"a": "full", "b": "alpha(b,full)"})j", r);
  CHECK(std::get<Subspace>(ex.at("a")).is_full());
  CHECK(std::get<PreradicalExpr>(ex.at("b")).to_string() == "alpha(b,full)");
  CHECK_THROWS_AS(parse_assignment(R"({"a": [[1]]})", r), DimensionMismatch);
  CHECK_THROWS_AS(parse_assignment(R"({"q": "full"})", r), UnknownVertex);
  CHECK_THROWS_AS(parse_assignment(R"([1, 2])", r), Error);
  CHECK_THROWS_AS(parse_assignment(R"({"b": "alpha(b"})", r), ParseError);
}

TEST_CASE("digest") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("filtration module survives a JSON round trip") {
  Rng rng(101);
  for (int t = 0; t < 10; ++t) {
    const PrimeField f(t % 2 ? 2 : 3);
    const auto x = random_flag_complex(7, 0.5, rng);
    const auto g = random_grid_filtration(f, x, 1, rng);
    for (int k = 0; k <= 1; ++k) {
      const Representation m = filtration_to_gmodule(g, k);
      const Representation back = validated(parse_representation(representation_to_json(m)));
      CHECK(back.dims() == m.dims());
      CHECK(persistence(back) == persistence(m));
    }
  }
}
