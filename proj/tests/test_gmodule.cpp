#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "qpers/errors.hpp"
#include "qpers/gmodule.hpp"

using namespace qpers;
using namespace qpers::testing;

namespace {

struct E {
  std::string id, src, dst;
  Matrix m;
};

Representation rep(const PrimeField& f, std::vector<std::pair<std::string, Eigen::Index>> vs, std::vector<E> es) {
  std::vector<std::string> ids;
  std::map<std::string, Eigen::Index> dims;
  for (auto& [v, d] : vs) {
    ids.push_back(v);
    dims[v] = d;
  }
  std::vector<Edge> edges;
  std::map<std::string, Matrix> mats;
  for (auto& e : es) {
    edges.push_back({e.id, e.src, e.dst});
    mats[e.id] = e.m;
  }
  return Representation(f, Quiver(ids, edges), dims, mats);
}

Representation diamond(const PrimeField& f, Eigen::Index n, const Matrix& sa, const Matrix& sb, const Matrix& at,
                       const Matrix& bt, Eigen::Index da, Eigen::Index db, Eigen::Index dt) {
  return rep(f, {{"s", n}, {"a", da}, {"b", db}, {"t", dt}},
             {{"sa", "s", "a", sa}, {"sb", "s", "b", sb}, {"at", "a", "t", at}, {"bt", "b", "t", bt}});
}

Representation dual(const Representation& r) {
  std::vector<Edge> edges;
  std::map<std::string, Matrix> mats;
  for (const auto& e : r.quiver().edges()) {
    edges.push_back({e.id, e.dst, e.src});
    mats[e.id] = r.map(e.id).transpose();
  }
  return Representation(r.field(), Quiver(r.quiver().vertices(), edges), r.dims(), mats);
}

// all x in F^D with f_e x_u = x_v on every edge
std::size_t limit_size_by_enumeration(const Representation& r) {
  const BlockLayout layout = block_layout(r);
  std::size_t n = 0;
  for (const auto& x : all_vectors(r.field(), layout.total_dim)) {
    bool ok = true;
    for (const auto& e : r.quiver().edges()) {
      const Vector xu = x.segment(layout.offset.at(e.src), r.dim(e.src));
      const Vector xv = x.segment(layout.offset.at(e.dst), r.dim(e.dst));
      if (!(multiply(r.field(), r.map(e.id), xu) == xv)) ok = false;
    }
    n += ok;
  }
  return n;
}

}  // namespace

TEST_CASE("construction checks shapes") {
  const PrimeField f(2);
  CHECK_THROWS_AS(rep(f, {{"a", 2}, {"b", 1}}, {{"e", "a", "b", from_rows(f, {{1, 0, 1}})}}), ShapeError);
  CHECK_THROWS_AS(Representation(f, Quiver({"a"}, {}), {}, {}), ShapeError);
  CHECK_THROWS_AS(Representation(f, Quiver({"a", "b"}, {{"e", "a", "b"}}), {{"a", 1}, {"b", 1}}, {}), ShapeError);
  const auto r = rep(PrimeField(5), {{"a", 1}, {"b", 1}}, {{"e", "a", "b", from_rows(PrimeField(5), {{7}})}});
  CHECK(r.map("e")(0, 0) == 2);
  CHECK_FALSE(r.is_commutative());
  CHECK(validated(r).is_commutative());
}

TEST_CASE("validate_representation") {
  const PrimeField f(3);
  const Matrix i2 = identity(2);
  auto ok = diamond(f, 2, i2, i2, i2, i2, 2, 2, 2);
  CHECK(validate_representation(ok).ok());

  auto bad = diamond(f, 2, i2, i2, i2, zeros(2, 2), 2, 2, 2);
  const auto report = validate_representation(bad);
  REQUIRE(report.violation);
  const auto& w = *report.violation;
  CHECK(w.first.src == "s");
  CHECK(w.first.dst == "t");
  CHECK(w.first.edges == std::vector<std::string>{"sa", "at"});
  CHECK(w.second.edges == std::vector<std::string>{"sb", "bt"});
  try {
    validated(bad);
    FAIL("expected CommutativityError");
  } catch (const CommutativityError& e) {
    CHECK(e.src() == "s");
    CHECK(e.dst() == "t");
    CHECK(e.first_path() == std::vector<std::string>{"sa", "at"});
  }

  Rng rng(2);
  const auto chain = rep(f, {{"a", 2}, {"b", 3}, {"c", 1}},
                         {{"ab", "a", "b", random_matrix(f, 3, 2, rng)}, {"bc", "b", "c", random_matrix(f, 1, 3, rng)}});
  CHECK(validate_representation(chain).ok());

  const auto parallel =
      rep(f, {{"a", 1}, {"b", 1}}, {{"e1", "a", "b", from_rows(f, {{1}})}, {"e2", "a", "b", from_rows(f, {{2}})}});
  CHECK_THROWS_AS(validated(parallel), CommutativityError);
  const auto cyclic =
      rep(f, {{"a", 1}, {"b", 1}}, {{"ab", "a", "b", from_rows(f, {{1}})}, {"ba", "b", "a", from_rows(f, {{1}})}});
  CHECK_FALSE(validate_representation(cyclic).is_dag);
  CHECK_THROWS_AS(validated(cyclic), CycleError);
  CHECK_THROWS_AS(limit(bad), CommutativityError);
  CHECK_THROWS_AS(colimit(bad), CommutativityError);
}

TEST_CASE("path composites") {
  const PrimeField f(2);
  const auto r = rep(f, {{"a", 3}, {"b", 1}, {"c", 2}},
                     {{"ab", "a", "b", from_rows(f, {{1, 1, 0}})}, {"bc", "b", "c", from_rows(f, {{1}, {1}})}});
  CHECK(same(path_composite(r, Path{"a", "a", {}}), identity(3)));
  const Matrix c = path_composite(r, Path{"a", "c", {"ab", "bc"}});
  for (const auto& x : all_vectors(f, 3)) {
    const Scalar y = (x(0) + x(1)) % 2;
    CHECK(multiply(f, c, x) == Vector::Constant(2, y));
  }
  CHECK_THROWS_AS(path_composite(r, Path{"a", "c", {"bc"}}), ShapeError);

  const auto two = rep(f, {{"x", 2}, {"y", 1}, {"z", 2}},
                       {{"xy", "x", "y", from_rows(f, {{1, 1}})}, {"yz", "y", "z", from_rows(f, {{1}, {1}})}});
  const Matrix m = path_composite(two, Path{"x", "z", {"xy", "yz"}});
  for (const auto& x : all_vectors(f, 2)) {
    const Scalar y = (x(0) + x(1)) % 2;
    CHECK(multiply(f, m, x) == Vector::Constant(2, y));
  }
  CHECK(same(m, from_rows(f, {{1, 1}, {1, 1}})));
  const auto chain2 = rep(f, {{"a", 2}, {"b", 2}, {"c", 2}},
                          {{"ab", "a", "b", identity(2)}, {"bc", "b", "c", identity(2)}});
  CHECK(same(path_composite(chain2, Path{"a", "c", {"ab", "bc"}}), identity(2)));
  CHECK(same(*dp_composite(chain2, "a", "c"), identity(2)));
  CHECK_FALSE(dp_composite(chain2, "c", "a"));
}

TEST_CASE("limit examples") {
  const PrimeField f(2);
  const auto single = validated(rep(f, {{"v", 3}}, {}));
  const auto ls = limit(single);
  CHECK(ls.dim() == 3);
  CHECK(is_invertible(f, ls.legs.at("v")));

  const auto zero_chain = validated(rep(f, {{"A", 1}, {"B", 1}}, {{"AB", "A", "B", zeros(1, 1)}}));
  const auto lz = limit(zero_chain);
  CHECK(lz.dim() == 1);
  CHECK(is_invertible(f, lz.legs.at("A")));
  CHECK(lz.legs.at("B").isZero());

  const Matrix i2 = identity(2);
  const auto d = validated(diamond(f, 2, i2, i2, i2, i2, 2, 2, 2));
  const auto ld = limit(d);
  CHECK(ld.dim() == 2);
  CHECK(limit_size_by_enumeration(d) == 4);
}

TEST_CASE("colimit examples") {
  const PrimeField f(2);
  const auto single = validated(rep(f, {{"v", 3}}, {}));
  CHECK(colimit(single).dim() == 3);

  const auto id_chain = validated(rep(f, {{"A", 1}, {"B", 1}}, {{"AB", "A", "B", identity(1)}}));
  const auto ci = colimit(id_chain);
  CHECK(ci.dim() == 1);
  CHECK(is_invertible(f, ci.legs.at("A")));
  CHECK(is_invertible(f, ci.legs.at("B")));

  const auto zero_chain = validated(rep(f, {{"A", 1}, {"B", 1}}, {{"AB", "A", "B", zeros(1, 1)}}));
  const auto cz = colimit(zero_chain);
  // relation iota_B(0) - iota_A(x) kills the A block: span{(1,0)}, map [0,1]
  CHECK(cz.relations == Subspace::span(f, from_rows(f, {{1, 0}})));
  CHECK(same(cz.q.map, from_rows(f, {{0, 1}})));
  CHECK(cz.dim() == 1);
  CHECK(cz.legs.at("A").isZero());
}

TEST_CASE("induced phi and persistence examples") {
  const PrimeField f(2);
  const auto single = validated(rep(f, {{"v", 2}}, {}));
  CHECK(is_invertible(f, induced_phi(single)));

  const auto zero_chain = validated(rep(f, {{"A", 1}, {"B", 1}}, {{"AB", "A", "B", zeros(1, 1)}}));
  CHECK(same(induced_phi(zero_chain), zeros(1, 1)));

  const Matrix i1 = identity(1);
  const auto d1 = validated(diamond(f, 1, i1, i1, i1, i1, 1, 1, 1));
  CHECK(rank(f, induced_phi(d1)) == 1);

  for (Eigen::Index k = 1; k <= 3; ++k) {
    const auto ids = validated(
        rep(f, {{"a", k}, {"b", k}, {"c", k}}, {{"ab", "a", "b", identity(k)}, {"bc", "b", "c", identity(k)}}));
    CHECK(persistence(ids).dim() == k);
  }
  const auto one_zero = validated(rep(f, {{"a", 2}, {"b", 2}, {"c", 2}},
                                      {{"ab", "a", "b", identity(2)}, {"bc", "b", "c", zeros(2, 2)}}));
  CHECK(persistence(one_zero).dim() == 0);

  // both composites are [[1,1]]·[[1],[1]] = 1+1 = 0 over GF(2)
  const Matrix up = from_rows(f, {{1}, {1}}), down = from_rows(f, {{1, 1}});
  const auto z = validated(diamond(f, 1, up, up, down, down, 2, 2, 1));
  CHECK(same(*dp_composite(z, "s", "t"), zeros(1, 1)));
  CHECK(persistence(z).dim() == 0);

  const auto split = validated(rep(f, {{"a", 1}, {"b", 1}, {"c", 1}}, {{"ab", "a", "b", i1}}));
  CHECK_THROWS_AS(induced_phi(split), DisconnectedError);
  CHECK_THROWS_AS(persistence(split), DisconnectedError);
}

TEST_CASE("limits and colimits on random commutative representations") {
  Rng rng(23);
  for (Scalar p : {2, 3, 5}) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const Quiver q = random_connected_dag(2 + t % 5, rng);
      const Representation r = validated(random_commutative(f, q, rng, 3));
      CHECK(commutative_by_enumeration(r));
      const LimitData lim = limit(r);
      const ColimitData colim = colimit(r);
      for (const auto& e : q.edges()) {
        CHECK(same(multiply(f, r.map(e.id), lim.legs.at(e.src)), lim.legs.at(e.dst)));
        CHECK(same(multiply(f, colim.legs.at(e.dst), r.map(e.id)), colim.legs.at(e.src)));
      }
      // dual check: colim(M)* = lim(M*)
      CHECK(colim.dim() == limit(validated(dual(r))).dim());
      if (p == 2 && block_layout(r).total_dim <= 12)
        CHECK(limit_size_by_enumeration(r) == (std::size_t{1} << lim.dim()));
      const Subspace pers = persistence(r);
      CHECK(pers.dim() <= std::min(lim.dim(), colim.dim()));
      const Matrix phi = induced_phi(r, lim, colim);
      for (const auto& v : q.vertices()) CHECK(same(multiply(f, colim.legs.at(v), lim.legs.at(v)), phi));
    }
  }
}

TEST_CASE("single source and sink: limit at the source, colimit at the sink") {
  Rng rng(29);
  for (Scalar p : {2, 5}) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const Quiver q = random_single_source_sink_dag(3 + t % 4, rng);
      const Representation r = validated(random_commutative(f, q, rng));
      const auto ends = sources_sinks(q);
      const LimitData lim = limit(r);
      const ColimitData colim = colimit(r);
      CHECK(lim.dim() == r.dim(ends.sources.front()));
      CHECK(colim.dim() == r.dim(ends.sinks.front()));
      CHECK(is_invertible(f, lim.legs.at(ends.sources.front())));
      CHECK(is_invertible(f, colim.legs.at(ends.sinks.front())));
    }
  }
}

TEST_CASE("incremental validation agrees with path enumeration") {
  Rng rng(31);
  int commutative = 0, broken = 0;
  for (int t = 0; t < 150; ++t) {
    const PrimeField f(t % 2 ? 2 : 3);
    const Quiver q = random_dag(2 + t % 6, rng, 0.45, 0.2);
    Representation r = t % 3 == 0   ? random_representation(f, q, rng)
                       : t % 3 == 1 ? random_commutative(f, q, rng, 3)
                                    : perturbed(random_commutative(f, q, rng, 3), rng);
    const auto report = validate_representation(r);
    const bool oracle = commutative_by_enumeration(r);
    CHECK(report.ok() == oracle);
    (oracle ? commutative : broken)++;
    if (report.violation) {
      const auto& w = *report.violation;
      CHECK(w.first.src == w.second.src);
      CHECK(w.first.dst == w.second.dst);
      CHECK_FALSE(same(path_composite(r, w.first), path_composite(r, w.second)));
    }
  }
  CHECK(commutative > 20);
  CHECK(broken > 20);
}
