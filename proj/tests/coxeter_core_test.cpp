#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "coxgrowth/coxeter_matrix.hpp"
#include "coxgrowth/gram.hpp"
#include "doctest.h"

using namespace coxgrowth;

namespace {

CoxeterMatrix random_matrix(std::mt19937& rng, int max_rank = 6) {
  std::uniform_int_distribution<int> rank_dist(1, max_rank);
  std::uniform_int_distribution<int> label_dist(2, 8);
  std::uniform_int_distribution<int> inf_dist(0, 9);
  int n = rank_dist(rng);
  std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int label = inf_dist(rng) == 0 ? CoxeterMatrix::kInfinity : label_dist(rng);
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = label;
      m[static_cast<size_t>(j)][static_cast<size_t>(i)] = label;
    }
  return CoxeterMatrix(m);
}

CoxeterMatrix permuted(const CoxeterMatrix& m, const std::vector<int>& perm) {
  int n = m.rank();
  std::vector<std::vector<int>> out(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          m.label(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
  return CoxeterMatrix(out);
}

}  // namespace

TEST_CASE("parsing both formats") {
  CoxeterMatrix json = CoxeterMatrix::parse(R"([[1,3,2],[3,1,7],[2,7,1]])");
  CHECK(json.rank() == 3);
  CHECK(json.label(1, 2) == 7);
  CHECK(json == CoxeterMatrix::triangle(3, 7, 2));

  CoxeterMatrix wrapped = CoxeterMatrix::parse(R"({"rank": 3, "matrix": [[1,3,2],[3,1,7],[2,7,1]]})");
  CHECK(wrapped == json);

  CoxeterMatrix compact = CoxeterMatrix::parse("1 3 2\n3 1 7\n2 7 1\n");
  CHECK(compact == json);

  CoxeterMatrix one = CoxeterMatrix::parse("[[1]]");
  CHECK(one.rank() == 1);

  // 0 and "inf" both mean the infinite label
  CoxeterMatrix inf_json = CoxeterMatrix::parse(R"([[1,"inf"],["inf",1]])");
  CoxeterMatrix inf_zero = CoxeterMatrix::parse("1 0\n0 1\n");
  CHECK(inf_json == inf_zero);
  CHECK(inf_json.label(0, 1) == CoxeterMatrix::kInfinity);
}

TEST_CASE("parse and serialization round trips") {
  CoxeterMatrix m = CoxeterMatrix::parse("1 3 2\n3 1 0\n2 0 1\n");
  CHECK(CoxeterMatrix::parse(m.to_json()) == m);
  CHECK(CoxeterMatrix::parse(m.to_compact()) == m);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(CoxeterMatrix::parse("[[1,3],[4,1]]"), std::invalid_argument);    // asymmetric
  CHECK_THROWS_AS(CoxeterMatrix::parse("[[2,3],[3,1]]"), std::invalid_argument);    // bad diagonal
  CHECK_THROWS_AS(CoxeterMatrix::parse("[[1,1],[1,1]]"), std::invalid_argument);    // label 1
  CHECK_THROWS_AS(CoxeterMatrix::parse("1 3\n3 1 2\n"), std::invalid_argument);     // ragged
  CHECK_THROWS_AS(CoxeterMatrix::parse("  "), std::invalid_argument);               // empty
  CHECK_THROWS_AS(CoxeterMatrix::parse("[[1,-3],[-3,1]]"), std::invalid_argument);  // negative
}

TEST_CASE("components") {
  CHECK(CoxeterMatrix::triangle(3, 7, 2).components().size() == 1);

  CoxeterMatrix two_dots = CoxeterMatrix::parse("[[1,2],[2,1]]");
  auto comps = two_dots.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1});

  // the rank-4 system with labels 4,2,2 / 1,3,2 / ... is connected
  CoxeterMatrix m = CoxeterMatrix::parse("[[1,4,2,2],[4,1,3,2],[2,3,1,4],[2,2,4,1]]");
  CHECK(m.components().size() == 1);
}

TEST_CASE("induced submatrices") {
  CoxeterMatrix m = CoxeterMatrix::triangle(3, 7, 2);
  CoxeterMatrix sub = m.induced({1, 2});
  CHECK(sub == CoxeterMatrix::dihedral(7));

  std::vector<int> all{0, 1, 2};
  CHECK(m.induced(all) == m);

  CoxeterMatrix empty = m.induced({});
  CHECK(empty.rank() == 0);

  CHECK_THROWS_AS(m.induced({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(m.induced({0, 0}), std::invalid_argument);
}

TEST_CASE("isomorphism examples") {
  CoxeterMatrix t237 = CoxeterMatrix::triangle(3, 7, 2);
  CoxeterMatrix relabeled = permuted(t237, {2, 0, 1});
  auto w = isomorphism(t237, relabeled);
  REQUIRE(w.has_value());
  // the witness really is label preserving
  for (int s = 0; s < 3; ++s)
    for (int r = 0; r < 3; ++r)
      CHECK(t237.label(s, r) == relabeled.label((*w)[static_cast<size_t>(s)], (*w)[static_cast<size_t>(r)]));

  CHECK_FALSE(are_isomorphic(t237, CoxeterMatrix::triangle(4, 5, 2)));
  // path(3,3) vs a triangle of 3s: different edge counts
  CHECK_FALSE(are_isomorphic(CoxeterMatrix::parse("[[1,3,2],[3,1,3],[2,3,1]]"),
                             CoxeterMatrix::parse("[[1,3,3],[3,1,3],[3,3,1]]")));
  CHECK_FALSE(are_isomorphic(t237, CoxeterMatrix::dihedral(7)));
}

TEST_CASE("property: induced submatrices stay valid, components partition") {
  std::mt19937 rng(20240816);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    CoxeterMatrix m = random_matrix(rng);
    std::vector<int> subset;
    for (int v = 0; v < m.rank(); ++v)
      if (coin(rng)) subset.push_back(v);
    CoxeterMatrix sub = m.induced(subset);  // constructor re-validates
    CHECK(sub.rank() == static_cast<int>(subset.size()));

    auto comps = m.components();
    std::vector<int> all;
    for (const auto& c : comps) {
      CHECK(m.induced(c).is_irreducible());
      all.insert(all.end(), c.begin(), c.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<int> expect;
    for (int v = 0; v < m.rank(); ++v) expect.push_back(v);
    CHECK(all == expect);
  }
}

TEST_CASE("property: isomorphism under permutation, reflexive, symmetric") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 120; ++trial) {
    CoxeterMatrix m = random_matrix(rng);
    CHECK(are_isomorphic(m, m));
    std::vector<int> perm(static_cast<size_t>(m.rank()));
    for (int i = 0; i < m.rank(); ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CoxeterMatrix p = permuted(m, perm);
    CHECK(are_isomorphic(m, p));
    CHECK(are_isomorphic(p, m));
    CHECK(m.canonical_key() == p.canonical_key());
  }
}

TEST_CASE("canonical key separates non-isomorphic matrices") {
  std::mt19937 rng(20240818);
  for (int trial = 0; trial < 80; ++trial) {
    CoxeterMatrix a = random_matrix(rng, 5);
    CoxeterMatrix b = random_matrix(rng, 5);
    CHECK((a.canonical_key() == b.canonical_key()) == are_isomorphic(a, b));
  }
}

TEST_CASE("graph view round trips losslessly") {
  CoxeterMatrix m = CoxeterMatrix::parse("[[1,3,2],[3,1,0],[2,0,1]]");
  CoxeterGraph g = graph_of(m);
  REQUIRE(g.edges.size() == 2);  // the label-2 pair is a non-edge
  CHECK(g.edges[0] == CoxeterGraph::Edge{0, 1, 3});
  CHECK(g.edges[1] == CoxeterGraph::Edge{1, 2, CoxeterMatrix::kInfinity});
  CHECK(matrix_of(g) == m);

  std::mt19937 rng(20240822);
  for (int trial = 0; trial < 100; ++trial) {
    CoxeterMatrix r = random_matrix(rng);
    CHECK(matrix_of(graph_of(r)) == r);
  }
}

TEST_CASE("gram matrix exact values") {
  GramMatrix g = gram_matrix(CoxeterMatrix::dihedral(3), 40);
  CHECK(g.at(0, 0) == Real(1, 64));
  CHECK(g.at(0, 1) == Real("-0.5", 64));

  GramMatrix inf = gram_matrix(CoxeterMatrix::dihedral(CoxeterMatrix::kInfinity), 40);
  CHECK(inf.at(0, 1) == Real(-1, 64));

  GramMatrix t = gram_matrix(CoxeterMatrix::triangle(3, 7, 2), 40);
  CHECK(t.at(0, 2).is_zero());
  // -cos(pi/7) to double accuracy
  CHECK(t.at(1, 2).to_double() == doctest::Approx(-0.9009688679024191).epsilon(1e-14));

  CHECK_THROWS_AS(gram_matrix(CoxeterMatrix::dihedral(3), 10), std::invalid_argument);
}

TEST_CASE("property: gram matrix exactly symmetric with unit diagonal") {
  std::mt19937 rng(20240819);
  for (int trial = 0; trial < 40; ++trial) {
    CoxeterMatrix m = random_matrix(rng, 5);
    for (long digits : {15L, 40L, 80L}) {
      GramMatrix g = gram_matrix(m, digits);
      for (int i = 0; i < g.rank; ++i) {
        CHECK(g.at(i, i) == Real(1, 64));
        for (int j = 0; j < g.rank; ++j) CHECK(g.at(i, j) == g.at(j, i));
      }
    }
  }
}
