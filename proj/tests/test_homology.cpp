#include "doctest.h"
#include "helpers.hpp"
#include "pob/homology.hpp"
#include "pob/word.hpp"

using namespace pob;
using namespace pobtest;

TEST_CASE("smith normal form on small matrices") {
  CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<long long>{1, 6});
  CHECK(smith_diagonal({{1, 0}, {0, 0}}) == std::vector<long long>{1});
  CHECK(smith_diagonal({{2, 4}, {2, 4}}) == std::vector<long long>{2});
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  // transforms certify the decomposition
  Mat m = {{4, 6, 2}, {6, 12, 6}, {2, 6, 10}};
  SmithResult r = smith_normal_form(m);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) {
      long long acc = 0;
      for (size_t x = 0; x < m.size(); ++x)
        for (size_t y = 0; y < m[0].size(); ++y) acc += r.u[i][x] * m[x][y] * r.v[y][j];
      CHECK(acc == r.d[i][j]);
      if (i != j) CHECK(r.d[i][j] == 0);
    }
}

TEST_CASE("quotient invariants") {
  // Z^2 / <(2,0),(0,3)> = Z/6
  AbelianInvariants inv = quotient_invariants(2, {{2, 0}, {0, 3}});
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion == std::vector<long long>{6});
  // Z^3 / <(1,0,0)> = Z^2
  inv = quotient_invariants(3, {{1, 0, 0}});
  CHECK(inv.free_rank == 2);
  CHECK(inv.torsion.empty());
  CHECK(inv.str() == "Z^2");
}

TEST_CASE("a contractible loop has trivial class") {
  HandleComplex hc = annulus();
  EdgeWord triv = make_trivial_loop(hc.surface(), hc.disk_face(0));
  std::vector<long long> cls = h1_class(hc.surface(), triv);
  for (long long x : cls) CHECK(x == 0);
}

TEST_CASE("the annulus core generates first homology") {
  HandleComplex hc = annulus();
  const Surface& s = hc.surface();
  CHECK(s.h1_rank() == 1);
  std::vector<long long> cls = h1_class(s, core_loop(hc, 0));
  CHECK(cls.size() == 1);
  CHECK((cls[0] == 1 || cls[0] == -1));
}

TEST_CASE("the punctured torus has rank two") {
  HandleComplex hc = punctured_torus();
  const Surface& s = hc.surface();
  CHECK(s.h1_rank() == 2);
  // the two core loops form a basis
  Mat cols;
  cols.push_back(h1_class(s, core_loop(hc, 0)));
  cols.push_back(h1_class(s, core_loop(hc, 1)));
  Mat m(2, std::vector<long long>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = cols[j][i];
  CHECK(matrix_rank(m) == 2);
}

TEST_CASE("relative classes of cut-system arcs are independent") {
  HandleComplex hc = punctured_torus();
  const Surface& s = hc.surface();
  RelativeH1 rel(s);
  CHECK(rel.rank() == 2);  // chi = -1, one boundary circle
  std::vector<long long> c0 = rel.word_class(cocore_arc(hc, 0));
  std::vector<long long> c1 = rel.word_class(cocore_arc(hc, 1));
  Mat m(2, std::vector<long long>(2));
  for (int i = 0; i < 2; ++i) {
    m[i][0] = c0[i];
    m[i][1] = c1[i];
  }
  CHECK(matrix_rank(m) == 2);
}

TEST_CASE("relative rank matches the absolute rank on surfaces with boundary") {
  std::mt19937 rng(60902);
  for (int trial = 0; trial < 100; ++trial) {
    HandleComplex hc = random_complex(rng);
    const Surface& s = hc.surface();
    RelativeH1 rel(s);
    CHECK(rel.rank() == s.h1_rank());
  }
}
