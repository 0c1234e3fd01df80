#include "doctest.h"
#include "helpers.hpp"
#include "pob/enumerate.hpp"
#include "pob/heegaard.hpp"
#include "pob/sutured.hpp"

using namespace pob;
using namespace pobtest;

TEST_CASE("diagram of the disk-with-band fixture") {
  PartialOpenBook p = e0();
  HeegaardDiagram hd = build_diagram(p);
  // chi of the diagram surface: one band over the page minus two side arcs
  CHECK(hd.sigma.euler() == -1);
  CHECK(hd.sigma.euler_cellular() == -1);
  CHECK(hd.alpha.size() == 1);
  CHECK(hd.beta.size() == 1);
  CHECK(hd.sigma.boundary_cycles().size() == 1);  // matches the suture
  CHECK(check_juhasz_balanced(hd).balanced);
  // the doubled cocore meets the doubled pushoff once on each level with
  // opposite signs (the curves are isotopic when the monodromy is trivial)
  Mat m = intersection_matrix(hd);
  CHECK(m == Mat{{0}});
}

TEST_CASE("diagram of the interleaved fixture") {
  PartialOpenBook p = e1();
  HeegaardDiagram hd = build_diagram(p);
  CHECK(hd.sigma.euler() == -2);
  CHECK(hd.sigma.boundary_cycles().size() == 2);
  CHECK(check_juhasz_balanced(hd).balanced);
  CHECK(intersection_matrix(hd) == Mat{{0}});
  CHECK(h1_from_diagram(hd) == h1_oracle(p));
}

TEST_CASE("the pushoff contract holds on the fixtures") {
  for (const PartialOpenBook& p : {e0(), e1()}) {
    HeegaardDiagram hd = build_diagram(p);
    const Surface& s = p.assembled().surface();
    for (int j = 0; j < hd.r; ++j) {
      CHECK(intersection_algebraic(s, hd.a_arcs[j], hd.b_arcs[j]) == +1);
      CHECK(intersection_geometric(s, hd.a_arcs[j], hd.b_arcs[j]) == 1);
    }
  }
}

TEST_CASE("a twisted monodromy shows up in the intersection matrix") {
  PartialOpenBook p = e1();
  EdgeWord gamma = core_loop(p.assembled(), 1);
  PartialOpenBook right = PartialOpenBook::from_twists(p.disks(), p.q_handles(), p.p_handles(),
                                                       {{gamma, Handedness::Right}});
  PartialOpenBook left = PartialOpenBook::from_twists(p.disks(), p.q_handles(), p.p_handles(),
                                                      {{gamma, Handedness::Left}});
  Mat mr = intersection_matrix(build_diagram(right));
  Mat ml = intersection_matrix(build_diagram(left));
  // opposite twists contribute opposite pairings on top of the trivial one
  CHECK(mr.size() == 1);
  CHECK(mr[0][0] == -ml[0][0]);
  CHECK(std::abs(mr[0][0]) == 1);
  CHECK(h1_from_diagram(build_diagram(right)) == h1_oracle(right));
}

TEST_CASE("doctored diagrams fail the balance test") {
  HeegaardDiagram hd = build_diagram(e1());
  HeegaardDiagram dup = hd;
  dup.alpha.push_back(dup.alpha[0]);
  dup.beta.push_back(dup.beta[0]);
  JuhaszVerdict v = check_juhasz_balanced(dup);
  CHECK(!v.balanced);  // duplicated classes are dependent

  HeegaardDiagram dropped = hd;
  dropped.beta.clear();
  v = check_juhasz_balanced(dropped);
  CHECK(!v.balanced);
}

TEST_CASE("dual homology routes agree on a small corpus") {
  std::vector<PartialOpenBook> corpus = enumerate_all({2, 2, 1});
  REQUIRE(corpus.size() >= 10);
  for (const PartialOpenBook& p : corpus) {
    HeegaardDiagram hd = build_diagram(p);
    CHECK(check_juhasz_balanced(hd).balanced);
    SuturedData sd = build_sutured(p);
    CHECK(static_cast<int>(hd.sigma.boundary_cycles().size()) == sd.gamma_components);
    CHECK(h1_from_diagram(hd) == h1_oracle(p));
  }
}

TEST_CASE("stabilization is recognized and changes nothing downstream") {
  for (const PartialOpenBook& p : {e0(), e1()}) {
    HeegaardDiagram small = build_diagram(p);
    for (const EdgeWord& arc : stabilization_arc_menu(p, 2)) {
      PartialOpenBook grown = positive_stabilize(p, arc);
      HeegaardDiagram big = build_diagram(grown);
      CHECK(big.sigma.euler() == small.sigma.euler() - 2);
      CHECK(big.sigma.boundary_cycles().size() == small.sigma.boundary_cycles().size());
      CHECK(stabilization_pattern(small, big));
      CHECK(h1_from_diagram(big) == h1_from_diagram(small));
    }
    CHECK(!stabilization_pattern(small, small));
  }
  CHECK(!stabilization_pattern(build_diagram(e0()), build_diagram(e1())));
}
