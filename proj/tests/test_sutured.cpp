#include "doctest.h"
#include "helpers.hpp"
#include "pob/enumerate.hpp"
#include "pob/errors.hpp"
#include "pob/sutured.hpp"

using namespace pob;
using namespace pobtest;

// The expected values for the two small fixtures were traced by hand
// before the implementation existed:
//  - disk base with one band: the suture graph has four corners joined
//    by two foot arcs and two outer gaps into a single cycle; both
//    complement regions are disks, and the glued boundary is a sphere
//    made of two disks and two vertical bigons.
//  - annulus base with an interleaved band: each outer run is led and
//    trailed by the same foot, so the suture closes into two circles;
//    both complement regions are annuli and the boundary is a torus.

TEST_CASE("sutured data of the disk-with-band fixture") {
  SuturedData sd = build_sutured(e0());
  CHECK(sd.gamma_components == 1);
  CHECK(sd.chi_r_plus == 1);
  CHECK(sd.chi_r_minus == 1);
  CHECK(sd.boundary_components_of_m == 1);
  CHECK(sd.chi_boundary_m == 2);
  CHECK(sd.incidence == std::vector<int>{1});
  CHECK(check_balanced(sd).balanced);
}

TEST_CASE("sutured data of the interleaved fixture") {
  SuturedData sd = build_sutured(e1());
  CHECK(sd.gamma_components == 2);
  CHECK(sd.chi_r_plus == 0);
  CHECK(sd.chi_r_minus == 0);
  CHECK(sd.boundary_components_of_m == 1);
  CHECK(sd.chi_boundary_m == 0);
  CHECK(sd.incidence == std::vector<int>{2});
  CHECK(check_balanced(sd).balanced);
}

TEST_CASE("hand-crafted imbalance is reported") {
  SuturedData sd;
  sd.gamma_components = 1;
  sd.chi_r_plus = 1;
  sd.chi_r_minus = -1;
  sd.boundary_components_of_m = 1;
  sd.incidence = {1};
  BalanceVerdict v = check_balanced(sd);
  CHECK(!v.balanced);
  REQUIRE(v.reasons.size() == 1);

  sd.chi_r_minus = 1;
  sd.boundary_components_of_m = 2;
  sd.incidence = {1, 0};
  v = check_balanced(sd);
  CHECK(!v.balanced);
  CHECK(v.reasons.size() == 1);
}

TEST_CASE("the gluing model doubles each band into an annulus") {
  PartialOpenBook p = e1();
  GluingModel gm = build_gluing_model(p);
  CHECK(gm.disk_count == 2);
  CHECK(gm.double_p.component_count() == 1);
  CHECK(gm.double_p.euler() == 0);
  CHECK(gm.double_p.boundary_cycles().size() == 2);
  CHECK(gm.into_page.size() == 1);
}

TEST_CASE("homology of the small fixtures") {
  AbelianInvariants h0 = h1_oracle(e0());
  CHECK(h0.free_rank == 1);
  CHECK(h0.torsion.empty());
  AbelianInvariants h1 = h1_oracle(e1());
  CHECK(h1.free_rank == 2);
  CHECK(h1.torsion.empty());
}

TEST_CASE("twisting the monodromy changes homology") {
  PartialOpenBook p = e1();
  EdgeWord gamma = core_loop(p.assembled(), 1);
  PartialOpenBook t = PartialOpenBook::from_twists(p.disks(), p.q_handles(), p.p_handles(),
                                                   {{gamma, Handedness::Right}});
  AbelianInvariants h = h1_oracle(t);
  // one twist along the band core pairs the doubled cocore with the
  // page class once, killing a free generator
  CHECK(h.free_rank == 1);
}

TEST_CASE("balance and boundary bookkeeping across a small corpus") {
  std::vector<PartialOpenBook> corpus = enumerate_all({2, 2, 1});
  REQUIRE(corpus.size() >= 10);
  for (const PartialOpenBook& p : corpus) {
    SuturedData sd = build_sutured(p);
    CHECK(check_balanced(sd).balanced);
    // both sides of the boundary count, computed independently
    BoundaryPartition part = boundary_partition(p);
    int chi_s = p.assembled().surface().euler();
    int chi_p = p.partial_count();
    CHECK(sd.chi_boundary_m == 2 * (chi_s - chi_p + part.n()));
    CHECK(sd.chi_boundary_m == sd.chi_r_plus + sd.chi_r_minus);
    // the suture mirrors the base boundary
    CHECK(sd.gamma_components ==
          static_cast<int>(p.base().surface().boundary_cycles().size()));
  }
}

TEST_CASE("the oracle is invariant under stabilization and relabeling") {
  for (const PartialOpenBook& p : {e0(), e1()}) {
    AbelianInvariants before = h1_oracle(p);
    for (const EdgeWord& arc : stabilization_arc_menu(p, 2)) {
      PartialOpenBook grown = positive_stabilize(p, arc);
      CHECK(h1_oracle(grown) == before);
      SuturedData sd = build_sutured(p);
      SuturedData sd2 = build_sutured(grown);
      CHECK(sd.gamma_components == sd2.gamma_components);
      CHECK(sd.chi_r_plus == sd2.chi_r_plus);
      CHECK(sd.chi_r_minus == sd2.chi_r_minus);
    }
  }
}
