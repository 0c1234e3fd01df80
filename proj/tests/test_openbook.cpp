#include "doctest.h"
#include "helpers.hpp"
#include "pob/errors.hpp"
#include "pob/openbook.hpp"

using namespace pob;
using namespace pobtest;

TEST_CASE("the disk-with-band book assembles to an annulus") {
  PartialOpenBook p = e0();
  CHECK(p.assembled().surface().euler() == 0);
  CHECK(p.assembled().surface().boundary_cycles().size() == 2);
  CHECK(p.partial_count() == 1);
  CHECK(validate(p).all_pass());
}

TEST_CASE("the interleaved book assembles to a once punctured torus") {
  PartialOpenBook p = e1();
  const Surface& s = p.assembled().surface();
  CHECK(s.euler() == -1);
  CHECK(s.boundary_cycles().size() == 1);
  CHECK(s.genus_per_component() == std::vector<int>{1});
  CHECK(validate(p).all_pass());
}

TEST_CASE("boundary partition of the small fixtures") {
  BoundaryPartition part0 = boundary_partition(e0());
  CHECK(part0.n() == 2);
  CHECK(part0.a_arcs.size() == 2);
  CHECK(part0.outer.size() == 2);

  BoundaryPartition part1 = boundary_partition(e1());
  CHECK(part1.n() == 2);
  CHECK(part1.a_arcs.size() == 2);
  CHECK(part1.outer.size() == 2);
  // hand trace: each outer run of the interleaved book is led and
  // trailed by the same partial foot
  for (const auto& run : part1.outer) {
    CHECK(!run.is_circle);
    CHECK(run.foot_before == run.foot_after);
  }
}

TEST_CASE("partial handles may not stack on partial handles") {
  CHECK_THROWS_AS(
      PartialOpenBook::make({DiskDecl{2, +1, "d0"}}, {},
                            {HandleDecl{"p0", SlotRef::disk(0, 0), SlotRef::disk(0, 1), false, 1, 0},
                             HandleDecl{"p1", SlotRef::handle_side(0, 0, 0), SlotRef::disk(0, 0)}},
                            {}),
      ValidationError);
}

TEST_CASE("empty twist words reproduce the cocores") {
  PartialOpenBook p = e1();
  std::vector<EdgeWord> images =
      monodromy_from_word(p.assembled(), p.q_handle_count(), p.partial_count(), {});
  CHECK(images == p.cocores());
}

TEST_CASE("a twist and its inverse cancel on the monodromy") {
  PartialOpenBook p = e1();
  EdgeWord gamma = core_loop(p.assembled(), 1);  // through the partial band
  std::vector<TwistStep> word{{gamma, Handedness::Right}, {gamma, Handedness::Left}};
  std::vector<EdgeWord> images =
      monodromy_from_word(p.assembled(), p.q_handle_count(), p.partial_count(), word);
  CHECK(images == p.cocores());
}

TEST_CASE("a single twist produces the independently spliced image") {
  PartialOpenBook p = e1();
  const Surface& s = p.assembled().surface();
  EdgeWord gamma = core_loop(p.assembled(), 1);
  std::vector<EdgeWord> images = monodromy_from_word(
      p.assembled(), p.q_handle_count(), p.partial_count(), {{gamma, Handedness::Right}});
  EdgeWord expected = dehn_twist(s, gamma, p.cocores()[0], Handedness::Right);
  CHECK(images[0] == expected);
  // the image still runs between the cocore endpoints and crosses the
  // band's feet once each after reduction
  CHECK(images[0].start == p.cocores()[0].start);
  CHECK(images[0].end == p.cocores()[0].end);
}

TEST_CASE("validation flags images that do not fix the boundary") {
  PartialOpenBook p = e0();
  EdgeWord bad = p.cocores()[0];
  bad.end.t = bad.end.t * Rat(1, 2);  // slide the endpoint off the cocore's
  PartialOpenBook moved = PartialOpenBook::make(p.disks(), p.q_handles(), p.p_handles(), {bad});
  ValidationReport rep = validate(moved);
  CHECK(!rep.all_pass());
  bool found = false;
  for (const auto& e : rep.entries)
    if (!e.pass && e.detail.find("h does not fix A") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("validation flags crossing images") {
  // two bands on one disk; twist the second image along a curve through
  // both bands so it sweeps across the first cocore
  std::vector<DiskDecl> disks{DiskDecl{4, +1, "d0"}};
  std::vector<HandleDecl> ps{HandleDecl{"p0", SlotRef::disk(0, 0), SlotRef::disk(0, 2)},
                             HandleDecl{"p1", SlotRef::disk(0, 1), SlotRef::disk(0, 3)}};
  PartialOpenBook base = PartialOpenBook::make(disks, {}, ps, {});
  const Surface& s = base.assembled().surface();
  EdgeWord gamma = core_loop(base.assembled(), 0);
  std::vector<EdgeWord> images = base.cocores();
  images[1] = dehn_twist(s, gamma, images[1], Handedness::Right);
  if (intersection_geometric(s, images[0], images[1]) > 0) {
    PartialOpenBook crossed = PartialOpenBook::make(disks, {}, ps, images);
    ValidationReport rep = validate(crossed);
    CHECK(!rep.all_pass());
    bool found = false;
    for (const auto& e : rep.entries)
      if (!e.pass && e.detail == "images not disjoint") found = true;
    CHECK(found);
  }
}

TEST_CASE("stabilization grows the book by one handle") {
  PartialOpenBook p = e0();
  std::vector<EdgeWord> menu = stabilization_arc_menu(p, 4);
  REQUIRE(menu.size() >= 2);
  for (const EdgeWord& arc : menu) {
    PartialOpenBook grown = positive_stabilize(p, arc);
    CHECK(grown.partial_count() == p.partial_count() + 1);
    CHECK(grown.assembled().surface().euler() == p.assembled().surface().euler() - 1);
    CHECK(validate(grown).all_pass());
    // the new image runs through the new handle exactly once
    const EdgeWord& img = grown.images().back();
    int idx = grown.p_handle_index(grown.partial_count() - 1);
    int hits_a = 0, hits_b = 0;
    for (int e : img.cross) {
      if (e == grown.assembled().foot_edge(idx, 0)) ++hits_a;
      if (e == grown.assembled().foot_edge(idx, 1)) ++hits_b;
    }
    CHECK(hits_a == 1);
    CHECK(hits_b == 1);
  }
}

TEST_CASE("stabilization arcs must end on base material") {
  PartialOpenBook p = e0();
  const HandleComplex& hc = p.assembled();
  int lg = hc.side_gap_item(p.p_handle_index(0), 0, 0);
  EdgeWord bad = make_arc(hc.surface(), BPoint{lg, Rat(1, 5)}, {},
                          {hc.handle_face(p.p_handle_index(0))}, BPoint{lg, Rat(4, 5)});
  CHECK_THROWS_AS(positive_stabilize(p, bad), NotProperArc);
}

TEST_CASE("every book is isomorphic to itself") {
  for (const PartialOpenBook& p : {e0(), e1()}) {
    auto w = isomorphic(p, p);
    REQUIRE(w.has_value());
  }
}

TEST_CASE("relabeled copies are recognized") {
  // e1 with the disk rotated by one mark: the base handle sits on
  // (m1, m3) and the partial handle on (m2, m0)
  PartialOpenBook rotated = PartialOpenBook::make(
      {DiskDecl{4, +1, "d0"}}, {HandleDecl{"q0", SlotRef::disk(0, 1), SlotRef::disk(0, 3)}},
      {HandleDecl{"p0", SlotRef::disk(0, 2), SlotRef::disk(0, 0)}}, {});
  auto w = isomorphic(e1(), rotated);
  REQUIRE(w.has_value());
  // and a flipped partial handle
  PartialOpenBook flipped = PartialOpenBook::make(
      {DiskDecl{4, +1, "d0"}}, {HandleDecl{"q0", SlotRef::disk(0, 0), SlotRef::disk(0, 2)}},
      {HandleDecl{"p0", SlotRef::disk(0, 3), SlotRef::disk(0, 1)}}, {});
  CHECK(isomorphic(e1(), flipped).has_value());
}

TEST_CASE("books with different pages are never isomorphic") {
  CHECK(!isomorphic(e0(), e1()).has_value());
}

TEST_CASE("isomorphism is symmetric on twisted fixtures") {
  PartialOpenBook p = e1();
  EdgeWord gamma = core_loop(p.assembled(), 1);
  PartialOpenBook t = PartialOpenBook::from_twists(p.disks(), p.q_handles(), p.p_handles(),
                                                   {{gamma, Handedness::Right}});
  CHECK(isomorphic(t, t).has_value());
  CHECK(!isomorphic(t, p).has_value());  // twisted vs identity images differ
}
