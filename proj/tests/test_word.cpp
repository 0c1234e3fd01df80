#include "doctest.h"
#include "helpers.hpp"
#include "pob/errors.hpp"
#include "pob/word.hpp"
#include "word_helpers.hpp"

using namespace pob;
using namespace pobtest;

TEST_CASE("running through a handle and straight back collapses") {
  HandleComplex hc = annulus();
  const Surface& s = hc.surface();
  int ea = hc.foot_edge(0, 0), eb = hc.foot_edge(0, 1);
  int disk = hc.disk_face(0), rect = hc.handle_face(0);
  int g0 = hc.disk_gap_item(0, 0);
  EdgeWord w = make_arc(s, BPoint{g0, Rat(1, 3)}, {ea, eb, eb, ea},
                        {disk, rect, disk, rect, disk}, BPoint{g0, Rat(2, 3)});
  EdgeWord r = reduce(s, w);
  CHECK(r.length() == 0);
  CHECK(r.faces == std::vector<int>{disk});
  CHECK(r.start == w.start);
  CHECK(r.end == w.end);
}

TEST_CASE("already reduced words are fixed points") {
  HandleComplex hc = annulus();
  const Surface& s = hc.surface();
  EdgeWord a = cocore_arc(hc, 0);
  CHECK(reduce(s, a) == a);
  EdgeWord core = core_loop(hc, 0);
  CHECK(reduce(s, core) == core);
}

TEST_CASE("incidence violations are reported") {
  HandleComplex hc = punctured_torus();
  const Surface& s = hc.surface();
  int disk = hc.disk_face(0);
  int e0 = hc.foot_edge(0, 0);
  // crossing that does not change face
  CHECK_THROWS_AS(make_closed(s, {e0, e0}, {disk, disk}), NotIncident);
  // arc endpoint off its face
  int g0 = hc.disk_gap_item(0, 0);
  CHECK_THROWS_AS(
      make_arc(s, BPoint{g0, Rat(1, 2)}, {}, {hc.handle_face(0)}, BPoint{g0, Rat(1, 3)}),
      NotIncident);
}

TEST_CASE("reduce is idempotent and preserves endpoints on random words") {
  std::mt19937 rng(123);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 200; ++trial) {
    HandleComplex hc = random_complex(rng);
    if (hc.handle_count() == 0) continue;
    std::uniform_int_distribution<int> len(0, 8);
    auto w = trial % 2 == 0 ? random_arc(hc.surface(), rng, len(rng))
                            : random_closed(hc.surface(), rng, len(rng));
    if (!w) continue;
    ++done;
    EdgeWord r = reduce(hc.surface(), *w);
    CHECK(reduce(hc.surface(), r) == r);
    if (w->kind == WordKind::Arc) {
      CHECK(r.start == w->start);
      CHECK(r.end == w->end);
    }
  }
  CHECK(done >= 100);
}

TEST_CASE("reversal is an involution") {
  std::mt19937 rng(321);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 100; ++trial) {
    HandleComplex hc = random_complex(rng);
    if (hc.handle_count() == 0) continue;
    auto w = trial % 2 == 0 ? random_arc(hc.surface(), rng, 5) : random_closed(hc.surface(), rng, 5);
    if (!w) continue;
    ++done;
    EdgeWord r = reduce(hc.surface(), *w);
    CHECK(reversed(hc.surface(), reversed(hc.surface(), r)) == r);
  }
  CHECK(done >= 50);
}

TEST_CASE("spur removal reaches the exhaustive-search normal form") {
  std::mt19937 rng(555);
  int done = 0;
  for (int trial = 0; trial < 120 && done < 40; ++trial) {
    HandleComplex hc = random_complex(rng, 2, 2, 0);
    if (hc.handle_count() == 0) continue;
    std::uniform_int_distribution<int> len(1, 4);
    auto w = trial % 2 == 0 ? random_arc(hc.surface(), rng, len(rng))
                            : random_closed(hc.surface(), rng, len(rng));
    if (!w || w->length() > 4) continue;
    ++done;
    EdgeWord r = reduce(hc.surface(), *w);
    OracleResult oracle = bfs_normal_forms(hc.surface(), *w, w->length() + 4);
    REQUIRE(oracle.minimal.size() >= 1);
    CHECK(oracle.minimal[0].length() == r.length());
    if (r.kind == WordKind::Closed && r.length() == 0) {
      // a contractible loop can sit in any face it reaches
      for (const EdgeWord& m : oracle.minimal) CHECK(m.length() == 0);
    } else {
      // otherwise the minimum is unique and spur removal finds it
      CHECK(oracle.minimal.size() == 1);
      CHECK(rotated_min(r) == oracle.minimal[0]);
    }
  }
  CHECK(done >= 20);
}

TEST_CASE("closing an arc against itself is contractible") {
  HandleComplex hc = punctured_torus();
  const Surface& s = hc.surface();
  EdgeWord a = cocore_arc(hc, 0);
  EdgeWord loop = close_up(s, a, a);
  CHECK(loop.kind == WordKind::Closed);
  CHECK(loop.length() == 0);
}
