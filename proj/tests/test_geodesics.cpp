#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "ghyp/generators.hpp"
#include "ghyp/metric_graph.hpp"

using namespace ghyp;

namespace {

std::vector<Seg> segs_of(const GeodesicPath& p) { return p.segs; }

}  // namespace

TEST_CASE("path graph has a single geodesic across") {
  MetricGraph g = path_graph(3);
  GeodesicList l = enumerate_geodesics(g, vertex_point(0), vertex_point(2));
  REQUIRE(l.paths.size() == 1);
  CHECK_FALSE(l.truncated);
  const GeodesicPath& p = l.paths[0];
  CHECK(p.total_len8 == 16);
  CHECK(segs_of(p) == std::vector<Seg>{{0, 0, 8}, {1, 0, 8}});
  CHECK(p.start == vertex_point(0));
  CHECK(p.end == vertex_point(2));
}

TEST_CASE("antipodal points of a four cycle have two geodesics in lexicographic order") {
  MetricGraph g = cycle_graph(4);
  GeodesicList l = enumerate_geodesics(g, vertex_point(0), vertex_point(2));
  REQUIRE(l.paths.size() == 2);
  CHECK(segs_of(l.paths[0]) == std::vector<Seg>{{0, 0, 8}, {1, 0, 8}});
  CHECK(segs_of(l.paths[1]) == std::vector<Seg>{{3, 8, 0}, {2, 8, 0}});

  GeodesicPath back = reversed(l.paths[0]);
  CHECK(back.start == vertex_point(2));
  CHECK(back.end == vertex_point(0));
  CHECK(back.total_len8 == 16);
  GeodesicList lr = enumerate_geodesics(g, vertex_point(2), vertex_point(0));
  REQUIRE(lr.paths.size() == 2);
  CHECK(segs_of(back) == segs_of(lr.paths[0]));
}

TEST_CASE("adjacent complete graph vertices have exactly the edge") {
  MetricGraph g = complete_graph(4);
  GeodesicList l = enumerate_geodesics(g, vertex_point(0), vertex_point(1));
  REQUIRE(l.paths.size() == 1);
  CHECK(segs_of(l.paths[0]) == std::vector<Seg>{{0, 0, 8}});
}

TEST_CASE("parallel edges give two geodesics between their endpoints") {
  MetricGraph g = MetricGraph::from_compact(2, {{0, 1}, {0, 1}}, Mode::Multi);
  GeodesicList l = enumerate_geodesics(g, vertex_point(0), vertex_point(1));
  REQUIRE(l.paths.size() == 2);
  CHECK(segs_of(l.paths[0]) == std::vector<Seg>{{0, 0, 8}});
  CHECK(segs_of(l.paths[1]) == std::vector<Seg>{{1, 0, 8}});
}

TEST_CASE("loop geodesics split at the antipode and merge through the base") {
  MetricGraph g = MetricGraph::from_edges({{0, 0}}, Mode::Multi);
  GeodesicList both = enumerate_geodesics(g, vertex_point(0), interior_point(g, 0, 4));
  REQUIRE(both.paths.size() == 2);
  CHECK(segs_of(both.paths[0]) == std::vector<Seg>{{0, 0, 4}});
  CHECK(segs_of(both.paths[1]) == std::vector<Seg>{{0, 8, 4}});

  GeodesicList thru = enumerate_geodesics(g, interior_point(g, 0, 1), interior_point(g, 0, 7));
  REQUIRE(thru.paths.size() == 1);
  CHECK(thru.paths[0].total_len8 == 2);
  CHECK(segs_of(thru.paths[0]) == std::vector<Seg>{{0, 1, 0}, {0, 8, 7}});
}

TEST_CASE("interior to interior inside one edge stays inside") {
  MetricGraph g = cycle_graph(5);
  GeodesicList l = enumerate_geodesics(g, interior_point(g, 0, 2), interior_point(g, 0, 6));
  REQUIRE(l.paths.size() == 1);
  CHECK(segs_of(l.paths[0]) == std::vector<Seg>{{0, 2, 6}});
}

TEST_CASE("vertex to interior across a corner") {
  MetricGraph g = cycle_graph(4);
  GeodesicList l = enumerate_geodesics(g, vertex_point(1), interior_point(g, 2, 4));
  REQUIRE(l.paths.size() == 1);
  CHECK(l.paths[0].total_len8 == 12);
  CHECK(segs_of(l.paths[0]) == std::vector<Seg>{{1, 0, 8}, {2, 0, 4}});
}

TEST_CASE("the cap truncates the list and says so") {
  MetricGraph g = cycle_graph(6);
  GeodesicList l = enumerate_geodesics(g, vertex_point(0), vertex_point(3), 1);
  CHECK(l.paths.size() == 1);
  CHECK(l.truncated);
  GeodesicList full = enumerate_geodesics(g, vertex_point(0), vertex_point(3), 2);
  CHECK(full.paths.size() == 2);
  CHECK_FALSE(full.truncated);
  CHECK_THROWS_AS(enumerate_geodesics(g, vertex_point(0), vertex_point(3), 0), Error);
}

TEST_CASE("coincident endpoints give one empty path") {
  MetricGraph g = cycle_graph(5);
  for (GraphPoint p : {vertex_point(2), interior_point(g, 1, 3)}) {
    GeodesicList l = enumerate_geodesics(g, p, p);
    REQUIRE(l.paths.size() == 1);
    CHECK(l.paths[0].segs.empty());
    CHECK(l.paths[0].total_len8 == 0);
    CHECK(l.paths[0].start == p);
    CHECK(l.paths[0].end == p);
  }
}

TEST_CASE("every enumerated path realizes the distance exactly once") {
  MetricGraph g = cycle_graph(5);
  std::vector<GraphPoint> pts = grid_points(g, GridSpec{4});
  for (GraphPoint p : pts)
    for (GraphPoint q : pts) {
      GeodesicList l = enumerate_geodesics(g, p, q);
      CHECK_FALSE(l.truncated);
      CHECK(!l.paths.empty());
      std::set<std::vector<Seg>> uniq;
      for (const GeodesicPath& path : l.paths) {
        CHECK(path.total_len8 == point_distance(g, p, q));
        CHECK(path.start == p);
        CHECK(path.end == q);
        Len8 sum = 0;
        for (const Seg& s : path.segs) sum += s.len8();
        CHECK(sum == path.total_len8);
        uniq.insert(path.segs);
      }
      CHECK(uniq.size() == l.paths.size());
    }
}
