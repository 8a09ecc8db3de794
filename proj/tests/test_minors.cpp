#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ghyp/generators.hpp"
#include "ghyp/iso.hpp"
#include "ghyp/metric_graph.hpp"
#include "ghyp/minors.hpp"

using namespace ghyp;

#define CHECK_ERRC(expr, want)                    \
  do {                                            \
    try {                                         \
      (void)(expr);                               \
      FAIL("expected a throw");                   \
    } catch (const Error& err_) {                 \
      CHECK(err_.code == (want));                 \
    }                                             \
  } while (0)

TEST_CASE("contracting a triangle edge merges the duplicate pair") {
  MetricGraph g = cycle_graph(3);
  ContractionResult c = contract_edge(g, 0);
  CHECK(c.contracted_edge == 0);
  CHECK(c.merged_vertex == 0);
  CHECK(c.vertex_map == std::vector<int>{0, 0, 1});
  CHECK(c.quotient.n() == 2);
  CHECK(c.quotient.m() == 1);
  CHECK(c.quotient.edge_a(0) == 0);
  CHECK(c.quotient.edge_b(0) == 1);
  CHECK(c.edge_map[0].kind == EdgeFate::Kind::Collapsed);
  CHECK(c.edge_map[0].target == -1);
  // both parallel survivors merge into the single quotient edge
  CHECK(c.edge_map[1].kind == EdgeFate::Kind::MergedInto);
  CHECK(c.edge_map[1].target == 0);
  CHECK(c.edge_map[2].kind == EdgeFate::Kind::MergedInto);
  CHECK(c.edge_map[2].target == 0);
}

TEST_CASE("contracting a cycle edge gives the next smaller cycle") {
  for (int n = 4; n <= 7; ++n) {
    ContractionResult c = contract_edge(cycle_graph(n), 0);
    CHECK(isomorphic(c.quotient, cycle_graph(n - 1)));
    for (int f = 1; f < n; ++f) CHECK(c.edge_map[f].kind == EdgeFate::Kind::Kept);
  }
}

TEST_CASE("contracting one of a parallel pair leaves a loop") {
  MetricGraph g = MetricGraph::from_compact(2, {{0, 1}, {0, 1}}, Mode::Multi);
  ContractionResult c = contract_edge(g, 0);
  CHECK(c.quotient.n() == 1);
  CHECK(c.quotient.m() == 1);
  CHECK(c.quotient.is_loop(0));
  CHECK(c.edge_map[1].kind == EdgeFate::Kind::Kept);
  CHECK(h_map(g, c, interior_point(g, 1, 2)) == interior_point(c.quotient, 0, 2));
  CHECK(h_map(g, c, vertex_point(1)) == vertex_point(0));
}

TEST_CASE("the contraction map carries offsets and flips reversed records") {
  MetricGraph g = cycle_graph(3);
  ContractionResult c = contract_edge(g, 0);
  CHECK(h_map(g, c, vertex_point(0)) == vertex_point(0));
  CHECK(h_map(g, c, vertex_point(1)) == vertex_point(0));
  CHECK(h_map(g, c, vertex_point(2)) == vertex_point(1));
  CHECK(h_map(g, c, interior_point(g, 0, 3)) == vertex_point(0));
  // e1 runs 1->2, image record runs 0->1: same direction, offset kept
  CHECK(h_map(g, c, interior_point(g, 1, 2)) == interior_point(c.quotient, 0, 2));
  // e2 runs 2->0, image record runs 0->1: reversed, offset flips
  CHECK(h_map(g, c, interior_point(g, 2, 2)) == interior_point(c.quotient, 0, 6));
  CHECK(h_map(g, c, interior_point(g, 2, 4)) == interior_point(c.quotient, 0, 4));
}

TEST_CASE("the contraction map never increases distance") {
  for (const MetricGraph& g : {cycle_graph(5), diamond_graph(), wheel_graph(5)}) {
    for (int e = 0; e < g.m(); ++e) {
      ContractionResult c = contract_edge(g, e);
      std::vector<GraphPoint> pts = grid_points(g, GridSpec{4});
      for (GraphPoint p : pts)
        for (GraphPoint q : pts)
          CHECK(point_distance(c.quotient, h_map(g, c, p), h_map(g, c, q)) <=
                point_distance(g, p, q));
    }
  }
}

TEST_CASE("loop contraction is refused") {
  MetricGraph g = MetricGraph::from_edges({{0, 0}}, Mode::Multi);
  CHECK_THROWS_WITH_AS(contract_edge(g, 0), "cannot contract loop edge 0 at vertex 0", Error);
  CHECK_ERRC(contract_edge(g, 0), Errc::LoopContraction);
  CHECK_ERRC(contract_edge(g, 5), Errc::BadInput);
}

TEST_CASE("edge deletion keeps vertices and drops one edge") {
  MetricGraph g = cycle_graph(5);
  MetricGraph h = delete_edge(g, 0);
  CHECK(h.n() == 5);
  CHECK(h.m() == 4);
  CHECK(isomorphic(h, path_graph(5)));
  CHECK(h.vdist8(0, 1) == 4 * kUnit8);

  CHECK_THROWS_WITH_AS(delete_edge(path_graph(3), 0),
                       "deleting edge 0 disconnects the graph into components {0} and {1,2}",
                       Error);
  CHECK_ERRC(delete_edge(path_graph(3), 1), Errc::WouldDisconnect);
}

TEST_CASE("cut edges and cut vertices") {
  MetricGraph bowtie = MetricGraph::from_compact(
      5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}, Mode::Simple);
  for (int e = 0; e < bowtie.m(); ++e) CHECK_FALSE(is_cut_edge(bowtie, e));
  CHECK(is_cut_vertex(bowtie, 0));
  for (int v = 1; v < 5; ++v) CHECK_FALSE(is_cut_vertex(bowtie, v));

  MetricGraph p = path_graph(4);
  for (int e = 0; e < 3; ++e) CHECK(is_cut_edge(p, e));
  CHECK_FALSE(is_cut_vertex(p, 0));
  CHECK(is_cut_vertex(p, 1));
  CHECK(is_cut_vertex(p, 2));

  MetricGraph lollipop = MetricGraph::from_edges({{0, 1}, {1, 1}}, Mode::Multi);
  CHECK(is_cut_edge(lollipop, 0));
  CHECK_FALSE(is_cut_edge(lollipop, 1));  // a loop never separates
  CHECK(is_cut_vertex(lollipop, 1));
}

TEST_CASE("block decomposition of a two triangle chain") {
  MetricGraph g = MetricGraph::from_compact(
      7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}}, Mode::Simple);
  TDecomposition d = blocks(g);
  REQUIRE(d.blocks.size() == 4);
  CHECK(d.cut_vertices == std::vector<int>{2, 3, 4});
  CHECK(d.edge_block == std::vector<int>{0, 0, 0, 1, 2, 3, 3, 3});

  CHECK(d.blocks[0].orig_edge == std::vector<int>{0, 1, 2});
  CHECK_FALSE(d.blocks[0].is_bridge);
  CHECK(isomorphic(d.blocks[0].graph, cycle_graph(3)));
  CHECK(d.blocks[1].is_bridge);
  CHECK(d.blocks[1].orig_edge == std::vector<int>{3});
  CHECK(d.blocks[2].is_bridge);
  CHECK(d.blocks[3].orig_edge == std::vector<int>{5, 6, 7});
  CHECK(isomorphic(d.blocks[3].graph, cycle_graph(3)));
  for (const Block& b : d.blocks)
    for (std::size_t i = 0; i < b.orig_edge.size(); ++i) {
      int host = b.orig_edge[i];
      int bi = static_cast<int>(i);
      CHECK(b.orig_vertex[b.graph.edge_a(bi)] + b.orig_vertex[b.graph.edge_b(bi)] ==
            g.edge_a(host) + g.edge_b(host));
    }
}

TEST_CASE("a loop forms its own block") {
  MetricGraph g = MetricGraph::from_edges({{0, 1}, {1, 1}}, Mode::Multi);
  TDecomposition d = blocks(g);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].is_bridge);
  CHECK_FALSE(d.blocks[1].is_bridge);
  CHECK(d.blocks[1].graph.n() == 1);
  CHECK(d.blocks[1].graph.is_loop(0));
  CHECK(d.cut_vertices == std::vector<int>{1});
}

TEST_CASE("cactus profiles") {
  CactusProfile c5 = cactus_profile(cycle_graph(5));
  CHECK(c5.is_cactus);
  CHECK(c5.circumference == 5);
  CHECK(c5.max_cycle_count == 1);

  CactusProfile tree = cactus_profile(path_graph(6));
  CHECK(tree.is_cactus);
  CHECK_FALSE(tree.circumference.has_value());
  CHECK(tree.max_cycle_count == 0);

  CactusProfile bow = cactus_profile(MetricGraph::from_compact(
      5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}, Mode::Simple));
  CHECK(bow.is_cactus);
  CHECK(bow.circumference == 3);
  CHECK(bow.max_cycle_count == 2);

  CactusProfile loop = cactus_profile(MetricGraph::from_edges({{0, 0}}, Mode::Multi));
  CHECK(loop.is_cactus);
  CHECK(loop.circumference == 1);
  CHECK(loop.max_cycle_count == 1);

  CactusProfile dia = cactus_profile(diamond_graph());
  CHECK_FALSE(dia.is_cactus);
  CHECK(dia.circumference == 4);
  CHECK(dia.max_cycle_count == 1);

  CactusProfile k4 = cactus_profile(complete_graph(4));
  CHECK_FALSE(k4.is_cactus);
  CHECK(k4.circumference == 4);
  CHECK(k4.max_cycle_count == 3);

  CactusProfile th = cactus_profile(theta_graph(1, 4, 4));
  CHECK_FALSE(th.is_cactus);
  CHECK(th.circumference == 8);
  CHECK(th.max_cycle_count == 1);
}

TEST_CASE("triangles through an edge") {
  MetricGraph k4 = complete_graph(4);
  std::vector<Triangle3> ts = cycles3_through_edge(k4, 0);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].va == 0);
  CHECK(ts[0].vb == 1);
  CHECK(ts[0].vw == 2);
  CHECK(ts[0].ea == 0);
  CHECK(ts[0].eb == 3);
  CHECK(ts[0].ew == 1);
  CHECK(ts[1].vw == 3);
  CHECK(ts[1].eb == 4);
  CHECK(ts[1].ew == 2);

  CHECK(cycles3_through_edge(diamond_graph(), 0).size() == 2);
  CHECK(cycles3_through_edge(cycle_graph(5), 2).empty());
  CHECK(cycles3_through_edge(MetricGraph::from_edges({{0, 0}}, Mode::Multi), 0).empty());

  // a doubled triangle side doubles the count through the opposite edge
  MetricGraph dbl =
      MetricGraph::from_compact(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}, Mode::Multi);
  CHECK(cycles3_through_edge(dbl, 2).size() == 2);
  CHECK(cycles3_through_edge(dbl, 0).size() == 1);
}

TEST_CASE("minor sequences compose certified bounds") {
  MetricGraph g = cycle_graph(5);

  MinorSequenceResult con = apply_minor_sequence(g, {{MinorOp::Kind::Contract, 0}});
  CHECK(isomorphic(con.result, cycle_graph(4)));
  CHECK(con.chain.delta_final == Rat(1));
  CHECK(con.chain.lo == Rat(1, 3));
  CHECK(con.chain.hi == Rat(19, 3));
  REQUIRE(con.chain.steps.size() == 1);
  CHECK(con.chain.steps[0].edge_u == 0);
  CHECK(con.chain.steps[0].edge_v == 1);
  CHECK_FALSE(con.chain.steps[0].d_units.has_value());

  MinorSequenceResult del = apply_minor_sequence(g, {{MinorOp::Kind::Delete, 0}});
  CHECK(isomorphic(del.result, path_graph(5)));
  CHECK(del.chain.delta_final == Rat(0));
  CHECK(del.chain.steps[0].d_units == 4);
  CHECK(del.chain.lo == Rat(5, 4));
  CHECK(del.chain.hi == Rat(4));

  MinorSequenceResult two =
      apply_minor_sequence(g, {{MinorOp::Kind::Delete, 0}, {MinorOp::Kind::Contract, 0}});
  CHECK(isomorphic(two.result, path_graph(4)));
  REQUIRE(two.chain.steps.size() == 2);
  CHECK(two.chain.steps[1].lo == Rat(0));
  CHECK(two.chain.steps[1].hi == Rat(1));
  CHECK(two.chain.lo == Rat(5, 4));
  CHECK(two.chain.hi == Rat(10));
  CHECK(two.chain.steps[0].lo == two.chain.lo);
  CHECK(two.chain.steps[0].hi == two.chain.hi);

  // the certified interval really contains the exact value
  CHECK(Rat(5, 4) <= Rat(5, 4));
  CHECK(con.chain.lo <= Rat(5, 4));
  CHECK(Rat(5, 4) <= con.chain.hi);
}

TEST_CASE("sequence errors name the failing step") {
  MetricGraph g = cycle_graph(5);
  try {
    apply_minor_sequence(g, {{MinorOp::Kind::Delete, 0}, {MinorOp::Kind::Delete, 99}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code == Errc::BadInput);
    CHECK(std::string(e.what()).rfind("step 2: edge id 99 out of range", 0) == 0);
  }
  try {
    apply_minor_sequence(MetricGraph::from_edges({{0, 0}}, Mode::Multi),
                         {{MinorOp::Kind::Contract, 0}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code == Errc::LoopContraction);
    CHECK(std::string(e.what()) == "step 1: cannot contract loop edge 0 at vertex 0");
  }
}
