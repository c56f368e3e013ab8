#include <doctest.h>

#include <map>
#include <set>

#include "vnw/maps.hpp"

using namespace vnw;
using namespace vnw::maps;

namespace {

MapGraph untwisted_loop(Mode mode = Mode::Ribbon) {
  return make_graph(2, {1, 0}, {1, 0}, {}, mode);
}

MapGraph twisted_loop() { return make_graph(2, {1, 0}, {1, 0}, {{0, 1}}, Mode::Moebius); }

MapGraph torus_graph() { return make_graph(4, {1, 2, 3, 0}, {2, 3, 0, 1}, {}, Mode::Ribbon); }

MapGraph single_edge() { return make_graph(2, {0, 1}, {1, 0}, {}, Mode::Ribbon); }

Integer labeled_group_order(const std::vector<int>& v, Mode mode) {
  Integer p = 1;
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    p *= factorial(static_cast<unsigned long>(v[j]));
    long base = static_cast<long>(j + 1) * (mode == Mode::Moebius ? 2 : 1);
    p *= integer_pow(Integer(base), static_cast<unsigned long>(v[j]));
  }
  return p;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(make_graph(2, {1, 0}, {0, 1}, {}, Mode::Ribbon), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {0, 0}, {1, 0}, {}, Mode::Ribbon), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {1, 0}, {1, 0}, {{0, 1}}, Mode::Ribbon), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {1, 2, 0}, {1, 0, 2}, {}, Mode::Ribbon), std::invalid_argument);
}

TEST_CASE("faces") {
  CHECK(face_count(untwisted_loop()) == 2);
  CHECK(face_count(twisted_loop()) == 1);
  CHECK(face_count(single_edge()) == 1);
  CHECK(face_count(torus_graph()) == 1);
  // two-petal sphere graph
  CHECK(face_count(make_graph(4, {1, 2, 3, 0}, {1, 0, 3, 2}, {}, Mode::Ribbon)) == 3);

  auto walks = faces(single_edge());
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].size() == 2);  // the tree boundary passes both darts
}

TEST_CASE("topological types") {
  CHECK(topological_type(untwisted_loop()) == TopType{true, 0, 2});
  CHECK(topological_type(twisted_loop()) == TopType{false, 1, 1});
  CHECK(topological_type(torus_graph()) == TopType{true, 1, 1});
  CHECK(topological_type(single_edge()) == TopType{true, 0, 1});

  // disconnected input rejected
  auto two_loops = make_graph(4, {1, 0, 3, 2}, {1, 0, 3, 2}, {}, Mode::Ribbon);
  CHECK_THROWS_AS(topological_type(two_loops), std::invalid_argument);
}

TEST_CASE("vertex flips") {
  // flip twice restores the graph
  auto g = standard_nonorientable(2, 2);
  auto ff = flip_vertex(flip_vertex(g, 0), 0);
  CHECK(ff.sigma == g.sigma);
  CHECK(ff.alpha == g.alpha);
  CHECK(ff.twist == g.twist);

  // a single untwisted non-loop edge becomes twisted after flipping one end
  auto edge = make_graph(2, {0, 1}, {1, 0}, {}, Mode::Moebius);
  auto flipped = flip_vertex(edge, 0);
  CHECK(flipped.twist[0] == 1);

  // flipping the vertex of a twisted loop keeps the twist
  auto tl = twisted_loop();
  auto tl_flipped = flip_vertex(tl, 0);
  CHECK(tl_flipped.twist[0] == 1);

  CHECK_THROWS_AS(flip_vertex(untwisted_loop(Mode::Ribbon), 0), std::invalid_argument);
}

TEST_CASE("flip invariance of type, faces and Moebius aut order") {
  std::vector<MapGraph> gs = {standard_nonorientable(1, 2), standard_nonorientable(2, 1),
                              untwisted_loop(Mode::Moebius)};
  // a path of three vertices with two twisted edges
  gs.push_back(
      make_graph(6, {2, 1, 0, 4, 3, 5}, {1, 0, 3, 2, 5, 4}, {{0, 1}, {2, 1}}, Mode::Moebius));
  for (auto& g : gs) {
    auto t = topological_type(g);
    auto f = face_count(g);
    auto aut = aut_order_moebius(g);
    for (int v = 0; v < vertex_count(g); ++v) {
      auto fg = flip_vertex(g, v);
      CHECK(topological_type(fg) == t);
      CHECK(face_count(fg) == f);
      CHECK(aut_order_moebius(fg) == aut);
      CHECK(canonical_key(fg, Mode::Moebius) == canonical_key(g, Mode::Moebius));
    }
  }
}

TEST_CASE("edge contraction") {
  // dumbbell: two loop vertices joined by a bridge
  auto dumbbell = make_graph(6, {1, 2, 0, 4, 5, 3}, {1, 0, 5, 4, 3, 2}, {}, Mode::Ribbon);
  REQUIRE(vertex_count(dumbbell) == 2);
  auto contracted = contract_edge(dumbbell, 2);
  CHECK(vertex_count(contracted) == 1);
  CHECK(edge_count(contracted) == 2);
  CHECK(face_count(contracted) == face_count(dumbbell));
  CHECK(topological_type(contracted) == topological_type(dumbbell));

  // loops cannot be contracted
  CHECK_THROWS_AS(contract_edge(untwisted_loop(), 0), std::invalid_argument);

  // contracting the single edge leaves the dartless sphere
  auto point = contract_edge(single_edge(), 0);
  CHECK(point.darts == 0);
  CHECK(topological_type(point) == TopType{true, 0, 1});

  // pre-twisting the bridge by a flip gives the same contraction result
  auto moeb = make_graph(6, {1, 2, 0, 4, 5, 3}, {1, 0, 5, 4, 3, 2}, {}, Mode::Moebius);
  auto pre_twisted = flip_vertex(moeb, 1);
  REQUIRE(pre_twisted.twist[2] == 1);
  CHECK(canonical_key(contract_edge(pre_twisted, 2), Mode::Moebius) ==
        canonical_key(contract_edge(moeb, 2), Mode::Moebius));
}

TEST_CASE("contraction preserves the topological type") {
  for (auto& v : std::vector<std::vector<int>>{{0, 0, 0, 2}, {2, 1, 0, 1}, {0, 4}, {1, 0, 1, 1}}) {
    for (auto& entry : classify(v, Mode::Moebius)) {
      MapGraph g = configuration_graph(entry.representative, Mode::Moebius);
      if (!entry.connected) continue;
      auto t = topological_type(g);
      auto verts = vertices(g);
      std::vector<int> vertex_of(g.darts);
      for (size_t i = 0; i < verts.size(); ++i)
        for (int d : verts[i]) vertex_of[d] = static_cast<int>(i);
      for (int d = 0; d < g.darts; ++d) {
        if (g.alpha[d] < d || vertex_of[d] == vertex_of[g.alpha[d]]) continue;
        CHECK(topological_type(contract_edge(g, d)) == t);
      }
    }
  }
}

TEST_CASE("ribbon automorphism orders") {
  CHECK(aut_order_ribbon(untwisted_loop()) == 2);
  CHECK(aut_order_ribbon(torus_graph()) == 4);
  CHECK(aut_order_ribbon(make_graph(4, {1, 2, 3, 0}, {1, 0, 3, 2}, {}, Mode::Ribbon)) == 2);
  CHECK(aut_order_ribbon(single_edge()) == 2);
}

TEST_CASE("Moebius automorphism orders") {
  CHECK(aut_order_moebius(untwisted_loop(Mode::Moebius)) == 4);
  CHECK(aut_order_moebius(twisted_loop()) == 4);
}

TEST_CASE("standard graphs") {
  CHECK(canonical_key(standard_orientable(1, 1), Mode::Ribbon) ==
        canonical_key(torus_graph(), Mode::Ribbon));
  CHECK(canonical_key(standard_orientable(0, 2), Mode::Ribbon) ==
        canonical_key(untwisted_loop(), Mode::Ribbon));
  CHECK(topological_type(standard_orientable(2, 1)) == TopType{true, 2, 1});
  CHECK(standard_orientable(2, 1).darts == 8);
  CHECK(topological_type(standard_orientable(1, 3)) == TopType{true, 1, 3});

  CHECK(canonical_key(standard_nonorientable(1, 1), Mode::Moebius) ==
        canonical_key(twisted_loop(), Mode::Moebius));
  CHECK(topological_type(standard_nonorientable(2, 1)) == TopType{false, 2, 1});
  CHECK(topological_type(standard_nonorientable(1, 2)) == TopType{false, 1, 2});
  CHECK(topological_type(standard_nonorientable(3, 2)) == TopType{false, 3, 2});

  CHECK_THROWS_AS(standard_orientable(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(standard_nonorientable(0, 1), std::invalid_argument);
}

TEST_CASE("configuration enumeration counts") {
  auto count = [](const std::vector<int>& v, bool twists) {
    int n = 0;
    enumerate_configurations(v, twists, [&](const Configuration&) { ++n; });
    return n;
  };
  CHECK(count({0, 1}, false) == 1);
  CHECK(count({0, 0, 0, 1}, false) == 3);
  CHECK(count({0, 1}, true) == 2);
  CHECK(count({0, 0, 1}, false) == 0);  // odd dart total
  CHECK(count({2, 0, 0, 1}, false) == 15);
  CHECK(count({0, 0, 0, 2}, true) == 105 * 16);
}

TEST_CASE("classification examples") {
  auto ribbon4 = classify({0, 0, 0, 1}, Mode::Ribbon);
  REQUIRE(ribbon4.size() == 2);
  std::multiset<std::uint64_t> counts{ribbon4[0].labeled_count, ribbon4[1].labeled_count};
  CHECK(counts == std::multiset<std::uint64_t>{1, 2});
  for (auto& e : ribbon4) CHECK(e.connected);

  auto moeb2 = classify({0, 1}, Mode::Moebius);
  REQUIRE(moeb2.size() == 2);
  CHECK(moeb2[0].labeled_count == 1);
  CHECK(moeb2[1].labeled_count == 1);

  auto edge2 = classify({2}, Mode::Ribbon);
  REQUIRE(edge2.size() == 1);
  CHECK(edge2[0].labeled_count == 1);
  CHECK(aut_order_ribbon(configuration_graph(edge2[0].representative, Mode::Ribbon)) == 2);
}

TEST_CASE("orbit-stabilizer identity up to six darts") {
  for (int w = 1; w <= 6; ++w) {
    // degree sequences with exactly w darts
    std::vector<std::vector<int>> seqs;
    std::vector<int> v;
    auto rec = [&](auto&& self, int j, int rem) -> void {
      if (rem == 0) {
        seqs.push_back(v);
        return;
      }
      if (j > rem) return;
      for (int c = 0; c * j <= rem; ++c) {
        v.resize(std::max<size_t>(v.size(), j), 0);
        v[j - 1] = c;
        self(self, j + 1, rem - c * j);
      }
      v[j - 1] = 0;
    };
    rec(rec, 1, w);
    for (auto& seq : seqs) {
      for (Mode mode : {Mode::Ribbon, Mode::Moebius}) {
        Integer group = labeled_group_order(seq, mode);
        for (auto& entry : classify(seq, mode)) {
          MapGraph g = configuration_graph(entry.representative, mode);
          Integer aut = aut_order(g, mode);
          INFO("seq size ", seq.size(), " count ", entry.labeled_count);
          CHECK(group == aut * Integer(static_cast<unsigned long>(entry.labeled_count)));
        }
      }
    }
  }
}

TEST_CASE("Moebius aut dichotomy for orientable classes") {
  for (auto& v : std::vector<std::vector<int>>{{0, 2}, {0, 0, 0, 1}, {2, 1}, {0, 1, 0, 1}}) {
    for (auto& entry : classify(v, Mode::Moebius)) {
      if (!entry.connected) continue;
      MapGraph g = configuration_graph(entry.representative, Mode::Moebius);
      auto t = topological_type(g);
      if (!t.orientable) continue;
      // flip-reduce to a plain ribbon graph via the canonical ribbon form of
      // the orientation; easier: the class has an all-untwisted member iff
      // orientable, and labeled counts already certify aut_order_moebius.
      long am = aut_order_moebius(g);
      // build the flipped-everywhere version to compare ribbon classes
      MapGraph r = g;
      bool all_untwisted = true;
      for (auto tw : g.twist) all_untwisted &= tw == 0;
      if (!all_untwisted) continue;  // representative may carry twists; skip
      r.mode = Mode::Ribbon;
      long ar = aut_order_ribbon(r);
      MapGraph flipped = r;
      flipped.mode = Mode::Moebius;
      for (int vx = 0; vx < vertex_count(flipped); ++vx) flipped = flip_vertex(flipped, vx);
      bool self_mirror = canonical_key(flipped, Mode::Ribbon) == canonical_key(r, Mode::Ribbon);
      CHECK(am == (self_mirror ? 2 * ar : ar));
    }
  }
}

TEST_CASE("Euler consistency for enumerated graphs") {
  for (auto& v : std::vector<std::vector<int>>{{0, 0, 2}, {0, 3}, {1, 1, 1}, {0, 0, 0, 0, 0, 1}}) {
    for (auto& entry : classify(v, Mode::Moebius)) {
      if (!entry.connected) continue;
      MapGraph g = configuration_graph(entry.representative, Mode::Moebius);
      auto t = topological_type(g);
      int chi = vertex_count(g) - edge_count(g) + face_count(g);
      CHECK(chi == (t.orientable ? 2 - 2 * t.genus_or_crosscaps : 2 - t.genus_or_crosscaps));
      if (!t.orientable) CHECK(t.genus_or_crosscaps >= 1);
    }
  }
}

TEST_CASE("graph JSON round trip") {
  for (auto g : {twisted_loop(), torus_graph(), standard_nonorientable(2, 2)}) {
    auto back = graph_from_json(graph_to_json(g));
    CHECK(back.darts == g.darts);
    CHECK(back.sigma == g.sigma);
    CHECK(back.alpha == g.alpha);
    CHECK(back.twist == g.twist);
    CHECK(back.mode == g.mode);
  }
  CHECK_THROWS_AS(graph_from_json("{\"darts\": 2, \"sigma\": [1,0], \"alpha\": [0,1]}"),
                  std::invalid_argument);
}
