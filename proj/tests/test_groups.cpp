#include <doctest.h>

#include <algorithm>

#include "vnw/groups.hpp"

using namespace vnw;
using namespace vnw::groups;

namespace {

std::vector<size_t> class_sizes(const FiniteGroup& g) {
  std::vector<size_t> sizes;
  for (auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Direct 2g-tuple count of solutions of [a1,b1]...[ag,bg] = 1.
Integer brute_hom_orientable(const FiniteGroup& g, int genus) {
  if (genus == 0) return 1;
  Integer count = 0;
  std::vector<int> tuple(2 * genus, 0);
  auto commutator = [&](int a, int b) {
    return g.mul(g.mul(a, b), g.mul(g.inverse[a], g.inverse[b]));
  };
  while (true) {
    int prod = g.identity;
    for (int i = 0; i < genus; ++i) prod = g.mul(prod, commutator(tuple[2 * i], tuple[2 * i + 1]));
    if (prod == g.identity) ++count;
    int pos = 0;
    while (pos < 2 * genus && ++tuple[pos] == g.order) tuple[pos++] = 0;
    if (pos == 2 * genus) break;
  }
  return count;
}

}  // namespace

TEST_CASE("built-in groups") {
  CHECK(cyclic(2).order == 2);
  CHECK(symmetric(3).order == 6);
  CHECK(conjugacy_classes(symmetric(3)).size() == 3);
  CHECK(quaternion8().order == 8);
  CHECK(conjugacy_classes(quaternion8()).size() == 5);
  CHECK(dihedral(4).order == 8);
  CHECK(conjugacy_classes(dihedral(4)).size() == 5);
  CHECK(alternating(4).order == 12);
  CHECK(conjugacy_classes(alternating(4)).size() == 4);
  CHECK(build_group("Z2xZ2").order == 4);
  CHECK(build_group("S4").order == 24);
  CHECK_THROWS_AS(build_group("F17"), std::invalid_argument);
}

TEST_CASE("conjugacy class sizes") {
  CHECK(class_sizes(symmetric(3)) == std::vector<size_t>{1, 2, 3});
  CHECK(class_sizes(quaternion8()) == std::vector<size_t>{1, 1, 2, 2, 2});
  for (auto& c : conjugacy_classes(cyclic(6))) CHECK(c.size() == 1);
}

TEST_CASE("invalid Cayley tables rejected") {
  // no identity
  CHECK_THROWS_AS(from_cayley_table({{1, 0}, {1, 0}}, "bad"), std::invalid_argument);
  // a Latin square with identity that is not associative
  CHECK_THROWS_AS(from_cayley_table({{0, 1, 2, 3, 4},
                                     {1, 0, 3, 4, 2},
                                     {2, 4, 0, 1, 3},
                                     {3, 2, 4, 0, 1},
                                     {4, 3, 1, 2, 0}},
                                    "loop5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_cayley_table({{0, 1}, {1}}, "ragged"), std::invalid_argument);
}

TEST_CASE("commutator distribution") {
  auto z6 = cyclic(6);
  auto d = commutator_distribution(z6);
  CHECK(d.values[z6.identity] == 36);
  for (int x = 0; x < 6; ++x)
    if (x != z6.identity) CHECK(d.values[x] == 0);

  auto s3 = symmetric(3);
  auto ds3 = commutator_distribution(s3);
  CHECK(ds3.values[s3.identity] == 18);  // = #commuting pairs
  Rational total(0);
  for (auto& v : ds3.values) total += v;
  CHECK(total == 36);
  CHECK(is_class_function(s3, ds3));
}

TEST_CASE("square distribution") {
  auto z2 = cyclic(2);
  CHECK(square_distribution(z2).values[z2.identity] == 2);

  auto q8 = quaternion8();
  auto s = square_distribution(q8);
  CHECK(s.values[q8.identity] == 2);
  // the unique central involution collects the six squares of +-i, +-j, +-k
  int minus_one = -1;
  for (int x = 0; x < 8; ++x)
    if (x != q8.identity && q8.mul(x, x) == q8.identity && q8.inverse[x] == x) minus_one = x;
  REQUIRE(minus_one >= 0);
  CHECK(s.values[minus_one] == 6);
  Rational total(0);
  for (auto& v : s.values) total += v;
  CHECK(total == 8);
  CHECK(is_class_function(q8, s));
}

TEST_CASE("convolution") {
  auto z2 = cyclic(2);
  auto s = square_distribution(z2);
  auto ss = convolve(z2, s, s);
  CHECK(ss.values[z2.identity] == 4);  // #{(a,b): a^2 b^2 = 1} = 4

  auto s3 = symmetric(3);
  ClassFunction delta;
  delta.values.assign(6, Rational(0));
  delta.values[s3.identity] = 1;
  auto f = commutator_distribution(s3);
  CHECK(convolve(s3, delta, f).values == f.values);

  auto g = square_distribution(s3);
  auto h = convolve(s3, f, g);
  CHECK(convolve(s3, convolve(s3, f, g), h).values == convolve(s3, f, convolve(s3, g, h)).values);
  CHECK(convolve(s3, convolve(s3, h, g), f).values == convolve(s3, h, convolve(s3, g, f)).values);
}

TEST_CASE("hom counts") {
  auto s3 = symmetric(3);
  CHECK(hom_count_orientable(s3, 1) == 18);
  auto z2 = cyclic(2);
  CHECK(hom_count_orientable(z2, 2) == 16);
  auto q8 = quaternion8();
  CHECK(hom_count_nonorientable(q8, 2) == 40);
  CHECK(hom_count_orientable(s3, 0) == 1);
  CHECK_THROWS_AS(hom_count_nonorientable(s3, 0), std::invalid_argument);

  // convolution route vs direct tuple enumeration
  for (auto& g : {cyclic(2), cyclic(3), cyclic(4), quaternion8(), dihedral(3)})
    for (int genus = 0; genus <= 2; ++genus)
      CHECK(hom_count_orientable(g, genus) == brute_hom_orientable(g, genus));

  // commuting-pair identity: |Hom(torus group)| = |G| * #classes
  for (auto& g : {symmetric(3), quaternion8(), dihedral(4), symmetric(4), alternating(4)})
    CHECK(hom_count_orientable(g, 1) == Integer(g.order) * Integer(conjugacy_classes(g).size()));
}

TEST_CASE("group JSON round trip") {
  auto q8 = quaternion8();
  auto back = group_from_json(group_to_json(q8));
  CHECK(back.order == q8.order);
  CHECK(back.table == q8.table);
  CHECK(back.identity == q8.identity);
  CHECK(back.name == q8.name);
}
