#pragma once

#include <string>
#include <vector>

#include "vnw/rational.hpp"

namespace vnw::groups {

/// A finite group given by its Cayley table. Element identifiers are
/// 0..order-1; table is row-major, mul(a,b) = table[a*order+b].
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;
  int identity = 0;
  std::vector<int> inverse;
  std::string name;

  int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
};

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);  // order 2n
FiniteGroup symmetric(int n);  // n <= 5
FiniteGroup alternating(int n);  // n <= 5
FiniteGroup quaternion8();
FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

/// Validates a raw table (identity, inverses, associativity; associativity is
/// checked on all triples for order <= 64 and on seeded samples above).
FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table, std::string name);

/// Resolves names like "Z6", "S4", "D4", "Q8", "A4", "Z2xZ2".
FiniteGroup build_group(const std::string& spec);

/// Conjugacy classes as element lists, ordered by least representative.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// Exact rational function on group elements, constant on conjugacy classes.
struct ClassFunction {
  std::vector<Rational> values;
};

bool is_class_function(const FiniteGroup& g, const ClassFunction& f);

/// d(c) = #{(a,b) : a b a^-1 b^-1 = c}
ClassFunction commutator_distribution(const FiniteGroup& g);

/// s(c) = #{a : a^2 = c}
ClassFunction square_distribution(const FiniteGroup& g);

/// (f * h)(c) = sum over uv = c of f(u) h(v)
ClassFunction convolve(const FiniteGroup& g, const ClassFunction& f, const ClassFunction& h);

/// |Hom(pi_1(S_g), G)| for the closed orientable surface of genus g >= 0.
Integer hom_count_orientable(const FiniteGroup& g, int genus);

/// |Hom(pi_1(S), G)| for the closed non-orientable surface with k >= 1 cross-caps.
Integer hom_count_nonorientable(const FiniteGroup& g, int crosscaps);

int element_order(const FiniteGroup& g, int a);
long exponent(const FiniteGroup& g);

std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text);

}  // namespace vnw::groups
