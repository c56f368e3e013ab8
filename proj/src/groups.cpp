#include "vnw/groups.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vnw::groups {

namespace {

FiniteGroup finish(std::vector<int> table, int order, std::string name) {
  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);
  g.name = std::move(name);

  // identity
  int id = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("Cayley table has no identity");
  g.identity = id;

  g.inverse.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (g.mul(a, b) == id && g.mul(b, a) == id) {
        g.inverse[a] = b;
        break;
      }
    }
    if (g.inverse[a] < 0) throw std::invalid_argument("element without inverse");
  }

  // associativity: all triples up to order 64, seeded samples above
  auto check = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw std::invalid_argument("Cayley table is not associative");
  };
  if (order <= 64) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (int t = 0; t < 200000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
  return g;
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

int perm_parity(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv & 1;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& elems, std::string name) {
  const int m = static_cast<int>(elems.size());
  const int n = static_cast<int>(elems[0].size());
  auto index_of = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || *it != p) throw std::logic_error("permutation set not closed");
    return static_cast<int>(it - elems.begin());
  };
  std::vector<int> table(static_cast<size_t>(m) * m);
  std::vector<int> fg(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) fg[x] = elems[a][elems[b][x]];  // (fg)(x) = f(g(x))
      table[static_cast<size_t>(a) * m + b] = index_of(fg);
    }
  return finish(std::move(table), m, std::move(name));
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n >= 1 required");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return finish(std::move(table), n, "Z" + std::to_string(n));
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n >= 1 required");
  const int m = 2 * n;
  // 0..n-1 rotations r^a, n..2n-1 reflections s r^a
  auto mul = [&](int x, int y) {
    bool xr = x >= n, yr = y >= n;
    int a = xr ? x - n : x, b = yr ? y - n : y;
    if (!xr && !yr) return (a + b) % n;
    if (!xr && yr) return n + (b - a + n) % n;   // r^a s r^b = s r^{b-a}
    if (xr && !yr) return n + (a + b) % n;       // s r^a r^b = s r^{a+b}
    return (b - a + n) % n;                      // s r^a s r^b = r^{b-a}
  };
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) table[static_cast<size_t>(x) * m + y] = mul(x, y);
  return finish(std::move(table), m, "D" + std::to_string(n));
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric: 1 <= n <= 5 required");
  return permutation_group(permutations_of(n), "S" + std::to_string(n));
}

FiniteGroup alternating(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("alternating: 1 <= n <= 5 required");
  std::vector<std::vector<int>> evens;
  for (auto& p : permutations_of(n))
    if (perm_parity(p) == 0) evens.push_back(p);
  return permutation_group(evens, "A" + std::to_string(n));
}

FiniteGroup quaternion8() {
  // 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k
  auto neg = [](int x) { return x ^ 1; };
  auto base = [](int x) { return x >> 1; };  // 0:1 1:i 2:j 3:k
  // unit quaternion products with sign, on {1,i,j,k}
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int bx = base(x), by = base(y);
      int r = idx[bx][by] << 1;
      int s = sgn[bx][by];
      if (x & 1) s = -s;
      if (y & 1) s = -s;
      table[static_cast<size_t>(x) * 8 + y] = s > 0 ? r : neg(r);
    }
  return finish(std::move(table), 8, "Q8");
}

FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
  const int m = a.order * b.order;
  std::vector<int> table(static_cast<size_t>(m) * m);
  auto enc = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          table[static_cast<size_t>(enc(x1, y1)) * m + enc(x2, y2)] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
  return finish(std::move(table), m, a.name + "x" + b.name);
}

FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged Cayley table");
    for (int v : row) {
      if (v < 0 || v >= n) throw std::invalid_argument("Cayley table entry out of range");
      flat.push_back(v);
    }
  }
  return finish(std::move(flat), n, std::move(name));
}

FiniteGroup build_group(const std::string& spec) {
  auto cross = spec.find('x');
  if (cross != std::string::npos)
    return product(build_group(spec.substr(0, cross)), build_group(spec.substr(cross + 1)));
  if (spec == "Q8") return quaternion8();
  if (spec.size() >= 2) {
    char kind = spec[0];
    const std::string digits = spec.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      int n = std::stoi(digits);
      switch (kind) {
        case 'Z': return cyclic(n);
        case 'D': return dihedral(n);
        case 'S': return symmetric(n);
        case 'A': return alternating(n);
        default: break;
      }
    }
  }
  throw std::invalid_argument("unknown group name: " + spec);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(g.order, -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.order; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> orbit;
    for (int h = 0; h < g.order; ++h) {
      int y = g.mul(g.mul(h, x), g.inverse[h]);
      if (cls[y] < 0) {
        cls[y] = static_cast<int>(out.size());
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;  // ordered by least representative since x scans ascending
}

bool is_class_function(const FiniteGroup& g, const ClassFunction& f) {
  for (int x = 0; x < g.order; ++x)
    for (int h = 0; h < g.order; ++h)
      if (f.values[g.mul(g.mul(h, x), g.inverse[h])] != f.values[x]) return false;
  return true;
}

ClassFunction commutator_distribution(const FiniteGroup& g) {
  ClassFunction f;
  f.values.assign(g.order, Rational(0));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      int c = g.mul(g.mul(a, b), g.mul(g.inverse[a], g.inverse[b]));
      f.values[c] += 1;
    }
  return f;
}

ClassFunction square_distribution(const FiniteGroup& g) {
  ClassFunction f;
  f.values.assign(g.order, Rational(0));
  for (int a = 0; a < g.order; ++a) f.values[g.mul(a, a)] += 1;
  return f;
}

ClassFunction convolve(const FiniteGroup& g, const ClassFunction& f, const ClassFunction& h) {
  ClassFunction out;
  out.values.assign(g.order, Rational(0));
  for (int u = 0; u < g.order; ++u) {
    if (f.values[u] == 0) continue;
    for (int v = 0; v < g.order; ++v) {
      if (h.values[v] == 0) continue;
      out.values[g.mul(u, v)] += f.values[u] * h.values[v];
    }
  }
  return out;
}

namespace {

Integer as_integer(const Rational& r) {
  if (r.get_den() != 1) throw std::logic_error("count is not an integer");
  return r.get_num();
}

Integer convolution_power_at_identity(const FiniteGroup& g, const ClassFunction& f, int k) {
  if (k == 0) return 1;  // delta at identity, evaluated there
  ClassFunction acc = f;
  for (int i = 1; i < k; ++i) acc = convolve(g, acc, f);
  return as_integer(acc.values[g.identity]);
}

}  // namespace

Integer hom_count_orientable(const FiniteGroup& g, int genus) {
  if (genus < 0) throw std::invalid_argument("genus >= 0 required");
  return convolution_power_at_identity(g, commutator_distribution(g), genus);
}

Integer hom_count_nonorientable(const FiniteGroup& g, int crosscaps) {
  if (crosscaps < 1) throw std::invalid_argument("crosscaps >= 1 required");
  return convolution_power_at_identity(g, square_distribution(g), crosscaps);
}

int element_order(const FiniteGroup& g, int a) {
  int x = a, n = 1;
  while (x != g.identity) {
    x = g.mul(x, a);
    ++n;
  }
  return n;
}

long exponent(const FiniteGroup& g) {
  long ex = 1;
  for (int a = 0; a < g.order; ++a) ex = std::lcm(ex, static_cast<long>(element_order(g, a)));
  return ex;
}

std::string group_to_json(const FiniteGroup& g) {
  nlohmann::json j;
  j["order"] = g.order;
  auto rows = nlohmann::json::array();
  for (int a = 0; a < g.order; ++a) {
    auto row = nlohmann::json::array();
    for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["name"] = g.name;
  return j.dump(2);
}

FiniteGroup group_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const int n = j.at("order").get<int>();
  auto rows = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("group JSON: table size != order");
  std::string name = j.value("name", std::string("user"));
  return from_cayley_table(rows, std::move(name));
}

}  // namespace vnw::groups
