#include "vnw/maps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vnw::maps {

namespace {

std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

// Signed darts encode a side: id = 2*dart + (side == minus).
inline int enc(int dart, bool minus) { return 2 * dart + (minus ? 1 : 0); }
inline int dart_of(int s) { return s >> 1; }
inline bool minus_of(int s) { return s & 1; }
inline int mirror(int s) { return s ^ 1; }

struct SignedMap {
  const MapGraph& g;
  std::vector<int> sigma_inv;

  explicit SignedMap(const MapGraph& graph) : g(graph), sigma_inv(inverse_permutation(graph.sigma)) {}

  // signed rotation: (d, s) -> (sigma^s(d), s)
  int rho(int x) const {
    int d = dart_of(x);
    return enc(minus_of(x) ? sigma_inv[d] : g.sigma[d], minus_of(x));
  }
  // signed edge step: (d, s) -> (alpha(d), s * (-1)^twist)
  int eps(int x) const {
    int d = dart_of(x);
    bool m = minus_of(x) ^ (g.twist[d] != 0);
    return enc(g.alpha[d], m);
  }
  // face permutation of the orientation double cover
  int psi(int x) const { return rho(eps(x)); }
  // reversal involution pairing the two traversals of each face
  int rev(int x) const {
    int d = dart_of(x);
    bool m = !(minus_of(x) ^ (g.twist[d] != 0));
    return enc(g.alpha[d], m);
  }
};

}  // namespace

MapGraph make_graph(int darts, std::vector<int> sigma, std::vector<int> alpha,
                    const std::vector<std::pair<int, int>>& twist_by_edge, Mode mode) {
  if (darts < 0 || darts % 2 != 0) throw std::invalid_argument("dart count must be even");
  if (static_cast<int>(sigma.size()) != darts || static_cast<int>(alpha.size()) != darts)
    throw std::invalid_argument("sigma/alpha size mismatch");
  std::vector<bool> seen(darts, false);
  for (int x : sigma) {
    if (x < 0 || x >= darts || seen[x]) throw std::invalid_argument("sigma is not a permutation");
    seen[x] = true;
  }
  for (int x = 0; x < darts; ++x) {
    int y = alpha[x];
    if (y < 0 || y >= darts || y == x || alpha[y] != x)
      throw std::invalid_argument("alpha is not a fixed-point-free involution");
  }
  MapGraph g;
  g.darts = darts;
  g.sigma = std::move(sigma);
  g.alpha = std::move(alpha);
  g.twist.assign(darts, 0);
  g.mode = mode;
  for (auto& [lower, t] : twist_by_edge) {
    if (lower < 0 || lower >= darts || g.alpha[lower] < lower)
      throw std::invalid_argument("twist must be keyed by the lower dart of an edge");
    if (t != 0 && t != 1) throw std::invalid_argument("twist colors are 0 or 1");
    g.twist[lower] = static_cast<std::uint8_t>(t);
    g.twist[g.alpha[lower]] = static_cast<std::uint8_t>(t);
  }
  if (mode == Mode::Ribbon)
    for (auto t : g.twist)
      if (t) throw std::invalid_argument("ribbon graphs carry no twists");
  return g;
}

std::vector<std::vector<int>> vertices(const MapGraph& g) {
  std::vector<bool> seen(g.darts, false);
  std::vector<std::vector<int>> out;
  for (int d = 0; d < g.darts; ++d) {
    if (seen[d]) continue;
    std::vector<int> cycle;
    int x = d;
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = g.sigma[x];
    } while (x != d);
    out.push_back(std::move(cycle));
  }
  return out;
}

int vertex_count(const MapGraph& g) {
  if (g.darts == 0) return 1;  // the dartless graph is a single vertex
  return static_cast<int>(vertices(g).size());
}

int edge_count(const MapGraph& g) { return g.darts / 2; }

bool is_connected(const MapGraph& g) {
  if (g.darts == 0) return true;
  std::vector<bool> seen(g.darts, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {g.sigma[x], g.alpha[x]})
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == g.darts;
}

std::vector<std::vector<int>> faces(const MapGraph& g) {
  if (g.darts == 0) return {{}};
  SignedMap sm(g);
  const int n = 2 * g.darts;
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int s = 0; s < n; ++s) {
    if (orbit_of[s] >= 0) continue;
    std::vector<int> orb;
    int x = s;
    do {
      orbit_of[x] = static_cast<int>(orbits.size());
      orb.push_back(x);
      x = sm.psi(x);
    } while (x != s);
    orbits.push_back(std::move(orb));
  }
  // Each face is traversed twice; rev maps a traversal orbit to its partner.
  std::vector<bool> used(orbits.size(), false);
  std::vector<std::vector<int>> walks;
  for (size_t o = 0; o < orbits.size(); ++o) {
    if (used[o]) continue;
    used[o] = true;
    size_t partner = static_cast<size_t>(orbit_of[sm.rev(orbits[o][0])]);
    if (partner != o && !used[partner]) {
      used[partner] = true;
    } else if (partner == o) {
      // palindromic traversal; pair with the next self-paired orbit
      for (size_t q = o + 1; q < orbits.size(); ++q) {
        if (!used[q] && static_cast<size_t>(orbit_of[sm.rev(orbits[q][0])]) == q) {
          used[q] = true;
          break;
        }
      }
    }
    std::vector<int> walk;
    walk.reserve(orbits[o].size());
    for (int x : orbits[o]) walk.push_back(dart_of(x));
    walks.push_back(std::move(walk));
  }
  return walks;
}

int face_count(const MapGraph& g) { return static_cast<int>(faces(g).size()); }

TopType topological_type(const MapGraph& g) {
  if (g.darts == 0) return TopType{true, 0, 1};
  if (!is_connected(g)) throw std::invalid_argument("topological_type: graph is disconnected");

  auto verts = vertices(g);
  const int v = static_cast<int>(verts.size());
  std::vector<int> vertex_of(g.darts);
  for (int i = 0; i < v; ++i)
    for (int d : verts[i]) vertex_of[d] = i;

  // Spanning-tree flip reduction: eta[w] records whether vertex w is flipped.
  // A non-loop edge keeps color twist ^ eta(u) ^ eta(w); loops never change.
  std::vector<int> eta(v, -1);
  eta[0] = 0;
  std::vector<int> queue{0};
  std::vector<std::pair<int, int>> non_tree;  // lower dart, for the final scan
  std::vector<bool> edge_done(g.darts, false);
  bool orientable = true;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int d : verts[u]) {
      int e = std::min(d, g.alpha[d]);
      if (edge_done[e]) continue;
      edge_done[e] = true;
      int w = vertex_of[g.alpha[d]];
      if (w == u) {
        if (g.twist[d]) orientable = false;  // twisted loop
        continue;
      }
      if (eta[w] < 0) {
        eta[w] = eta[u] ^ (g.twist[d] ? 1 : 0);
        queue.push_back(w);
      } else {
        non_tree.emplace_back(d, w);
      }
    }
  }
  for (auto& [d, w] : non_tree)
    if ((g.twist[d] ? 1 : 0) ^ eta[vertex_of[d]] ^ eta[w]) orientable = false;

  const int e = edge_count(g);
  const int f = face_count(g);
  const int chi = v - e + f;
  TopType t;
  t.faces = f;
  t.orientable = orientable;
  if (orientable) {
    if ((2 - chi) % 2 != 0 || chi > 2)
      throw std::logic_error("inconsistent Euler characteristic for orientable surface");
    t.genus_or_crosscaps = (2 - chi) / 2;
  } else {
    if (chi > 1) throw std::logic_error("inconsistent Euler characteristic for cross-caps");
    t.genus_or_crosscaps = 2 - chi;
  }
  return t;
}

MapGraph flip_vertex(const MapGraph& g, int vertex_index) {
  if (g.mode != Mode::Moebius)
    throw std::invalid_argument("flip_vertex requires a Moebius-mode graph");
  auto verts = vertices(g);
  if (vertex_index < 0 || vertex_index >= static_cast<int>(verts.size()))
    throw std::invalid_argument("flip_vertex: no such vertex");
  const auto& cycle = verts[vertex_index];
  std::vector<bool> at_vertex(g.darts, false);
  for (int d : cycle) at_vertex[d] = true;

  MapGraph out = g;
  const int m = static_cast<int>(cycle.size());
  for (int i = 0; i < m; ++i) out.sigma[cycle[i]] = cycle[(i - 1 + m) % m];
  for (int d : cycle) {
    int o = g.alpha[d];
    if (at_vertex[o]) continue;  // loops keep their twist
    out.twist[d] ^= 1;
    out.twist[o] ^= 1;
  }
  return out;
}

MapGraph contract_edge(const MapGraph& g, int edge_dart) {
  if (edge_dart < 0 || edge_dart >= g.darts) throw std::invalid_argument("no such dart");
  int d1 = edge_dart, d2 = g.alpha[edge_dart];

  auto verts = vertices(g);
  std::vector<int> vertex_of(g.darts);
  for (size_t i = 0; i < verts.size(); ++i)
    for (int d : verts[i]) vertex_of[d] = static_cast<int>(i);
  if (vertex_of[d1] == vertex_of[d2])
    throw std::invalid_argument("contract_edge: loop edges cannot be contracted");

  MapGraph work = g;
  if (g.twist[d1]) {
    // untwist by flipping the endpoint holding the larger dart
    work = flip_vertex(work, vertex_of[std::max(d1, d2)]);
    if (work.twist[d1]) throw std::logic_error("flip failed to untwist a non-loop edge");
  }

  auto sigma_inv = inverse_permutation(work.sigma);
  int p1 = sigma_inv[d1], n1 = work.sigma[d1];
  int p2 = sigma_inv[d2], n2 = work.sigma[d2];
  if (n1 == d1 && n2 == d2) {
    // both endpoints univalent: contracting leaves the dartless graph
  } else if (n1 == d1) {
    work.sigma[p2] = n2;
  } else if (n2 == d2) {
    work.sigma[p1] = n1;
  } else {
    work.sigma[p1] = n2;
    work.sigma[p2] = n1;
  }

  std::vector<int> remap(g.darts, -1);
  int next = 0;
  for (int d = 0; d < g.darts; ++d)
    if (d != d1 && d != d2) remap[d] = next++;
  MapGraph out;
  out.darts = next;
  out.mode = g.mode;
  out.sigma.resize(next);
  out.alpha.resize(next);
  out.twist.resize(next);
  for (int d = 0; d < g.darts; ++d) {
    if (remap[d] < 0) continue;
    out.sigma[remap[d]] = remap[work.sigma[d]];
    out.alpha[remap[d]] = remap[work.alpha[d]];
    out.twist[remap[d]] = work.twist[d];
  }
  return out;
}

long aut_order_ribbon(const MapGraph& g) {
  if (g.darts == 0) return 1;
  if (!is_connected(g)) throw std::invalid_argument("aut_order_ribbon: disconnected graph");
  for (auto t : g.twist)
    if (t) throw std::invalid_argument("aut_order_ribbon: graph carries twists");
  long count = 0;
  std::vector<int> img(g.darts);
  std::vector<int> stack;
  for (int c = 0; c < g.darts; ++c) {
    std::fill(img.begin(), img.end(), -1);
    img[0] = c;
    stack.assign(1, 0);
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, fy] : {std::pair{g.sigma[x], g.sigma[img[x]]},
                           std::pair{g.alpha[x], g.alpha[img[x]]}}) {
        if (img[y] < 0) {
          img[y] = fy;
          stack.push_back(y);
        } else if (img[y] != fy) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<bool> hit(g.darts, false);
    for (int x = 0; x < g.darts && ok; ++x) {
      if (img[x] < 0 || hit[img[x]]) ok = false;
      else hit[img[x]] = true;
    }
    if (ok) ++count;
  }
  return count;
}

long aut_order_moebius(const MapGraph& g) {
  if (g.darts == 0) return 1;
  if (!is_connected(g)) throw std::invalid_argument("aut_order_moebius: disconnected graph");
  SignedMap sm(g);
  const int n = 2 * g.darts;
  auto srho = [&](int x) { return sm.rho(x); };
  auto seps = [&](int x) { return sm.eps(x); };

  long count = 0;
  std::vector<int> img(n);
  std::vector<int> stack;
  for (int c = 0; c < n; ++c) {
    std::fill(img.begin(), img.end(), -1);
    img[0] = c;  // base signed dart (0, +)
    stack.assign(1, 0);
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, fy] : {std::pair{srho(x), srho(img[x])}, std::pair{seps(x), seps(img[x])}}) {
        if (img[y] < 0) {
          img[y] = fy;
          stack.push_back(y);
        } else if (img[y] != fy) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    // extend across the side swap, then verify everything
    for (int x = 0; x < n; ++x)
      if (img[x] < 0 && img[mirror(x)] >= 0) img[x] = mirror(img[mirror(x)]);
    for (int x = 0; x < n && ok; ++x) {
      if (img[x] < 0) ok = false;
      else
        ok = img[srho(x)] == srho(img[x]) && img[seps(x)] == seps(img[x]) &&
             img[mirror(x)] == mirror(img[x]);
    }
    if (!ok) continue;
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n && ok; ++x) {
      if (hit[img[x]]) ok = false;
      else hit[img[x]] = true;
    }
    if (ok) ++count;
  }
  return count;
}

Integer aut_order(const MapGraph& g, Mode mode) {
  auto comps = components(g);
  std::map<std::string, std::pair<long, long>> by_key;  // key -> (multiplicity, aut)
  for (auto& c : comps) {
    std::string key = canonical_key(c, mode);
    auto it = by_key.find(key);
    if (it == by_key.end()) {
      long a = mode == Mode::Ribbon ? aut_order_ribbon(c) : aut_order_moebius(c);
      by_key.emplace(std::move(key), std::pair{1L, a});
    } else {
      ++it->second.first;
    }
  }
  Integer total = 1;
  for (auto& [key, ma] : by_key) {
    total *= factorial(static_cast<unsigned long>(ma.first));
    for (long i = 0; i < ma.first; ++i) total *= ma.second;
  }
  return total;
}

MapGraph standard_orientable(int genus, int nfaces, Mode mode) {
  if (genus < 0 || nfaces < 1) throw std::invalid_argument("standard_orientable: bad type");
  if (genus == 0 && nfaces == 1)
    throw std::invalid_argument("standard_orientable: (0,1) has no one-vertex representative");
  const int d = 4 * genus + 2 * (nfaces - 1);
  std::vector<int> sigma(d), alpha(d);
  for (int i = 0; i < d; ++i) sigma[i] = (i + 1) % d;
  for (int h = 0; h < genus; ++h) {
    alpha[4 * h] = 4 * h + 2;
    alpha[4 * h + 2] = 4 * h;
    alpha[4 * h + 1] = 4 * h + 3;
    alpha[4 * h + 3] = 4 * h + 1;
  }
  for (int t = 0; t < nfaces - 1; ++t) {
    alpha[4 * genus + 2 * t] = 4 * genus + 2 * t + 1;
    alpha[4 * genus + 2 * t + 1] = 4 * genus + 2 * t;
  }
  return make_graph(d, std::move(sigma), std::move(alpha), {}, mode);
}

MapGraph standard_nonorientable(int crosscaps, int nfaces) {
  if (crosscaps < 1 || nfaces < 1) throw std::invalid_argument("standard_nonorientable: bad type");
  const int d = 2 * crosscaps + 2 * (nfaces - 1);
  std::vector<int> sigma(d), alpha(d);
  for (int i = 0; i < d; ++i) sigma[i] = (i + 1) % d;
  std::vector<std::pair<int, int>> twists;
  for (int i = 0; i < crosscaps + nfaces - 1; ++i) {
    alpha[2 * i] = 2 * i + 1;
    alpha[2 * i + 1] = 2 * i;
    if (i < crosscaps) twists.emplace_back(2 * i, 1);
  }
  return make_graph(d, std::move(sigma), std::move(alpha), twists, Mode::Moebius);
}

std::vector<MapGraph> components(const MapGraph& g) {
  if (g.darts == 0) return {g};
  std::vector<int> comp(g.darts, -1);
  int ncomp = 0;
  for (int d = 0; d < g.darts; ++d) {
    if (comp[d] >= 0) continue;
    std::vector<int> stack{d};
    comp[d] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : {g.sigma[x], g.alpha[x]})
        if (comp[y] < 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  if (ncomp == 1) return {g};
  std::vector<std::vector<int>> darts_of(ncomp);
  for (int d = 0; d < g.darts; ++d) darts_of[comp[d]].push_back(d);
  std::vector<MapGraph> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> remap(g.darts, -1);
    for (size_t i = 0; i < darts_of[c].size(); ++i) remap[darts_of[c][i]] = static_cast<int>(i);
    MapGraph sub;
    sub.darts = static_cast<int>(darts_of[c].size());
    sub.mode = g.mode;
    sub.sigma.resize(sub.darts);
    sub.alpha.resize(sub.darts);
    sub.twist.resize(sub.darts);
    for (int d : darts_of[c]) {
      sub.sigma[remap[d]] = remap[g.sigma[d]];
      sub.alpha[remap[d]] = remap[g.alpha[d]];
      sub.twist[remap[d]] = g.twist[d];
    }
    out.push_back(std::move(sub));
  }
  return out;
}

int dart_total(const std::vector<int>& degree_sequence) {
  int total = 0;
  for (size_t j = 0; j < degree_sequence.size(); ++j)
    total += static_cast<int>(j + 1) * degree_sequence[j];
  return total;
}

std::vector<int> configuration_sigma(const std::vector<int>& degree_sequence) {
  std::vector<int> sigma;
  int start = 0;
  for (size_t j = 0; j < degree_sequence.size(); ++j) {
    const int val = static_cast<int>(j + 1);
    for (int rep = 0; rep < degree_sequence[j]; ++rep) {
      sigma.resize(start + val);
      for (int t = 0; t < val; ++t) sigma[start + t] = start + (t + 1) % val;
      start += val;
    }
  }
  return sigma;
}

MapGraph configuration_graph(const Configuration& c, Mode mode) {
  std::vector<int> sigma = configuration_sigma(c.degree_sequence);
  const int d = static_cast<int>(sigma.size());
  std::vector<std::pair<int, int>> twists;
  int e = 0;
  for (int x = 0; x < d; ++x)
    if (c.alpha[x] > x) {
      if (!c.twist_by_edge.empty() && c.twist_by_edge[e]) twists.emplace_back(x, 1);
      ++e;
    }
  return make_graph(d, std::move(sigma), c.alpha, twists, mode);
}

void enumerate_configurations(const std::vector<int>& degree_sequence, bool with_twists,
                              const std::function<void(const Configuration&)>& fn) {
  const int d = dart_total(degree_sequence);
  if (d % 2 != 0) return;
  const int e = d / 2;
  Configuration c;
  c.degree_sequence = degree_sequence;
  c.alpha.assign(d, -1);

  auto emit = [&]() {
    if (!with_twists) {
      c.twist_by_edge.clear();
      fn(c);
      return;
    }
    c.twist_by_edge.assign(e, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
      for (int i = 0; i < e; ++i) c.twist_by_edge[i] = (mask >> i) & 1;
      fn(c);
    }
  };

  // pair the smallest unmatched dart first
  auto rec = [&](auto&& self, int matched) -> void {
    if (matched == d) {
      emit();
      return;
    }
    int a = 0;
    while (c.alpha[a] >= 0) ++a;
    for (int b = a + 1; b < d; ++b) {
      if (c.alpha[b] >= 0) continue;
      c.alpha[a] = b;
      c.alpha[b] = a;
      self(self, matched + 2);
      c.alpha[a] = -1;
      c.alpha[b] = -1;
    }
  };
  if (d > 0)
    rec(rec, 0);
  else
    emit();  // empty degree sequence: one empty configuration
}

namespace {

std::string canonical_connected_ribbon(const MapGraph& g) {
  const int d = g.darts;
  std::string best;
  std::vector<int> num(d), order(d);
  for (int base = 0; base < d; ++base) {
    std::fill(num.begin(), num.end(), -1);
    num[base] = 0;
    order[0] = base;
    int next = 1;
    for (int i = 0; i < next; ++i) {
      int x = order[i];
      for (int y : {g.sigma[x], g.alpha[x]})
        if (num[y] < 0) {
          num[y] = next;
          order[next++] = y;
        }
    }
    std::string enc_str;
    enc_str.reserve(static_cast<size_t>(d) * 2);
    for (int i = 0; i < d; ++i) {
      int x = order[i];
      enc_str.push_back(static_cast<char>(num[g.sigma[x]]));
      enc_str.push_back(static_cast<char>(num[g.alpha[x]]));
    }
    if (best.empty() || enc_str < best) best = std::move(enc_str);
  }
  return best;
}

std::string canonical_connected_moebius(const MapGraph& g) {
  SignedMap sm(g);
  const int n = 2 * g.darts;
  std::string best;
  std::vector<int> num(n), order(n);
  for (int base = 0; base < n; ++base) {
    std::fill(num.begin(), num.end(), -1);
    num[base] = 0;
    order[0] = base;
    int next = 1;
    for (int i = 0; i < next; ++i) {
      int x = order[i];
      for (int y : {sm.rho(x), sm.eps(x)})
        if (num[y] < 0) {
          num[y] = next;
          order[next++] = y;
        }
    }
    std::string enc_str;
    enc_str.reserve(static_cast<size_t>(next) * 3);
    for (int i = 0; i < next; ++i) {
      int x = order[i];
      enc_str.push_back(static_cast<char>(num[sm.rho(x)]));
      enc_str.push_back(static_cast<char>(num[sm.eps(x)]));
      int m = num[mirror(x)];
      enc_str.push_back(m < 0 ? static_cast<char>(0x7e) : static_cast<char>(m));
    }
    if (best.empty() || enc_str < best) best = std::move(enc_str);
  }
  return best;
}

}  // namespace

std::string canonical_key(const MapGraph& g, Mode mode) {
  if (g.darts == 0) return "()";
  auto comps = components(g);
  std::vector<std::string> keys;
  keys.reserve(comps.size());
  for (auto& c : comps)
    keys.push_back(mode == Mode::Ribbon ? canonical_connected_ribbon(c)
                                        : canonical_connected_moebius(c));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (auto& k : keys) {
    out += k;
    out.push_back('/');
  }
  return out;
}

std::vector<ClassEntry> classify(const std::vector<int>& degree_sequence, Mode mode) {
  std::map<std::string, ClassEntry> classes;
  enumerate_configurations(degree_sequence, mode == Mode::Moebius, [&](const Configuration& c) {
    MapGraph g = configuration_graph(c, mode);
    std::string key = canonical_key(g, mode);
    auto it = classes.find(key);
    if (it == classes.end()) {
      ClassEntry entry;
      entry.representative = c;
      entry.key = key;
      entry.labeled_count = 1;
      entry.connected = is_connected(g);
      classes.emplace(std::move(key), std::move(entry));
    } else {
      ++it->second.labeled_count;
    }
  });
  std::vector<ClassEntry> out;
  out.reserve(classes.size());
  for (auto& [key, entry] : classes) out.push_back(std::move(entry));
  return out;
}

std::string graph_to_json(const MapGraph& g) {
  nlohmann::json j;
  j["darts"] = g.darts;
  j["sigma"] = g.sigma;
  j["alpha"] = g.alpha;
  auto tw = nlohmann::json::object();
  for (int d = 0; d < g.darts; ++d)
    if (d < g.alpha[d] && g.twist[d]) tw[std::to_string(d)] = 1;
  j["twist"] = std::move(tw);
  j["mode"] = g.mode == Mode::Ribbon ? "ribbon" : "moebius";
  return j.dump(2);
}

MapGraph graph_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const int darts = j.at("darts").get<int>();
  auto sigma = j.at("sigma").get<std::vector<int>>();
  auto alpha = j.at("alpha").get<std::vector<int>>();
  const std::string mode_name = j.value("mode", std::string("ribbon"));
  Mode mode;
  if (mode_name == "ribbon")
    mode = Mode::Ribbon;
  else if (mode_name == "moebius")
    mode = Mode::Moebius;
  else
    throw std::invalid_argument("graph JSON: mode must be \"ribbon\" or \"moebius\"");
  std::vector<std::pair<int, int>> twists;
  if (j.contains("twist"))
    for (auto& [key, val] : j["twist"].items())
      twists.emplace_back(std::stoi(key), val.get<int>());
  return make_graph(darts, std::move(sigma), std::move(alpha), twists, mode);
}

}  // namespace vnw::maps
