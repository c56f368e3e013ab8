#include "vnw/wick.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace vnw::wick {

using algebra::Element;
using algebra::StarAlgebra;

namespace {

struct PairingEdge {
  int first_dart = 0;
  int second_dart = 0;
  bool straight = true;
  bool twisted = false;
};

/// Contracts vertex trace words against edge tensors. Darts are processed
/// vertex by vertex; an edge whose first dart is reached opens a tensor leg
/// b_j^* (one state per basis index j), and closing it sums
/// (G^-1)_{jk} b_k (straight) and/or (G^-1)_{jk} b_k^* (twisted) into the
/// word. Open legs are carried as bytes of the state key.
class Contractor {
 public:
  explicit Contractor(const StarAlgebra& a) : a_(a), w_(algebra::gram_inverse(a)) {
    if (a.dim > 255) throw std::invalid_argument("algebra too large for contraction keys");
    w_rows_.resize(a.dim);
    for (int j = 0; j < a_.dim; ++j)
      for (int k = 0; k < a_.dim; ++k)
        if (!w_[j][k].is_zero()) w_rows_[j].emplace_back(k, w_[j][k]);
  }

  Scalar run(const std::vector<std::vector<int>>& vertex_words,
             const std::vector<PairingEdge>& edges) const {
    int total_darts = 0;
    for (auto& vw : vertex_words) total_darts += static_cast<int>(vw.size());
    std::vector<int> edge_of(total_darts, -1);
    std::vector<bool> opens(total_darts, false);
    for (size_t e = 0; e < edges.size(); ++e) {
      edge_of[edges[e].first_dart] = static_cast<int>(e);
      edge_of[edges[e].second_dart] = static_cast<int>(e);
      opens[edges[e].first_dart] = true;
    }
    {
      // a state key holds one byte per simultaneously open edge
      int open = 0, peak = 0;
      for (auto& vw : vertex_words)
        for (int dart : vw) {
          open += opens[dart] ? 1 : -1;
          peak = std::max(peak, open);
        }
      if (peak > 8) throw std::invalid_argument("contraction: more than 8 open edges");
    }

    std::unordered_map<std::uint64_t, Element> states;
    states.emplace(0, a_.unit);
    std::vector<int> open_edges;

    auto accumulate = [](std::unordered_map<std::uint64_t, Element>& m, std::uint64_t key,
                         const Element& e) {
      auto [it, inserted] = m.try_emplace(key, e);
      if (!inserted) it->second = algebra::add(std::move(it->second), e);
    };

    for (const auto& word : vertex_words) {
      for (int dart : word) {
        const int e = edge_of[dart];
        const auto& edge = edges[e];
        std::unordered_map<std::uint64_t, Element> next;
        next.reserve(states.size() * (opens[dart] ? a_.dim : 1));
        if (opens[dart]) {
          const int slot = static_cast<int>(open_edges.size());
          for (auto& [key, elem] : states) {
            for (int j = 0; j < a_.dim; ++j) {
              Element e2 = algebra::mul(a_, elem, a_.star_elements[j]);
              if (algebra::is_zero(e2)) continue;
              accumulate(next, key | (static_cast<std::uint64_t>(j) << (8 * slot)), e2);
            }
          }
          open_edges.push_back(e);
        } else {
          const int slot = static_cast<int>(
              std::find(open_edges.begin(), open_edges.end(), e) - open_edges.begin());
          const std::uint64_t low_mask = (std::uint64_t{1} << (8 * slot)) - 1;
          for (auto& [key, elem] : states) {
            const int j = static_cast<int>((key >> (8 * slot)) & 0xFF);
            Element closed = algebra::zero_element(a_);
            for (auto& [k, wjk] : w_rows_[j]) {
              if (edge.straight)
                closed = algebra::add(std::move(closed),
                                      algebra::scale(algebra::mul_basis(a_, elem, k), wjk));
              if (edge.twisted)
                closed = algebra::add(
                    std::move(closed),
                    algebra::scale(algebra::mul(a_, elem, a_.star_elements[k]), wjk));
            }
            if (algebra::is_zero(closed)) continue;
            const std::uint64_t high = slot + 1 < 8 ? key >> (8 * (slot + 1)) : 0;
            accumulate(next, (key & low_mask) | (high << (8 * slot)), closed);
          }
          open_edges.erase(open_edges.begin() + slot);
        }
        states = std::move(next);
        if (states.empty()) return Scalar(0);
      }
      // vertex complete: fold its trace and restart the word from the unit
      std::unordered_map<std::uint64_t, Element> folded;
      folded.reserve(states.size());
      for (auto& [key, elem] : states) {
        Scalar t = algebra::trace_of(a_, elem);
        if (t.is_zero()) continue;
        accumulate(folded, key, algebra::scale(a_.unit, t));
      }
      states = std::move(folded);
      if (states.empty()) return Scalar(0);
    }

    auto it = states.find(0);
    if (it == states.end()) return Scalar(0);
    return algebra::trace_of(a_, it->second);
  }

 private:
  const StarAlgebra& a_;
  const std::vector<std::vector<Scalar>>& w_;
  std::vector<std::vector<std::pair<int, Scalar>>> w_rows_;
};

std::vector<std::vector<int>> moment_vertex_words(const std::vector<int>& degrees) {
  std::vector<std::vector<int>> words;
  int dart = 0;
  for (size_t j = 0; j < degrees.size(); ++j)
    for (int rep = 0; rep < degrees[j]; ++rep) {
      std::vector<int> w(j + 1);
      for (size_t t = 0; t <= j; ++t) w[t] = dart++;
      words.push_back(std::move(w));
    }
  return words;
}

struct CacheKey {
  std::uint64_t algebra;
  std::string detail;

  bool operator<(const CacheKey& o) const {
    return algebra != o.algebra ? algebra < o.algebra : detail < o.detail;
  }
};

Scalar cached(const CacheKey& key, const std::function<Scalar()>& compute) {
  static std::map<CacheKey, Scalar> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Scalar value = compute();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

EdgeTensor edge_tensor(const StarAlgebra& a, EdgeKind kind) {
  if (kind == EdgeKind::Twisted && a.field != algebra::Field::Real)
    throw std::invalid_argument("twisted edge tensors require a real algebra");
  return EdgeTensor{kind, algebra::gram_inverse(a)};
}

Scalar gaussian_moment(const StarAlgebra& a, const MomentSpec& m) {
  if (m.field != a.field) throw std::invalid_argument("gaussian_moment: field case mismatch");
  for (int v : m.degrees)
    if (v < 0) throw std::invalid_argument("gaussian_moment: negative multiplicity");
  const int total = maps::dart_total(m.degrees);
  if (total % 2 != 0) return Scalar(0);
  if (total == 0) return Scalar(1);

  const bool real_case = a.field == algebra::Field::Real;
  const Contractor contractor(a);
  const auto words = moment_vertex_words(m.degrees);

  Scalar sum(0);
  maps::enumerate_configurations(m.degrees, /*with_twists=*/false,
                                 [&](const maps::Configuration& c) {
    std::vector<PairingEdge> edges;
    edges.reserve(total / 2);
    for (int x = 0; x < total; ++x)
      if (c.alpha[x] > x) edges.push_back(PairingEdge{x, c.alpha[x], true, real_case});
    sum += contractor.run(words, edges);
  });
  return sum;
}

Scalar graph_contribution(const StarAlgebra& a, const maps::MapGraph& g) {
  bool any_twist = std::any_of(g.twist.begin(), g.twist.end(), [](auto t) { return t != 0; });
  if (any_twist && a.field != algebra::Field::Real)
    throw std::invalid_argument("graph_contribution: twisted edge over a complex algebra");

  CacheKey key{a.fingerprint, std::string(g.mode == maps::Mode::Ribbon ? "r:" : "m:") +
                                  maps::canonical_key(g, g.mode)};
  return cached(key, [&]() {
    if (g.darts == 0) return algebra::trace_of(a, a.unit);
    auto words = maps::vertices(g);
    std::vector<int> position(g.darts);
    int pos = 0;
    for (auto& w : words)
      for (int d : w) position[d] = pos++;
    std::vector<PairingEdge> edges;
    edges.reserve(g.darts / 2);
    for (int x = 0; x < g.darts; ++x) {
      int y = g.alpha[x];
      if (y < x) continue;
      PairingEdge e;
      bool tw = g.twist[x] != 0;
      e.straight = !tw;
      e.twisted = tw;
      if (position[x] <= position[y]) {
        e.first_dart = x;
        e.second_dart = y;
      } else {
        e.first_dart = y;
        e.second_dart = x;
      }
      edges.push_back(e);
    }
    return Contractor(a).run(words, edges);
  });
}

Scalar closed_form_or(const StarAlgebra& a, int genus, int nfaces) {
  if (genus < 0 || nfaces < 1) throw std::invalid_argument("closed_form_or: bad type");
  CacheKey key{a.fingerprint, "or:" + std::to_string(genus) + "," + std::to_string(nfaces)};
  return cached(key, [&]() {
    const auto& w = algebra::gram_inverse(a);
    // tadpole: sum w_jk b_k b_j^*
    Element tadpole = algebra::zero_element(a);
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        if (w[j][k].is_zero()) continue;
        Element term = algebra::mul(a, algebra::basis_element(a, k), a.star_elements[j]);
        tadpole = algebra::add(std::move(tadpole), algebra::scale(std::move(term), w[j][k]));
      }
    // handle: sum w_{j1 k1} w_{j2 k2} b_{k1} b_{k2} b_{j1}^* b_{j2}^*
    Element handle = algebra::zero_element(a);
    for (int j1 = 0; j1 < a.dim; ++j1)
      for (int k1 = 0; k1 < a.dim; ++k1) {
        if (w[j1][k1].is_zero()) continue;
        for (int j2 = 0; j2 < a.dim; ++j2)
          for (int k2 = 0; k2 < a.dim; ++k2) {
            if (w[j2][k2].is_zero()) continue;
            Element term = algebra::mul_basis(a, algebra::basis_element(a, k1), k2);
            term = algebra::mul(a, term, a.star_elements[j1]);
            term = algebra::mul(a, term, a.star_elements[j2]);
            handle = algebra::add(std::move(handle),
                                  algebra::scale(std::move(term), w[j1][k1] * w[j2][k2]));
          }
      }
    Element acc = a.unit;
    for (int h = 0; h < genus; ++h) acc = algebra::mul(a, acc, handle);
    for (int t = 0; t < nfaces - 1; ++t) acc = algebra::mul(a, acc, tadpole);
    return algebra::trace_of(a, acc);
  });
}

Scalar closed_form_nor(const StarAlgebra& a, int crosscaps, int nfaces) {
  if (a.field != algebra::Field::Real)
    throw std::invalid_argument("closed_form_nor: real algebra required");
  if (crosscaps < 1 || nfaces < 1) throw std::invalid_argument("closed_form_nor: bad type");
  CacheKey key{a.fingerprint, "nor:" + std::to_string(crosscaps) + "," + std::to_string(nfaces)};
  return cached(key, [&]() {
    const auto& w = algebra::gram_inverse(a);
    Element tadpole = algebra::zero_element(a);
    Element cross = algebra::zero_element(a);
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        if (w[j][k].is_zero()) continue;
        Element st = algebra::mul(a, algebra::basis_element(a, k), a.star_elements[j]);
        tadpole = algebra::add(std::move(tadpole), algebra::scale(std::move(st), w[j][k]));
        Element tw = algebra::mul(a, a.star_elements[j], a.star_elements[k]);
        cross = algebra::add(std::move(cross), algebra::scale(std::move(tw), w[j][k]));
      }
    Element acc = a.unit;
    for (int c = 0; c < crosscaps; ++c) acc = algebra::mul(a, acc, cross);
    for (int t = 0; t < nfaces - 1; ++t) acc = algebra::mul(a, acc, tadpole);
    return algebra::trace_of(a, acc);
  });
}

series::TruncatedSeries series_wick(const StarAlgebra& a, int w) {
  if (w < 0) throw std::invalid_argument("series_wick: W >= 0 required");
  const bool real_case = a.field == algebra::Field::Real;
  series::TruncatedSeries s = series::series_zero(w);
  for (auto& v : series::multidegrees_up_to(w)) {
    Scalar moment = gaussian_moment(a, MomentSpec{v, a.field});
    if (moment.is_zero()) continue;
    Rational coeff(1);
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      long base = static_cast<long>(j + 1) * (real_case ? 2 : 1);
      coeff /= factorial(static_cast<unsigned long>(v[j]));
      coeff /= rational_pow(Rational(base), v[j]);
    }
    series::add_term(s, v, Scalar(coeff) * moment);
  }
  return s;
}

series::TruncatedSeries series_graph(const StarAlgebra& a, int w, bool connected_only) {
  if (w < 0) throw std::invalid_argument("series_graph: W >= 0 required");
  const maps::Mode mode =
      a.field == algebra::Field::Complex ? maps::Mode::Ribbon : maps::Mode::Moebius;
  series::TruncatedSeries s = series::series_zero(w);
  if (!connected_only) series::add_term(s, {}, Scalar(1));  // the empty graph
  for (auto& v : series::multidegrees_up_to(w)) {
    if (v.empty()) continue;
    for (auto& entry : maps::classify(v, mode)) {
      if (connected_only && !entry.connected) continue;
      maps::MapGraph g = maps::configuration_graph(entry.representative, mode);
      Scalar contrib = graph_contribution(a, g);
      if (contrib.is_zero()) continue;
      Integer aut = maps::aut_order(g, mode);
      series::add_term(s, v, contrib / Scalar(Rational(aut)));
    }
  }
  return s;
}

}  // namespace vnw::wick
