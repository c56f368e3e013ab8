#include "vnw/commands.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vnw/characters.hpp"
#include "vnw/series.hpp"
#include "vnw/wick.hpp"

namespace vnw::cli {

namespace {

using algebra::Field;
using algebra::StarAlgebra;
using maps::MapGraph;
using maps::Mode;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_file(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".json");
}

/// Deterministic PRNG, stable across platforms (splitmix64).
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> counter{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      for (int i = counter.fetch_add(1); i < n; i = counter.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::string vec_string(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string type_string(const maps::TopType& t) {
  return (t.orientable ? "or(" : "nor(") + std::to_string(t.genus_or_crosscaps) + "," +
         std::to_string(t.faces) + ")";
}

std::string graph_string(const MapGraph& g) {
  std::string s = "s=[";
  for (int i = 0; i < g.darts; ++i) s += (i ? " " : "") + std::to_string(g.sigma[i]);
  s += "] a=[";
  for (int i = 0; i < g.darts; ++i) s += (i ? " " : "") + std::to_string(g.alpha[i]);
  s += "] t=[";
  for (int i = 0; i < g.darts; ++i) s += (i ? " " : "") + std::to_string(int(g.twist[i]));
  return s + "]";
}

const std::vector<std::string> kWickAlgebras = {"M(1,C)", "M(2,C)", "C[Z2]", "C[S3]",
                                                "M(1,R)", "M(2,R)", "M(1,H)", "R[Z2]", "R[S3]"};
const std::vector<std::string> kIdentityGroups = {"Z2", "Z3", "Z4", "Z2xZ2", "S3",
                                                  "D4", "Q8", "A4", "S4"};
const std::vector<std::string> kInvarianceAlgebras = {"C[Z2]", "M(2,C)", "C[S3]",
                                                      "R[S3]", "M(1,H)", "M(2,R)"};

Rational integer_power(long base, long exp) { return rational_pow(Rational(base), exp); }

}  // namespace

groups::FiniteGroup resolve_group(const std::string& name_or_file) {
  if (looks_like_file(name_or_file)) return groups::group_from_json(read_file(name_or_file));
  return groups::build_group(name_or_file);
}

StarAlgebra resolve_algebra(const std::string& name_or_file, std::vector<std::string>* notes) {
  if (looks_like_file(name_or_file)) {
    StarAlgebra a = algebra::algebra_from_json(read_file(name_or_file));
    auto rep = algebra::check_star_trace_axioms(a);
    if (!rep.ok)
      throw std::invalid_argument("algebra " + name_or_file + " rejected: " + rep.first_violation);
    for (auto& n : rep.notes) {
      if (notes)
        notes->push_back(name_or_file + ": " + n);
      else
        std::cerr << "warning: " << name_or_file << ": " << n << "\n";
    }
    return a;
  }
  const std::string& s = name_or_file;
  // group algebras C[G], R[G]
  if (s.size() >= 4 && (s[0] == 'C' || s[0] == 'R') && s[1] == '[' && s.back() == ']') {
    auto g = resolve_group(s.substr(2, s.size() - 3));
    return algebra::build_group_algebra(g, s[0] == 'C' ? Field::Complex : Field::Real);
  }
  // matrix algebras M(n,C) / M(n,R) / M(n,H), or compact MnC
  auto make_matrix = [](char kind, int n) {
    switch (kind) {
      case 'C': return algebra::build_matrix_algebra(algebra::MatrixKind::Complex, n);
      case 'R': return algebra::build_matrix_algebra(algebra::MatrixKind::Real, n);
      case 'H': return algebra::build_matrix_algebra(algebra::MatrixKind::Quaternionic, n);
      default: throw std::invalid_argument("matrix algebra kind must be C, R or H");
    }
  };
  if (s.size() >= 6 && s.starts_with("M(") && s.back() == ')') {
    auto comma = s.find(',');
    if (comma != std::string::npos && comma + 2 == s.size() - 1)
      return make_matrix(s[comma + 1], std::stoi(s.substr(2, comma - 2)));
  }
  if (s.size() >= 3 && s[0] == 'M' && std::isdigit(static_cast<unsigned char>(s[1])))
    return make_matrix(s.back(), std::stoi(s.substr(1, s.size() - 2)));
  throw std::invalid_argument("unknown algebra name: " + name_or_file);
}

Report cmd_census(const CensusOptions& opt) {
  Report rep;
  std::vector<std::vector<int>> sequences;
  if (!opt.degree_sequence.empty()) {
    sequences.push_back(opt.degree_sequence);
    rep.command = "census v=" + vec_string(opt.degree_sequence);
  } else {
    if (opt.max_weighted_degree < 0)
      throw std::invalid_argument("census: give a degree sequence or --weighted-degree");
    for (auto& v : series::multidegrees_up_to(opt.max_weighted_degree))
      if (!v.empty()) sequences.push_back(v);
    rep.command = "census W=" + std::to_string(opt.max_weighted_degree);
  }
  rep.command += opt.mode == Mode::Ribbon ? " mode=ribbon" : " mode=moebius";
  for (auto& v : sequences)
    if (maps::dart_total(v) > opt.max_darts)
      throw std::invalid_argument("census: degree sequence " + vec_string(v) + " exceeds " +
                                  std::to_string(opt.max_darts) + " darts (--max-darts)");

  std::vector<std::vector<ReportRow>> batches(sequences.size());
  parallel_for(static_cast<int>(sequences.size()), opt.threads, [&](int i) {
    const auto& v = sequences[i];
    Integer group_order = 1;
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      group_order *= factorial(static_cast<unsigned long>(v[j]));
      long base = static_cast<long>(j + 1) * (opt.mode == Mode::Moebius ? 2 : 1);
      group_order *= integer_pow(Integer(base), static_cast<unsigned long>(v[j]));
    }
    for (auto& entry : maps::classify(v, opt.mode)) {
      MapGraph g = maps::configuration_graph(entry.representative, opt.mode);
      Integer aut = maps::aut_order(g, opt.mode);
      Integer expected = group_order / aut;
      ReportRow row;
      row.check = "orbit-stabilizer";
      row.inputs = "v=" + vec_string(v) + " " + graph_string(g) + " |Aut|=" + aut.get_str() +
                   " type=" +
                   (entry.connected ? type_string(maps::topological_type(g)) : "disconnected");
      row.expected = expected.get_str();
      row.computed = std::to_string(entry.labeled_count);
      row.pass = group_order == aut * Integer(static_cast<unsigned long>(entry.labeled_count));
      batches[i].push_back(std::move(row));
    }
  });
  for (auto& batch : batches)
    for (auto& row : batch) rep.rows.push_back(std::move(row));
  return rep;
}

Report verify_wick(const std::vector<std::string>& algebras, int max_weighted_degree,
                   int threads) {
  Report rep;
  rep.command = "verify wick";
  const auto& names = algebras.empty() ? kWickAlgebras : algebras;
  for (const auto& name : names) {
    StarAlgebra a = resolve_algebra(name);
    const bool real_case = a.field == Field::Real;
    const int w = max_weighted_degree > 0 ? max_weighted_degree : (real_case ? 6 : 8);
    const Mode mode = real_case ? Mode::Moebius : Mode::Ribbon;
    auto degs = series::multidegrees_up_to(w);
    std::vector<ReportRow> rows(degs.size());
    parallel_for(static_cast<int>(degs.size()), threads, [&](int i) {
      const auto& v = degs[i];
      Scalar moment = wick::gaussian_moment(a, wick::MomentSpec{v, a.field});
      Rational weight(1);
      for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        weight /= factorial(static_cast<unsigned long>(v[j]));
        weight /= rational_pow(Rational(static_cast<long>(j + 1) * (real_case ? 2 : 1)), v[j]);
      }
      Scalar lhs = Scalar(weight) * moment;
      Scalar rhs(0);
      for (auto& entry : maps::classify(v, mode)) {
        MapGraph g = maps::configuration_graph(entry.representative, mode);
        Scalar contrib = wick::graph_contribution(a, g);
        if (contrib.is_zero()) continue;
        rhs += contrib / Scalar(Rational(maps::aut_order(g, mode)));
      }
      ReportRow row;
      row.check = "wick-vs-graph-sum";
      row.inputs = "A=" + a.name + " v=" + vec_string(v);
      row.expected = to_string(lhs);
      row.computed = to_string(rhs);
      row.pass = lhs == rhs;
      rows[i] = std::move(row);
    });
    for (auto& r : rows) rep.rows.push_back(std::move(r));
  }
  return rep;
}

Report verify_mednykh(const std::vector<std::string>& group_names, int genus_max) {
  Report rep;
  rep.command = "verify mednykh";
  const auto& names = group_names.empty() ? kIdentityGroups : group_names;
  for (const auto& name : names) {
    auto g = resolve_group(name);
    auto data = characters::irreducible_data(g);
    for (int genus = 0; genus <= genus_max; ++genus) {
      const long chi = 2 - 2 * genus;
      Rational lhs = characters::mednykh_sum(data, chi);
      Rational rhs = integer_power(g.order, chi - 1) *
                     Rational(groups::hom_count_orientable(g, genus));
      ReportRow row;
      row.check = "mednykh";
      row.inputs = "G=" + g.name + " genus=" + std::to_string(genus);
      row.expected = lhs.get_str();
      row.computed = rhs.get_str();
      row.pass = lhs == rhs;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

Report verify_frobenius_schur(const std::vector<std::string>& group_names, int crosscap_max) {
  Report rep;
  rep.command = "verify frobenius-schur";
  const auto& names = group_names.empty() ? kIdentityGroups : group_names;
  for (const auto& name : names) {
    auto g = resolve_group(name);
    auto data = characters::irreducible_data(g);
    for (int k = 1; k <= crosscap_max; ++k) {
      const long chi = 2 - k;
      Rational lhs = characters::frobenius_schur_sum(data, chi);
      Rational rhs = integer_power(g.order, chi - 1) *
                     Rational(groups::hom_count_nonorientable(g, k));
      ReportRow row;
      row.check = "frobenius-schur";
      row.inputs = "G=" + g.name + " crosscaps=" + std::to_string(k);
      row.expected = lhs.get_str();
      row.computed = rhs.get_str();
      row.pass = lhs == rhs;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

namespace {

/// Random connected-or-not pairing on a random small degree sequence.
MapGraph random_graph(SplitMix& rng, bool with_twists, int max_edges) {
  const int edges = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges)));
  const int total = 2 * edges;
  std::vector<int> degseq;
  int remaining = total;
  while (remaining > 0) {
    int j = 1 + static_cast<int>(rng.below(std::min(remaining, 6)));
    degseq.resize(std::max<size_t>(degseq.size(), j), 0);
    ++degseq[j - 1];
    remaining -= j;
  }
  std::vector<int> darts(total);
  for (int i = 0; i < total; ++i) darts[i] = i;
  for (int i = total - 1; i > 0; --i)
    std::swap(darts[i], darts[rng.below(static_cast<std::uint64_t>(i + 1))]);
  maps::Configuration c;
  c.degree_sequence = degseq;
  c.alpha.assign(total, -1);
  for (int i = 0; i < total; i += 2) {
    c.alpha[darts[i]] = darts[i + 1];
    c.alpha[darts[i + 1]] = darts[i];
  }
  if (with_twists) {
    c.twist_by_edge.assign(edges, 0);
    for (int e = 0; e < edges; ++e) c.twist_by_edge[e] = rng.below(2);
  }
  return maps::configuration_graph(c, with_twists ? Mode::Moebius : Mode::Ribbon);
}

std::vector<int> non_loop_edges(const MapGraph& g) {
  auto verts = maps::vertices(g);
  std::vector<int> vertex_of(g.darts);
  for (size_t i = 0; i < verts.size(); ++i)
    for (int d : verts[i]) vertex_of[d] = static_cast<int>(i);
  std::vector<int> out;
  for (int d = 0; d < g.darts; ++d)
    if (g.alpha[d] > d && vertex_of[d] != vertex_of[g.alpha[d]]) out.push_back(d);
  return out;
}

}  // namespace

Report verify_contraction(const std::vector<std::string>& algebras, int checks,
                          std::uint64_t seed) {
  Report rep;
  rep.command = "verify contraction";
  const auto& names = algebras.empty() ? kInvarianceAlgebras : algebras;
  std::vector<StarAlgebra> as;
  for (auto& n : names) as.push_back(resolve_algebra(n));
  SplitMix rng(seed * 0x100000001b3ull + 0xcbf29ce484222325ull);
  for (int i = 0; i < checks; ++i) {
    const StarAlgebra& a = as[i % as.size()];
    const bool real_case = a.field == Field::Real;
    const int max_edges = a.dim >= 6 ? 4 : 5;
    MapGraph g;
    std::vector<int> candidates;
    do {
      g = random_graph(rng, real_case, max_edges);
      candidates = non_loop_edges(g);
    } while (candidates.empty());
    int edge = candidates[rng.below(candidates.size())];
    Scalar before = wick::graph_contribution(a, g);
    Scalar after = wick::graph_contribution(a, maps::contract_edge(g, edge));
    ReportRow row;
    row.check = "contraction-invariance";
    row.inputs = "A=" + a.name + " " + graph_string(g) + " edge=" + std::to_string(edge);
    row.expected = to_string(before);
    row.computed = to_string(after);
    row.pass = before == after;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Report verify_flips(const std::vector<std::string>& algebras, int checks, std::uint64_t seed) {
  Report rep;
  rep.command = "verify flips";
  const auto& names = algebras.empty() ? kInvarianceAlgebras : algebras;
  std::vector<StarAlgebra> as;
  for (auto& n : names)
    if (auto a = resolve_algebra(n); a.field == Field::Real) as.push_back(std::move(a));
  if (as.empty()) throw std::invalid_argument("verify flips: no real algebras given");
  SplitMix rng(seed * 0x100000001b3ull + 0x84222325cbf29ce4ull);
  for (int i = 0; i < checks; ++i) {
    const StarAlgebra& a = as[i % as.size()];
    const int max_edges = a.dim >= 6 ? 4 : 5;
    MapGraph g = random_graph(rng, true, max_edges);
    int nvert = maps::vertex_count(g);
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(nvert)));
    MapGraph flipped = maps::flip_vertex(g, v);
    Scalar before = wick::graph_contribution(a, g);
    Scalar after = wick::graph_contribution(a, flipped);
    ReportRow row;
    row.check = "flip-invariance";
    row.inputs = "A=" + a.name + " " + graph_string(g) + " vertex=" + std::to_string(v);
    row.expected = to_string(before);
    row.computed = to_string(after);
    row.pass = before == after;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Report cmd_verify(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "wick") return verify_wick(opt.algebras, opt.max_weighted_degree, opt.threads);
  if (suite == "mednykh") return verify_mednykh(opt.groups, opt.genus_max);
  if (suite == "frobenius-schur") return verify_frobenius_schur(opt.groups, opt.crosscap_max);
  if (suite == "contraction") return verify_contraction(opt.algebras, opt.checks, opt.seed);
  if (suite == "flips") return verify_flips(opt.algebras, opt.checks, opt.seed);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

Report cmd_contribution(const ContributionOptions& opt) {
  StarAlgebra a = resolve_algebra(opt.algebra);
  Report rep;
  Scalar closed, graph_side;
  std::string type_name;
  if (opt.orientable) {
    type_name = "or(" + std::to_string(opt.genus_or_crosscaps) + "," +
                std::to_string(opt.nfaces) + ")";
    rep.command = "contribution " + a.name + " " + type_name;
    closed = wick::closed_form_or(a, opt.genus_or_crosscaps, opt.nfaces);
    MapGraph g = (opt.genus_or_crosscaps == 0 && opt.nfaces == 1)
                     ? MapGraph{}
                     : maps::standard_orientable(opt.genus_or_crosscaps, opt.nfaces,
                                                 a.field == Field::Real ? Mode::Moebius
                                                                        : Mode::Ribbon);
    graph_side = wick::graph_contribution(a, g);
  } else {
    type_name = "nor(" + std::to_string(opt.genus_or_crosscaps) + "," +
                std::to_string(opt.nfaces) + ")";
    rep.command = "contribution " + a.name + " " + type_name;
    closed = wick::closed_form_nor(a, opt.genus_or_crosscaps, opt.nfaces);
    graph_side =
        wick::graph_contribution(a, maps::standard_nonorientable(opt.genus_or_crosscaps,
                                                                 opt.nfaces));
  }
  ReportRow row;
  row.check = "contribution";
  row.inputs = "A=" + a.name + " type=" + type_name;
  row.expected = to_string(closed);
  row.computed = to_string(graph_side);
  row.pass = closed == graph_side;
  rep.rows.push_back(std::move(row));
  return rep;
}

}  // namespace vnw::cli
