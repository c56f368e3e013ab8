#include "vnw/algebra.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vnw::algebra {

namespace {

/// Combines duplicate indices, drops zeros, sorts by index.
SparseVec normalized(SparseVec v, int dim) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, c] : v) {
    if (k < 0 || k >= dim) throw std::invalid_argument("basis index out of range");
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.emplace_back(k, c);
  }
  std::erase_if(out, [](const auto& p) { return p.second.is_zero(); });
  return out;
}

std::optional<std::vector<std::vector<Scalar>>> invert(std::vector<std::vector<Scalar>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Scalar(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Scalar f = Scalar(1) / m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Scalar g = m[i][c];
      for (int j = 0; j < n; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string content_string(const StarAlgebra& a) {
  std::ostringstream os;
  os << a.dim << '|' << (a.field == Field::Real ? 'R' : 'C') << '|';
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (auto& [k, c] : a.structure[i][j])
        os << i << ',' << j << ',' << k << ':' << to_string(c) << ';';
  os << '|';
  for (int i = 0; i < a.dim; ++i)
    for (auto& [k, c] : a.star[i]) os << i << ',' << k << ':' << to_string(c) << ';';
  os << '|';
  for (auto& t : a.trace) os << to_string(t) << ';';
  return os.str();
}

/// Solves u * b_i = b_i for all i. Unique two-sided units only.
std::optional<Element> find_unit(const StarAlgebra& a) {
  const int n = a.dim;
  if (n == 0) return std::nullopt;
  // rows indexed by (i, m): sum_k u_k c_{k i}^m = [i == m]
  std::vector<std::vector<Scalar>> m(static_cast<size_t>(n) * n,
                                     std::vector<Scalar>(n, Scalar(0)));
  std::vector<Scalar> rhs(static_cast<size_t>(n) * n, Scalar(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k)
      for (auto& [coord, c] : a.structure[k][i]) m[static_cast<size_t>(i) * n + coord][k] += c;
    rhs[static_cast<size_t>(i) * n + i] = Scalar(1);
  }
  // Gauss-Jordan on a tall system; demand a unique consistent solution.
  const int rows = n * n;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    Scalar f = Scalar(1) / m[r][c];
    for (int j = 0; j < n; ++j) m[r][j] *= f;
    rhs[r] *= f;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar g = m[i][c];
      for (int j = 0; j < n; ++j) m[i][j] -= g * m[r][j];
      rhs[i] -= g * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  Element u(n, Scalar(0));
  for (int i = 0; i < r; ++i) u[pivot_col[i]] = rhs[i];
  // the system gives the left unit; insist it is a right unit too
  for (int i = 0; i < n; ++i)
    if (mul(a, basis_element(a, i), u) != basis_element(a, i)) return std::nullopt;
  return u;
}

void finalize(StarAlgebra& a) {
  const int n = a.dim;
  a.star_elements.assign(n, Element(n, Scalar(0)));
  for (int i = 0; i < n; ++i)
    for (auto& [k, c] : a.star[i]) a.star_elements[i][k] += c;

  if (auto u = find_unit(a)) a.unit = std::move(*u);

  a.gram.assign(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.gram[i][j] = trace_of(a, mul(a, basis_element(a, i), a.star_elements[j]));
  if (auto inv = invert(a.gram))
    a.gram_inv = std::move(*inv);
  else
    a.gram_inv.clear();

  a.fingerprint = fnv64(content_string(a));
}

}  // namespace

Element zero_element(const StarAlgebra& a) { return Element(a.dim, Scalar(0)); }

Element basis_element(const StarAlgebra& a, int i) {
  Element e(a.dim, Scalar(0));
  e[i] = Scalar(1);
  return e;
}

Element add(Element x, const Element& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

Element scale(Element x, const Scalar& c) {
  for (auto& v : x) v *= c;
  return x;
}

Element mul(const StarAlgebra& a, const Element& x, const Element& y) {
  Element out(a.dim, Scalar(0));
  for (int i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (auto& [k, c] : a.structure[i][j]) out[k] += f * c;
    }
  }
  return out;
}

Element mul_basis(const StarAlgebra& a, const Element& x, int j) {
  Element out(a.dim, Scalar(0));
  for (int i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (auto& [k, c] : a.structure[i][j]) out[k] += x[i] * c;
  }
  return out;
}

Element star_of(const StarAlgebra& a, const Element& x) {
  Element out(a.dim, Scalar(0));
  for (int i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    Scalar c = x[i].conj();
    for (auto& [k, s] : a.star[i]) out[k] += c * s;
  }
  return out;
}

Scalar trace_of(const StarAlgebra& a, const Element& x) {
  Scalar t(0);
  for (int i = 0; i < a.dim; ++i)
    if (!x[i].is_zero()) t += x[i] * a.trace[i];
  return t;
}

bool is_zero(const Element& x) {
  return std::all_of(x.begin(), x.end(), [](const Scalar& c) { return c.is_zero(); });
}

Scalar trace_word(const StarAlgebra& a, std::span<const WordLetter> word) {
  if (!a.has_unit()) throw std::logic_error("trace_word: algebra has no unit");
  Element acc = a.unit;
  for (const auto& [i, starred] : word) {
    if (i < 0 || i >= a.dim) throw std::out_of_range("trace_word: index out of range");
    acc = starred ? mul(a, acc, a.star_elements[i]) : mul_basis(a, acc, i);
  }
  return trace_of(a, acc);
}

const std::vector<std::vector<Scalar>>& gram_inverse(const StarAlgebra& a) {
  if (!a.has_gram_inverse()) throw std::domain_error("Gram matrix is singular");
  return a.gram_inv;
}

Element reconstruct(const StarAlgebra& a, const Element& x) {
  const auto& w = gram_inverse(a);
  Element out(a.dim, Scalar(0));
  for (int j = 0; j < a.dim; ++j) {
    Scalar m = trace_of(a, mul(a, x, a.star_elements[j]));
    if (m.is_zero()) continue;
    for (int k = 0; k < a.dim; ++k) out[k] += w[j][k] * m;
  }
  return out;
}

StarAlgebra build_group_algebra(const groups::FiniteGroup& g, Field field) {
  StarAlgebra a;
  a.dim = g.order;
  a.field = field;
  a.name = (field == Field::Complex ? "C[" : "R[") + g.name + "]";
  a.labels.reserve(g.order);
  for (int u = 0; u < g.order; ++u) a.labels.push_back("g" + std::to_string(u));
  a.structure.assign(g.order, std::vector<SparseVec>(g.order));
  for (int u = 0; u < g.order; ++u)
    for (int v = 0; v < g.order; ++v) a.structure[u][v] = {{g.mul(u, v), Scalar(1)}};
  a.star.resize(g.order);
  for (int u = 0; u < g.order; ++u) a.star[u] = {{g.inverse[u], Scalar(1)}};
  a.trace.assign(g.order, Scalar(0));
  a.trace[g.identity] = Scalar(1);
  finalize(a);
  return a;
}

StarAlgebra build_matrix_algebra(MatrixKind kind, int n) {
  if (n < 1) throw std::invalid_argument("build_matrix_algebra: n >= 1 required");
  StarAlgebra a;
  const Rational inv_n = Rational(1) / Rational(n);

  if (kind != MatrixKind::Quaternionic) {
    a.dim = n * n;
    a.field = kind == MatrixKind::Real ? Field::Real : Field::Complex;
    a.name = "M(" + std::to_string(n) + (kind == MatrixKind::Real ? ",R)" : ",C)");
    auto id = [n](int p, int q) { return p * n + q; };
    a.labels.resize(a.dim);
    a.structure.assign(a.dim, std::vector<SparseVec>(a.dim));
    a.star.resize(a.dim);
    a.trace.assign(a.dim, Scalar(0));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int i = id(p, q);
        a.labels[i] = "E" + std::to_string(p + 1) + std::to_string(q + 1);
        a.star[i] = {{id(q, p), Scalar(1)}};
        if (p == q) a.trace[i] = Scalar(inv_n);
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s)
            if (q == r) a.structure[i][id(r, s)] = {{id(p, s), Scalar(1)}};
      }
  } else {
    // real basis e_pq x e^nu; quaternion units as 2x2 complex matrices
    static const int qidx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int qsgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    a.dim = 4 * n * n;
    a.field = Field::Real;
    a.name = "M(" + std::to_string(n) + ",H)";
    auto id = [n](int p, int q, int nu) { return (p * n + q) * 4 + nu; };
    a.labels.resize(a.dim);
    a.structure.assign(a.dim, std::vector<SparseVec>(a.dim));
    a.star.resize(a.dim);
    a.trace.assign(a.dim, Scalar(0));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int nu = 0; nu < 4; ++nu) {
          int i = id(p, q, nu);
          a.labels[i] =
              "E" + std::to_string(p + 1) + std::to_string(q + 1) + "^" + std::to_string(nu);
          a.star[i] = {{id(q, p, nu), Scalar(nu == 0 ? 1 : -1)}};
          if (p == q && nu == 0) a.trace[i] = Scalar(inv_n);
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
              for (int mu = 0; mu < 4; ++mu)
                if (q == r)
                  a.structure[i][id(r, s, mu)] = {
                      {id(p, s, qidx[nu][mu]), Scalar(qsgn[nu][mu])}};
        }
  }
  finalize(a);
  return a;
}

StarAlgebra direct_sum(const std::vector<std::pair<StarAlgebra, Rational>>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct_sum: no blocks");
  Rational total(0);
  for (auto& [b, w] : blocks) {
    if (w <= 0) throw std::invalid_argument("direct_sum: weights must be positive");
    if (b.field != blocks.front().first.field)
      throw std::invalid_argument("direct_sum: mixed field cases");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("direct_sum: weights must sum to 1");

  StarAlgebra a;
  a.field = blocks.front().first.field;
  a.dim = 0;
  std::vector<int> offset;
  std::string name = "sum(";
  for (size_t b = 0; b < blocks.size(); ++b) {
    offset.push_back(a.dim);
    a.dim += blocks[b].first.dim;
    name += (b ? "," : "") + blocks[b].first.name + ":" + blocks[b].second.get_str();
  }
  a.name = name + ")";
  a.structure.assign(a.dim, std::vector<SparseVec>(a.dim));
  a.star.resize(a.dim);
  a.trace.assign(a.dim, Scalar(0));
  a.labels.resize(a.dim);
  for (size_t b = 0; b < blocks.size(); ++b) {
    const auto& [blk, w] = blocks[b];
    const int off = offset[b];
    for (int i = 0; i < blk.dim; ++i) {
      a.labels[off + i] = std::to_string(b) + ":" + blk.labels[i];
      a.trace[off + i] = blk.trace[i] * Scalar(w);
      for (auto& [k, c] : blk.star[i]) a.star[off + i].emplace_back(off + k, c);
      for (int j = 0; j < blk.dim; ++j)
        for (auto& [k, c] : blk.structure[i][j])
          a.structure[off + i][off + j].emplace_back(off + k, c);
    }
  }
  finalize(a);
  return a;
}

StarAlgebra from_parts(int dim, Field field, std::vector<std::string> labels,
                       std::vector<std::vector<SparseVec>> structure, std::vector<SparseVec> star,
                       std::vector<Scalar> trace, std::string name) {
  if (dim < 1) throw std::invalid_argument("algebra dimension must be positive");
  if (static_cast<int>(structure.size()) != dim || static_cast<int>(star.size()) != dim ||
      static_cast<int>(trace.size()) != dim)
    throw std::invalid_argument("algebra parts have inconsistent sizes");
  StarAlgebra a;
  a.dim = dim;
  a.field = field;
  a.name = std::move(name);
  if (labels.empty())
    for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  if (static_cast<int>(labels.size()) != dim)
    throw std::invalid_argument("label count != dim");
  a.labels = std::move(labels);
  a.structure = std::move(structure);
  for (auto& row : a.structure) {
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("structure row size != dim");
    for (auto& v : row) v = normalized(std::move(v), dim);
  }
  a.star = std::move(star);
  for (auto& v : a.star) v = normalized(std::move(v), dim);
  a.trace = std::move(trace);
  finalize(a);
  return a;
}

AxiomReport check_star_trace_axioms(const StarAlgebra& a) {
  AxiomReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.first_violation = std::move(msg);
  };
  const int n = a.dim;

  if (a.field == Field::Real) {
    auto real_ok = [](const SparseVec& v) {
      return std::all_of(v.begin(), v.end(), [](const auto& p) { return p.second.is_real(); });
    };
    for (int i = 0; i < n; ++i) {
      if (!a.trace[i].is_real()) {
        fail("field violation: trace value of b" + std::to_string(i) + " is not real");
        return rep;
      }
      if (!real_ok(a.star[i])) {
        fail("field violation: star coefficients of b" + std::to_string(i) + " are not real");
        return rep;
      }
      for (int j = 0; j < n; ++j)
        if (!real_ok(a.structure[i][j])) {
          fail("field violation: structure constants at (" + std::to_string(i) + "," +
               std::to_string(j) + ") are not real");
          return rep;
        }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element bij = mul(a, basis_element(a, i), basis_element(a, j));
      for (int k = 0; k < n; ++k)
        if (mul_basis(a, bij, k) !=
            mul(a, basis_element(a, i), mul(a, basis_element(a, j), basis_element(a, k)))) {
          fail("associativity: (b" + std::to_string(i) + " b" + std::to_string(j) + ") b" +
               std::to_string(k) + " != b" + std::to_string(i) + " (b" + std::to_string(j) +
               " b" + std::to_string(k) + ")");
          return rep;
        }
    }

  if (!a.has_unit()) {
    fail("unit: no two-sided unit element");
    return rep;
  }
  if (trace_of(a, a.unit) != Scalar(1)) {
    fail("unit: <1> != 1");
    return rep;
  }

  for (int i = 0; i < n; ++i)
    if (star_of(a, a.star_elements[i]) != basis_element(a, i)) {
      fail("involution: (b" + std::to_string(i) + "^*)^* != b" + std::to_string(i));
      return rep;
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (star_of(a, mul(a, basis_element(a, i), basis_element(a, j))) !=
          mul(a, a.star_elements[j], a.star_elements[i])) {
        fail("anti-isomorphism: (b" + std::to_string(i) + " b" + std::to_string(j) +
             ")^* != b" + std::to_string(j) + "^* b" + std::to_string(i) + "^*");
        return rep;
      }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (trace_of(a, mul(a, basis_element(a, i), basis_element(a, j))) !=
          trace_of(a, mul(a, basis_element(a, j), basis_element(a, i)))) {
        fail("trace symmetry: <b" + std::to_string(i) + " b" + std::to_string(j) + "> != <b" +
             std::to_string(j) + " b" + std::to_string(i) + ">");
        return rep;
      }

  for (int i = 0; i < n; ++i)
    if (trace_of(a, a.star_elements[i]) != a.trace[i].conj()) {
      fail("star trace: <b" + std::to_string(i) + "^*> != conj <b" + std::to_string(i) + ">");
      return rep;
    }

  for (int i = 0; i < n; ++i) {
    Scalar d = trace_of(a, mul(a, basis_element(a, i), a.star_elements[i]));
    if (!d.is_real() || d.re <= 0) {
      fail("positivity: <b" + std::to_string(i) + " b" + std::to_string(i) +
           "^*> is not a positive rational");
      return rep;
    }
  }

  if (!a.has_gram_inverse()) {
    fail("gram: Gram matrix is singular");
    return rep;
  }

  rep.notes.push_back(
      "positivity of the trace form is checked on basis diagonal entries only; "
      "full positive-definiteness is assumed for user-supplied algebras");
  return rep;
}

namespace {

nlohmann::json scalar_json(const Scalar& s) {
  return nlohmann::json::array({s.re.get_str(), s.im.get_str()});
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("scalar must be [\"re\",\"im\"]");
  return Scalar(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()));
}

}  // namespace

std::string algebra_to_json(const StarAlgebra& a) {
  nlohmann::json j;
  j["dim"] = a.dim;
  j["field"] = a.field == Field::Real ? "real" : "complex";
  j["labels"] = a.labels;
  auto structure = nlohmann::json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      if (a.structure[i][k].empty()) continue;
      auto terms = nlohmann::json::array();
      for (auto& [m, c] : a.structure[i][k])
        terms.push_back(nlohmann::json::array({m, c.re.get_str(), c.im.get_str()}));
      structure.push_back(nlohmann::json::array({i, k, std::move(terms)}));
    }
  j["structure"] = std::move(structure);
  auto star = nlohmann::json::array();
  for (int i = 0; i < a.dim; ++i) {
    auto terms = nlohmann::json::array();
    for (auto& [m, c] : a.star[i])
      terms.push_back(nlohmann::json::array({m, c.re.get_str(), c.im.get_str()}));
    star.push_back(nlohmann::json::array({i, std::move(terms)}));
  }
  j["star"] = std::move(star);
  auto trace = nlohmann::json::array();
  for (auto& t : a.trace) trace.push_back(scalar_json(t));
  j["trace"] = std::move(trace);
  j["name"] = a.name;
  return j.dump(2);
}

StarAlgebra algebra_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("algebra JSON: dim must be positive");
  const std::string field_name = j.at("field").get<std::string>();
  Field field;
  if (field_name == "real")
    field = Field::Real;
  else if (field_name == "complex")
    field = Field::Complex;
  else
    throw std::invalid_argument("algebra JSON: field must be \"real\" or \"complex\"");

  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();

  std::vector<std::vector<SparseVec>> structure(dim, std::vector<SparseVec>(dim));
  for (auto& entry : j.at("structure")) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("algebra JSON: structure entry must be [i, j, terms]");
    int i = entry[0].get<int>(), k = entry[1].get<int>();
    if (i < 0 || i >= dim || k < 0 || k >= dim)
      throw std::invalid_argument("algebra JSON: structure index out of range");
    for (auto& term : entry[2]) {
      if (!term.is_array() || term.size() != 3)
        throw std::invalid_argument("algebra JSON: structure term must be [k, re, im]");
      structure[i][k].emplace_back(
          term[0].get<int>(),
          Scalar(parse_rational(term[1].get<std::string>()),
                 parse_rational(term[2].get<std::string>())));
    }
  }

  std::vector<SparseVec> star(dim);
  std::vector<bool> star_seen(dim, false);
  for (auto& entry : j.at("star")) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("algebra JSON: star entry must be [i, terms]");
    int i = entry[0].get<int>();
    if (i < 0 || i >= dim) throw std::invalid_argument("algebra JSON: star index out of range");
    star_seen[i] = true;
    for (auto& term : entry[1])
      star[i].emplace_back(term[0].get<int>(),
                           Scalar(parse_rational(term[1].get<std::string>()),
                                  parse_rational(term[2].get<std::string>())));
  }
  for (int i = 0; i < dim; ++i)
    if (!star_seen[i])
      throw std::invalid_argument("algebra JSON: star must be given for every basis index");

  auto trace_json = j.at("trace");
  if (static_cast<int>(trace_json.size()) != dim)
    throw std::invalid_argument("algebra JSON: trace size != dim");
  std::vector<Scalar> trace;
  for (auto& t : trace_json) trace.push_back(scalar_from_json(t));

  std::string name = j.value("name", std::string("user"));
  return from_parts(dim, field, std::move(labels), std::move(structure), std::move(star),
                    std::move(trace), std::move(name));
}

}  // namespace vnw::algebra
