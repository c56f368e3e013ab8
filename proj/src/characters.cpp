#include "vnw/characters.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace vnw::characters {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest prime p = 1 (mod m) with p > bound.
long find_prime(long m, long bound) {
  for (long p = m + 1;; p += m)
    if (p > bound && is_prime(p)) return p;
}

long mod_pow(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::logic_error("division by zero mod p");
  return mod_pow(a, p - 2, p);
}

/// Null-space basis of m over F_p.
std::vector<std::vector<long>> kernel(std::vector<std::vector<long>> m, long p) {
  const int r = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < r && rank < r; ++c) {
    int pr = -1;
    for (int i = rank; i < r; ++i)
      if (m[i][c] % p != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[rank]);
    long inv = mod_inv(m[rank][c], p);
    for (int j = 0; j < r; ++j) m[rank][j] = (m[rank][j] % p + p) * inv % p;
    for (int i = 0; i < r; ++i) {
      if (i == rank) continue;
      long f = (m[i][c] % p + p) % p;
      if (f == 0) continue;
      for (int j = 0; j < r; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(r, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long>> basis;
  for (int c = 0; c < r; ++c) {
    if (is_pivot[c]) continue;
    std::vector<long> v(r, 0);
    v[c] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = (p - m[i][c] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<std::vector<long>>> class_matrices(const groups::FiniteGroup& g) {
  auto classes = groups::conjugacy_classes(g);
  const int r = static_cast<int>(classes.size());
  std::vector<int> class_of(g.order);
  for (int i = 0; i < r; ++i)
    for (int x : classes[i]) class_of[x] = i;
  std::vector<std::vector<std::vector<long>>> out(
      r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const int rep = classes[j][0];
      for (int x : classes[i]) ++out[i][j][class_of[g.mul(x, rep)]];
    }
  return out;
}

std::vector<IrrepDatum> irreducible_data(const groups::FiniteGroup& g, std::uint64_t seed) {
  auto classes = groups::conjugacy_classes(g);
  const int r = static_cast<int>(classes.size());
  std::vector<int> class_of(g.order);
  for (int i = 0; i < r; ++i)
    for (int x : classes[i]) class_of[x] = i;

  int id_class = class_of[g.identity];
  std::vector<int> inv_class(r);
  for (int i = 0; i < r; ++i) inv_class[i] = class_of[g.inverse[classes[i][0]]];

  // q_i = #{w : w^2 in C_i}
  std::vector<long> q(r, 0);
  for (int w = 0; w < g.order; ++w) ++q[class_of[g.mul(w, w)]];

  const auto mats = class_matrices(g);
  const long p = find_prime(groups::exponent(g), 2L * g.order);

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<long> coeff(0, p - 1);

  std::vector<std::vector<long>> eigvecs;
  for (int attempt = 0; attempt < 64 && eigvecs.empty(); ++attempt) {
    std::vector<long> c(r);
    for (auto& x : c) x = coeff(rng);
    std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) m[j][k] = (m[j][k] + c[i] * (mats[i][j][k] % p)) % p;

    std::vector<std::vector<long>> found;
    bool split = true;
    for (long lam = 0; lam < p && split; ++lam) {
      auto shifted = m;
      for (int j = 0; j < r; ++j) shifted[j][j] = ((shifted[j][j] - lam) % p + p) % p;
      auto ker = kernel(std::move(shifted), p);
      if (ker.empty()) continue;
      if (ker.size() > 1) split = false;  // degenerate combination, resample
      else found.push_back(std::move(ker[0]));
      if (static_cast<int>(found.size()) == r) break;
    }
    if (!split || static_cast<int>(found.size()) != r) continue;

    // verify common eigenvectors across all class matrices
    bool common = true;
    for (auto& u : found) {
      if (u[id_class] == 0) {
        common = false;
        break;
      }
      long norm = mod_inv(u[id_class], p);
      for (auto& x : u) x = x * norm % p;
      for (int i = 0; i < r && common; ++i) {
        long omega = 0;
        for (int k = 0; k < r; ++k) omega = (omega + mats[i][id_class][k] % p * u[k]) % p;
        for (int j = 0; j < r && common; ++j) {
          long lhs = 0;
          for (int k = 0; k < r; ++k) lhs = (lhs + mats[i][j][k] % p * u[k]) % p;
          common = lhs == omega * u[j] % p;
        }
      }
      if (!common) break;
    }
    if (common) eigvecs = std::move(found);
  }
  if (eigvecs.empty())
    throw std::runtime_error("irreducible_data: eigenspace splitting failed after 64 attempts");

  const int dim_bound = static_cast<int>(std::sqrt(static_cast<double>(g.order))) + 1;
  std::vector<IrrepDatum> out;
  for (auto& u : eigvecs) {
    // sum_k |C_k| u_k u_{k*} = |G| / dim^2 (mod p)
    long t = 0;
    for (int k = 0; k < r; ++k)
      t = (t + static_cast<long>(classes[k].size()) % p * u[k] % p * u[inv_class[k]]) % p;
    if (t == 0) throw std::logic_error("irreducible_data: vanishing norm sum");
    long dsq = g.order % p * mod_inv(t, p) % p;
    int dim = 0;
    for (int d = 1; d <= dim_bound; ++d)
      if (static_cast<long>(d) * d % p == dsq) {
        if (dim != 0) throw std::logic_error("irreducible_data: ambiguous dimension lift");
        dim = d;
      }
    if (dim == 0 || dim * dim > g.order)
      throw std::logic_error("irreducible_data: dimension lift out of range");

    // nu = (1/|G|) sum_k q_k chi(C_k), chi(C_k) = dim * u_k (mod p)
    long nu = 0;
    for (int k = 0; k < r; ++k) nu = (nu + q[k] % p * (dim * u[k] % p)) % p;
    nu = nu * mod_inv(g.order % p, p) % p;
    int fs;
    if (nu == 0) fs = 0;
    else if (nu == 1) fs = 1;
    else if (nu == p - 1) fs = -1;
    else throw std::logic_error("irreducible_data: indicator lift out of range");
    if (fs == -1 && dim % 2 != 0)
      throw std::logic_error("irreducible_data: quaternionic irreducible of odd dimension");
    out.push_back(IrrepDatum{dim, fs});
  }

  std::sort(out.begin(), out.end(), [](const IrrepDatum& a, const IrrepDatum& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.fs < b.fs;
  });

  long dimsq = 0;
  for (auto& d : out) dimsq += static_cast<long>(d.dim) * d.dim;
  if (dimsq != g.order)
    throw std::logic_error("irreducible_data: dimension square sum mismatch");
  return out;
}

Rational mednykh_sum(const std::vector<IrrepDatum>& data, long chi) {
  if (chi % 2 != 0) throw std::invalid_argument("mednykh_sum: Euler characteristic must be even");
  Rational s(0);
  for (auto& d : data) s += rational_pow(Rational(d.dim), chi);
  return s;
}

Rational frobenius_schur_sum(const std::vector<IrrepDatum>& data, long chi) {
  Rational s(0);
  for (auto& d : data) {
    if (d.fs == 1) s += rational_pow(Rational(d.dim), chi);
    else if (d.fs == -1) s += rational_pow(Rational(-d.dim), chi);
  }
  return s;
}

std::string irrep_tsv_row(const std::string& name, int class_count,
                          const std::vector<IrrepDatum>& data) {
  std::string row = name + "\t" + std::to_string(class_count) + "\t";
  for (size_t i = 0; i < data.size(); ++i) {
    if (i) row += ",";
    row += std::to_string(data[i].dim) + ":" + std::to_string(data[i].fs);
  }
  return row;
}

}  // namespace vnw::characters
