#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vnw/groups.hpp"

namespace vnw::characters {

/// Dimension and Frobenius-Schur indicator of one complex irreducible.
struct IrrepDatum {
  int dim = 1;
  int fs = 1;  // +1 real, 0 complex, -1 quaternionic

  friend bool operator==(const IrrepDatum&, const IrrepDatum&) = default;
};

/// Class multiplication matrices M_i[j][k] = #{x in C_i : x * rep_j in C_k};
/// every row of M_i sums to |C_i|.
std::vector<std::vector<std::vector<long>>> class_matrices(const groups::FiniteGroup& g);

/// Extracts (dim, fs) of every irreducible by splitting the common
/// eigenvectors of the class matrices over F_p for the smallest prime
/// p = 1 mod exponent(G) with p > 2|G|. Deterministic output (sorted by
/// (dim, fs)); throws when splitting fails after bounded retries or a lift
/// falls out of range.
std::vector<IrrepDatum> irreducible_data(const groups::FiniteGroup& g, std::uint64_t seed = 0);

/// sum_lambda dim^chi for even chi (negative allowed).
Rational mednykh_sum(const std::vector<IrrepDatum>& data, long chi);

/// sum over real irreducibles of dim^chi plus sum over quaternionic ones of
/// (-dim)^chi.
Rational frobenius_schur_sum(const std::vector<IrrepDatum>& data, long chi);

/// "name<TAB>classes<TAB>dim:fs,dim:fs,..." with pairs sorted by (dim, fs).
std::string irrep_tsv_row(const std::string& name, int class_count,
                          const std::vector<IrrepDatum>& data);

}  // namespace vnw::characters
