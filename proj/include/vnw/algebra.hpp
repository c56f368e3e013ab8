#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vnw/groups.hpp"
#include "vnw/scalar.hpp"

namespace vnw::algebra {

enum class Field { Real, Complex };

/// Sparse linear combination of basis vectors: (index, coefficient) pairs.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// Coordinates of an algebra element over a referenced StarAlgebra.
using Element = std::vector<Scalar>;

/// A finite-dimensional *-algebra with trace, given by exact structure
/// constants over Gaussian rationals. Immutable after construction; all
/// operations may run concurrently on shared instances.
struct StarAlgebra {
  int dim = 0;
  Field field = Field::Complex;
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> structure;  // [i][j] -> coords of b_i b_j
  std::vector<SparseVec> star;                    // [i]    -> coords of b_i^*
  std::vector<Scalar> trace;                      // <b_i>

  // Derived data, filled by finalize().
  Element unit;                                  // empty when no unit was found
  std::vector<Element> star_elements;            // b_i^* as dense elements
  std::vector<std::vector<Scalar>> gram;         // G_ij = <b_i b_j^*>
  std::vector<std::vector<Scalar>> gram_inv;     // empty when singular
  std::uint64_t fingerprint = 0;                 // content hash, used as cache key

  bool has_unit() const { return !unit.empty(); }
  bool has_gram_inverse() const { return !gram_inv.empty(); }
};

/// Group algebra C[G] or R[G]; basis indexed by group elements,
/// b_u b_v = b_{uv}, b_u^* = b_{u^-1}, <b_u> = [u = identity].
StarAlgebra build_group_algebra(const groups::FiniteGroup& g, Field field);

enum class MatrixKind { Real, Complex, Quaternionic };

/// Matrix algebra on the unscaled matrix-unit basis with trace (1/n)tr.
/// The quaternionic kind is the real algebra on e_pq x e^nu with the
/// 2x2-matrix quaternion units; its trace is <e_pq^nu> = [p=q][nu=0]/n.
/// Orthonormality is not assumed; the Gram matrix carries the normalization.
StarAlgebra build_matrix_algebra(MatrixKind kind, int n);

/// Block-diagonal sum; trace = weighted sum of block traces. Weights must be
/// positive rationals summing to 1 and all blocks must share the field.
StarAlgebra direct_sum(const std::vector<std::pair<StarAlgebra, Rational>>& blocks);

/// Assembles an algebra from raw parts without validating the axioms.
/// Computes unit/Gram/star tables; leaves unit empty if no unit exists and
/// gram_inv empty if the Gram matrix is singular.
StarAlgebra from_parts(int dim, Field field, std::vector<std::string> labels,
                       std::vector<std::vector<SparseVec>> structure,
                       std::vector<SparseVec> star, std::vector<Scalar> trace,
                       std::string name);

Element zero_element(const StarAlgebra& a);
Element basis_element(const StarAlgebra& a, int i);
Element add(Element x, const Element& y);
Element scale(Element x, const Scalar& c);
Element mul(const StarAlgebra& a, const Element& x, const Element& y);
Element mul_basis(const StarAlgebra& a, const Element& x, int j);  // x * b_j
Element star_of(const StarAlgebra& a, const Element& x);
Scalar trace_of(const StarAlgebra& a, const Element& x);
bool is_zero(const Element& x);

/// One letter of a trace word: basis index plus star flag.
struct WordLetter {
  int index;
  bool starred;
};

/// <x_1 x_2 ... x_m> with x_t = b_{i_t} or b_{i_t}^*; empty word gives <1>.
Scalar trace_word(const StarAlgebra& a, std::span<const WordLetter> word);

/// G^-1 for G_ij = <b_i b_j^*>. Throws std::domain_error when singular.
const std::vector<std::vector<Scalar>>& gram_inverse(const StarAlgebra& a);

/// sum_{j,k} (G^-1)_{jk} <x b_j^*> b_k; equals x for any valid algebra.
Element reconstruct(const StarAlgebra& a, const Element& x);

/// Result of check_star_trace_axioms: ok, or the first violated axiom.
struct AxiomReport {
  bool ok = true;
  std::string first_violation;  // empty when ok
  std::vector<std::string> notes;
};

/// Verifies associativity, unit, involution, anti-isomorphism, trace
/// symmetry, star-trace conjugation, <1> = 1, basis-diagonal positivity and
/// Gram invertibility; real algebras additionally must have im = 0 scalars.
AxiomReport check_star_trace_axioms(const StarAlgebra& a);

std::string algebra_to_json(const StarAlgebra& a);
StarAlgebra algebra_from_json(const std::string& text);

}  // namespace vnw::algebra
