#pragma once

#include <vector>

#include "vnw/algebra.hpp"
#include "vnw/maps.hpp"
#include "vnw/series.hpp"

namespace vnw::wick {

enum class EdgeKind { Straight, Twisted };

/// The edge weight of the pairing expansion over an arbitrary exact basis:
/// weights[j][k] = (G^-1)_{jk} multiplying legs (b_j^*, b_k) for a straight
/// edge and (b_j^*, b_k^*) for a twisted one. Contracting a straight tensor
/// against <a . _> and <_ . c> yields <a c>.
struct EdgeTensor {
  EdgeKind kind = EdgeKind::Straight;
  std::vector<std::vector<Scalar>> weights;
};

EdgeTensor edge_tensor(const algebra::StarAlgebra& a, EdgeKind kind);

/// Degree multiset of one Gaussian moment: degrees[j-1] = v_j.
struct MomentSpec {
  std::vector<int> degrees;
  algebra::Field field = algebra::Field::Complex;
};

/// The moment integral over self-adjoint elements, with weight
/// exp(-<x^2>/2) in the complex case and exp(-<x^2>/4) in the real one,
/// evaluated as the derivative-side pairing sum: one dart per trace power,
/// all perfect matchings, straight (and, for real algebras, twisted) edge
/// tensors contracted against the vertex trace words. Zero when the total
/// degree is odd.
Scalar gaussian_moment(const algebra::StarAlgebra& a, const MomentSpec& m);

/// Sum over basis-index assignments of the product of vertex trace words and
/// edge tensors; twists require a real algebra. Works for disconnected
/// graphs (contributions multiply over components).
Scalar graph_contribution(const algebra::StarAlgebra& a, const maps::MapGraph& g);

/// The orientable surface invariant: trace of g nested commutator quadruples
/// and f-1 tadpole pairs, with Gram-inverse weights; (0,1) gives <1> = 1.
Scalar closed_form_or(const algebra::StarAlgebra& a, int genus, int nfaces);

/// The non-orientable invariant: k twisted tadpoles (squared starred basis
/// sums) and f-1 straight ones. Requires a real algebra and k >= 1.
Scalar closed_form_nor(const algebra::StarAlgebra& a, int crosscaps, int nfaces);

/// Generating series of the weighted moments: coefficient of t^v is
/// prod_j 1/(v_j! j^{v_j}) (complex) resp. 1/(v_j! (2j)^{v_j}) (real) times
/// gaussian_moment.
series::TruncatedSeries series_wick(const algebra::StarAlgebra& a, int w);

/// The same series summed over isomorphism classes of ribbon (complex) or
/// Moebius (real) graphs, each weighted by graph_contribution/|Aut|.
series::TruncatedSeries series_graph(const algebra::StarAlgebra& a, int w, bool connected_only);

}  // namespace vnw::wick
