#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vnw/rational.hpp"

namespace vnw::maps {

enum class Mode { Ribbon, Moebius };

/// A ribbon or Moebius graph as a rotation system on darts 0..darts-1:
/// sigma's cycles are the vertices in cyclic order, alpha is a fixed-point
/// free involution pairing darts into edges, twist holds the edge colors
/// (stored per dart, equal on the two darts of an edge; all zero in ribbon
/// mode). darts == 0 denotes the one-vertex graph with no edges.
struct MapGraph {
  int darts = 0;
  std::vector<int> sigma;
  std::vector<int> alpha;
  std::vector<std::uint8_t> twist;
  Mode mode = Mode::Ribbon;
};

/// Validates and builds a graph. twist_by_edge maps the lower dart of each
/// alpha-pair to its color; omitted edges are untwisted.
MapGraph make_graph(int darts, std::vector<int> sigma, std::vector<int> alpha,
                    const std::vector<std::pair<int, int>>& twist_by_edge, Mode mode);

/// Sigma cycles ordered by least dart, each starting at its least dart.
std::vector<std::vector<int>> vertices(const MapGraph& g);
int vertex_count(const MapGraph& g);
int edge_count(const MapGraph& g);
bool is_connected(const MapGraph& g);

/// Boundary walks, one per face, as dart sequences. The face count of a
/// twist-free graph equals the cycle count of sigma o alpha.
std::vector<std::vector<int>> faces(const MapGraph& g);
int face_count(const MapGraph& g);

struct TopType {
  bool orientable = true;
  int genus_or_crosscaps = 0;
  int faces = 1;

  friend bool operator==(const TopType&, const TopType&) = default;
};

/// Topological type of the surface of a connected graph; orientability is
/// decided by flip-reducing a spanning tree, genus/cross-caps come from
/// v - e + f. Throws on disconnected input.
TopType topological_type(const MapGraph& g);

/// Reverses the cyclic order at the vertex with the given index (in
/// vertices() order) and toggles the twist of every incident non-loop edge.
MapGraph flip_vertex(const MapGraph& g, int vertex_index);

/// Contracts a non-loop edge, named by either of its darts; a twisted edge
/// is first untwisted by flipping one endpoint. Throws on loops.
MapGraph contract_edge(const MapGraph& g, int edge_dart);

/// |Aut_R|: dart permutations commuting with sigma and alpha (connected).
long aut_order_ribbon(const MapGraph& g);

/// |Aut_M|: signed-dart bijections commuting with the signed rotation, the
/// signed edge involution and the side swap; equivalently pairs of a dart
/// bijection with a vertex-flip pattern realizing it (connected).
long aut_order_moebius(const MapGraph& g);

/// |Aut| of a possibly disconnected graph via the component decomposition.
Integer aut_order(const MapGraph& g, Mode mode);

/// One-vertex graph of orientable type (g, f): g handle pairs p q p~ q~
/// followed by f-1 tadpoles, no twists. (0,1) is rejected.
MapGraph standard_orientable(int genus, int nfaces, Mode mode = Mode::Ribbon);

/// One-vertex graph of non-orientable type (k, f): k twisted tadpoles
/// followed by f-1 untwisted ones.
MapGraph standard_nonorientable(int crosscaps, int nfaces);

/// Connected components split into stand-alone graphs (dart order kept).
std::vector<MapGraph> components(const MapGraph& g);

/// A fully labeled pairing: vertices of fixed cyclic order given by the
/// degree sequence (v_1, v_2, ...), a perfect matching of the darts, and
/// per-edge twist colors (edges ordered by their lower dart).
struct Configuration {
  std::vector<int> degree_sequence;
  std::vector<int> alpha;
  std::vector<std::uint8_t> twist_by_edge;
};

/// Number of darts sum j*v_j of a degree sequence.
int dart_total(const std::vector<int>& degree_sequence);

/// Sigma fixed by the degree sequence (vertices ascending by valence).
std::vector<int> configuration_sigma(const std::vector<int>& degree_sequence);

MapGraph configuration_graph(const Configuration& c, Mode mode);

/// Streams every perfect matching of the labeled darts (smallest unmatched
/// dart paired first), times every twist coloring when with_twists is set.
/// Yields nothing when the dart total is odd.
void enumerate_configurations(const std::vector<int>& degree_sequence, bool with_twists,
                              const std::function<void(const Configuration&)>& fn);

/// Minimal lexicographic (sigma, alpha, twist) encoding over all dart
/// relabelings reachable by propagation from each base dart (and side, in
/// Moebius mode); disconnected graphs use the sorted component encodings.
std::string canonical_key(const MapGraph& g, Mode mode);

struct ClassEntry {
  Configuration representative;
  std::string key;
  std::uint64_t labeled_count = 0;
  bool connected = false;
};

/// Groups the configurations of a degree sequence by ribbon (or Moebius)
/// isomorphism; Moebius mode enumerates twist colorings. Deterministic
/// order (sorted by canonical key).
std::vector<ClassEntry> classify(const std::vector<int>& degree_sequence, Mode mode);

std::string graph_to_json(const MapGraph& g);
MapGraph graph_from_json(const std::string& text);

}  // namespace vnw::maps
