#ifndef MIXHYP_CORE_HPP
#define MIXHYP_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mixhyp {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex ids.
using Edge = std::vector<Vertex>;

// Coordinate label (x_1, ..., x_s) attached to vertices of the tuple
// constructions. Coordinates are 1-based. Labels are metadata only.
struct TupleLabel {
    std::vector<int> coords;

    auto operator<=>(const TupleLabel &) const = default;
};

/// A mixed hypergraph (X, C, D) on the vertex set {0, ..., n-1}.
///
/// Edge families are kept in canonical form: every edge sorted ascending,
/// each family sorted lexicographically with duplicates removed. The C and D
/// families may share edges (bi-edges). Instances are immutable.
class MixedHypergraph {
public:
    /// Throws std::invalid_argument when n == 0, an edge has fewer than two
    /// distinct vertices, repeats a vertex, or leaves [0, n), or when labels
    /// are given but their count differs from n.
    MixedHypergraph(std::size_t n, std::vector<Edge> c_edges, std::vector<Edge> d_edges,
                    std::vector<TupleLabel> labels = {});

    std::size_t vertex_count() const { return n_; }
    const std::vector<Edge> &c_edges() const { return c_edges_; }
    const std::vector<Edge> &d_edges() const { return d_edges_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<TupleLabel> &labels() const { return labels_; }
    const TupleLabel &label(Vertex v) const { return labels_.at(v); }
    std::optional<Vertex> find_label(const TupleLabel &label) const;

    std::vector<Vertex> vertices() const;

    bool operator==(const MixedHypergraph &) const = default;

private:
    std::size_t n_;
    std::vector<Edge> c_edges_;
    std::vector<Edge> d_edges_;
    std::vector<TupleLabel> labels_;
};

/// H[X']: keeps exactly the edges contained in `subset`. Surviving vertices
/// are renumbered 0..|X'|-1 in their original order; labels follow them.
MixedHypergraph derived_subhypergraph(const MixedHypergraph &h, std::span<const Vertex> subset);

MixedHypergraph delete_vertex(const MixedHypergraph &h, Vertex v);

/// Relabels vertex v as perm[v]. `perm` must be a permutation of [0, n).
MixedHypergraph permute(const MixedHypergraph &h, std::span<const Vertex> perm);

// image[v] is the vertex of the second hypergraph that v maps to.
struct IsoMapping {
    std::vector<Vertex> image;

    bool operator==(const IsoMapping &) const = default;
};

inline constexpr std::size_t kIsomorphismVertexCap = 12;

/// Backtracking search for an isomorphism, pruned by per-vertex edge-size
/// signatures. Labels are ignored. Throws std::length_error when either
/// hypergraph has more than kIsomorphismVertexCap vertices.
std::optional<IsoMapping> are_isomorphic(const MixedHypergraph &a, const MixedHypergraph &b);

// Checks that `mapping` carries C-edges onto C-edges and D-edges onto
// D-edges in both directions.
bool is_isomorphism(const MixedHypergraph &a, const MixedHypergraph &b, const IsoMapping &mapping);

} // namespace mixhyp

#endif // MIXHYP_CORE_HPP
