#ifndef MIXHYP_CONSTRUCTIONS_HPP
#define MIXHYP_CONSTRUCTIONS_HPP

#include "mixhyp/coloring.hpp"
#include "mixhyp/core.hpp"

#include <cstddef>
#include <vector>

namespace mixhyp {

/// Target set S = {n_1 > n_2 > ... > n_s} with s >= 2 and n_s >= 2.
///
/// Accepts values in any order and stores them strictly decreasing.
/// Throws std::invalid_argument on fewer than two values, duplicates, or a
/// value below 2.
class SpecSet {
public:
    explicit SpecSet(std::vector<int> values);

    std::size_t size() const { return values_.size(); }
    // 1-based: n(1) is the largest element.
    int n(std::size_t i) const { return values_.at(i - 1); }
    int largest() const { return values_.front(); }
    int smallest() const { return values_.back(); }
    const std::vector<int> &values() const { return values_; }

    // True when n_1 = n_2 + 1, the case handled by the second construction.
    bool top_adjacent() const { return values_[0] == values_[1] + 1; }

    FeasibleSet as_set() const { return FeasibleSet(values_); }

    bool operator==(const SpecSet &) const = default;

private:
    std::vector<int> values_;
};

// Vertex tuples of the first construction, split by origin.
struct ConstructionVertexSet {
    std::vector<TupleLabel> diagonal; // (i,...,i), i < n_s
    std::vector<TupleLabel> steps;    // two tuples per (t, j)
    TupleLabel apex;                  // (n_1, ..., n_s)

    // diagonal, then steps, then apex: the vertex id order.
    std::vector<TupleLabel> ordered() const;
};

ConstructionVertexSet construction_vertices(const SpecSet &s);

// D-edge predicate on tuples: differ in every coordinate.
bool differ_everywhere(const TupleLabel &x, const TupleLabel &y);
// C-edge predicate on tuples: exactly two distinct values in every coordinate.
bool two_valued_everywhere(const TupleLabel &x, const TupleLabel &y, const TupleLabel &z);

enum class Variant { one, two };

/// First construction: 2 n_1 - n_s labelled vertices; D-edges are the pairs
/// differing in every coordinate, C-edges the triples taking exactly two
/// values in every coordinate.
MixedHypergraph construct_one(const SpecSet &s);

/// The first construction with vertex (n_2, 1, ..., 1) deleted. Requires
/// n_1 = n_2 + 1, throws std::invalid_argument otherwise.
MixedHypergraph construct_two(const SpecSet &s);

MixedHypergraph construct(const SpecSet &s, Variant variant);

/// Groups the vertices of the chosen construction by coordinate i
/// (1-based, i in [1, s]).
Partition canonical_coloring(const SpecSet &s, std::size_t i, Variant variant);

// Minimum vertex count of a one-realization of s.
int delta(const SpecSet &s);

MixedHypergraph smallest_one_realization(const SpecSet &s);

// A set of positive integers is the feasible set of some mixed hypergraph
// iff it omits 1 or is an interval. Throws on an empty set.
bool is_feasible_set_predicate(const FeasibleSet &f);

} // namespace mixhyp

#endif // MIXHYP_CONSTRUCTIONS_HPP
