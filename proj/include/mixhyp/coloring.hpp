#ifndef MIXHYP_COLORING_HPP
#define MIXHYP_COLORING_HPP

#include "mixhyp/core.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace mixhyp {

/// A set partition of {0, ..., n-1} stored as its restricted-growth string:
/// vertex 0 is in block 0 and every vertex is in a block at most one past
/// the largest block index used before it. Each partition has exactly one
/// such encoding, so a strict coloring up to renaming of colors is one
/// Partition.
class Partition {
public:
    /// Throws std::invalid_argument unless `assignment` is a nonempty
    /// restricted-growth string.
    explicit Partition(std::vector<std::uint32_t> assignment);

    /// Canonicalizes an arbitrary color assignment (any integers).
    static Partition from_colors(std::span<const int> colors);
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<Vertex>> &blocks);

    std::size_t vertex_count() const { return assignment_.size(); }
    std::size_t block_count() const { return blocks_; }
    std::uint32_t block_of(Vertex v) const { return assignment_.at(v); }
    const std::vector<std::uint32_t> &assignment() const { return assignment_; }

    // Blocks ordered by smallest member, members ascending.
    std::vector<std::vector<Vertex>> blocks() const;

    auto operator<=>(const Partition &) const = default;

private:
    std::vector<std::uint32_t> assignment_;
    std::size_t blocks_;
};

/// Drops vertices outside `subset` and renumbers the rest as
/// derived_subhypergraph does.
Partition restrict_partition(const Partition &p, std::span<const Vertex> subset);

// counts[k-1] is r_k. Empty when the hypergraph has no proper coloring;
// otherwise the last entry is nonzero.
struct Spectrum {
    std::vector<std::uint64_t> counts;

    std::uint64_t r(std::size_t k) const
    {
        return k >= 1 && k <= counts.size() ? counts[k - 1] : 0;
    }
    std::optional<std::size_t> upper_chromatic() const;
    std::optional<std::size_t> lower_chromatic() const;

    bool operator==(const Spectrum &) const = default;
};

// Sorted set of positive integers.
class FeasibleSet {
public:
    FeasibleSet() = default;
    FeasibleSet(std::initializer_list<int> values);
    explicit FeasibleSet(std::vector<int> values);

    const std::vector<int> &values() const { return values_; }
    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    bool contains(int k) const;
    int min() const { return values_.front(); }
    int max() const { return values_.back(); }

    bool operator==(const FeasibleSet &) const = default;

private:
    std::vector<int> values_;
};

bool is_proper(const MixedHypergraph &h, const Partition &p);

/// All strict k-colorings of h as partitions with exactly k blocks, in
/// lexicographic order of their restricted-growth strings.
///
/// Vertices are assigned in id order. A branch is cut as soon as the last
/// vertex of a D-edge lands in the block already holding the rest of it, or
/// the last vertex of a C-edge leaves it rainbow, or the block count can no
/// longer end at exactly k. With jobs > 1 the subtrees below a shallow
/// prefix are explored concurrently; the result is identical for any jobs.
///
/// Throws std::invalid_argument unless 1 <= k <= |X|, and
/// std::length_error above kEnumerationVertexCap vertices.
std::vector<Partition> enumerate_strict(const MixedHypergraph &h, std::size_t k, unsigned jobs = 1);

// Every proper partition regardless of block count, same order and pruning.
std::vector<Partition> enumerate_feasible(const MixedHypergraph &h, unsigned jobs = 1);

Spectrum chromatic_spectrum(const MixedHypergraph &h, unsigned jobs = 1);

FeasibleSet feasible_set(const Spectrum &spectrum);
FeasibleSet feasible_set(const MixedHypergraph &h, unsigned jobs = 1);

bool has_gap_at(const FeasibleSet &f, int k);
bool is_gap_free(const FeasibleSet &f);
std::vector<int> gaps(const FeasibleSet &f);

inline constexpr std::size_t kEnumerationVertexCap = 64;

} // namespace mixhyp

#endif // MIXHYP_COLORING_HPP
