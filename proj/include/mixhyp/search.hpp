#ifndef MIXHYP_SEARCH_HPP
#define MIXHYP_SEARCH_HPP

#include "mixhyp/coloring.hpp"
#include "mixhyp/constructions.hpp"
#include "mixhyp/core.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace mixhyp {

// F(H) equals the target set.
bool is_realization(const MixedHypergraph &h, const FeasibleSet &target);
// Realization whose spectrum entries are all 0 or 1.
bool is_one_realization(const MixedHypergraph &h, const FeasibleSet &target);

/// For every vertex v, whether H - v still one-realizes the target. A
/// one-realization with delta(S) vertices has every flag false. A
/// single-vertex hypergraph yields an empty list.
std::vector<std::pair<Vertex, bool>> deletion_criticality(const MixedHypergraph &h,
                                                          const FeasibleSet &target);

inline constexpr int kSearchVertexCap = 6;

struct SearchBudget {
    int max_vertices = 5;
    int c_edge_size = 3;
    int d_edge_size = 2;
    std::uint64_t max_candidates = std::uint64_t{1} << 22;
    unsigned jobs = 1;
};

enum class SearchOutcome { witness_found, exhausted, budget_exceeded };

std::string_view to_string(SearchOutcome outcome);

struct SearchReport {
    SearchOutcome outcome = SearchOutcome::exhausted;
    std::optional<MixedHypergraph> witness;
    // Candidates visited in search order, up to and including the witness.
    std::uint64_t examined = 0;
    // Candidates that were the canonical representative of their class.
    std::uint64_t representatives = 0;
    // Fraction of examined candidates discarded as isomorphic duplicates.
    double dedup_ratio = 0.0;
};

/// Exhaustive probe for a one-realization of `s` on exactly n vertices among
/// hypergraphs whose C-edges all have budget.c_edge_size vertices and whose
/// D-edges all have budget.d_edge_size vertices.
///
/// A candidate is a pair of edge sets encoded as one bitmask (D-edge slots
/// in the low bits, C-edge slots above, each in lexicographic subset order).
/// Candidates are visited by increasing edge count and increasing mask
/// within a count. Only candidates whose mask is minimal over all n!
/// vertex permutations are tested, so each isomorphism class is tested
/// once. Finding nothing is evidence about this uniform family only; it
/// says nothing about non-uniform hypergraphs.
///
/// Throws std::invalid_argument on n < 1, n > budget.max_vertices,
/// budget.max_vertices > kSearchVertexCap, or edge sizes below 2. Returns
/// budget_exceeded without searching when the candidate space is larger
/// than budget.max_candidates.
SearchReport bounded_minimality_search(const SpecSet &s, int n, const SearchBudget &budget = {});

/// Canonical (minimal) mask of a candidate under vertex permutation, and the
/// hypergraph a mask encodes. Exposed for soundness checks.
class CandidateSpace {
public:
    CandidateSpace(int n, int c_edge_size, int d_edge_size);

    int vertex_count() const { return n_; }
    std::size_t slot_count() const { return slots_.size(); }
    std::size_t d_slot_count() const { return d_slots_; }

    bool is_canonical(std::uint64_t mask) const;
    std::uint64_t canonical_form(std::uint64_t mask) const;
    MixedHypergraph decode(std::uint64_t mask) const;

private:
    std::uint64_t apply(std::size_t perm, std::uint64_t mask) const;

    int n_;
    std::size_t d_slots_;
    std::vector<Edge> slots_;
    std::size_t chunks_;
    // lookup_[perm][chunk][byte] is the permuted image of those eight slots.
    std::vector<std::uint64_t> lookup_;
    std::size_t perm_count_;
};

// smallest_one_realization(s) has exactly delta(s) vertices and one-realizes s.
bool verify_smallest_realization(const SpecSet &s);

} // namespace mixhyp

#endif // MIXHYP_SEARCH_HPP
