#include "mixhyp/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace mixhyp {

bool is_realization(const MixedHypergraph &h, const FeasibleSet &target)
{
    return feasible_set(h) == target;
}

bool is_one_realization(const MixedHypergraph &h, const FeasibleSet &target)
{
    const Spectrum spectrum = chromatic_spectrum(h);
    return feasible_set(spectrum) == target &&
           std::all_of(spectrum.counts.begin(), spectrum.counts.end(),
                       [](std::uint64_t r) { return r <= 1; });
}

std::vector<std::pair<Vertex, bool>> deletion_criticality(const MixedHypergraph &h,
                                                          const FeasibleSet &target)
{
    std::vector<std::pair<Vertex, bool>> flags;
    if (h.vertex_count() < 2)
        return flags;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        flags.emplace_back(v, is_one_realization(delete_vertex(h, v), target));
    return flags;
}

bool verify_smallest_realization(const SpecSet &s)
{
    const MixedHypergraph h = smallest_one_realization(s);
    return static_cast<int>(h.vertex_count()) == delta(s) && is_one_realization(h, s.as_set());
}

std::string_view to_string(SearchOutcome outcome)
{
    switch (outcome) {
    case SearchOutcome::witness_found:
        return "witness-found";
    case SearchOutcome::exhausted:
        return "exhausted";
    case SearchOutcome::budget_exceeded:
        return "budget-exceeded";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// CandidateSpace

namespace {

void append_subsets(int n, int size, std::vector<Edge> &out)
{
    if (size > n)
        return;
    Edge current(static_cast<std::size_t>(size));
    std::iota(current.begin(), current.end(), Vertex{0});
    while (true) {
        out.push_back(current);
        int i = size - 1;
        while (i >= 0 && current[i] == static_cast<Vertex>(n - size + i))
            --i;
        if (i < 0)
            return;
        ++current[i];
        for (int j = i + 1; j < size; ++j)
            current[j] = current[j - 1] + 1;
    }
}

} // namespace

CandidateSpace::CandidateSpace(int n, int c_edge_size, int d_edge_size) : n_(n)
{
    if (n < 1 || n > kSearchVertexCap)
        throw std::invalid_argument("candidate space needs 1 <= n <= " +
                                    std::to_string(kSearchVertexCap));
    if (c_edge_size < 2 || d_edge_size < 2)
        throw std::invalid_argument("edge sizes must be at least 2");

    append_subsets(n, d_edge_size, slots_);
    d_slots_ = slots_.size();
    append_subsets(n, c_edge_size, slots_);
    if (slots_.size() > 63)
        throw std::invalid_argument("candidate space does not fit a 64-bit mask");

    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    perm_count_ = perms.size();

    chunks_ = (slots_.size() + 7) / 8;
    lookup_.assign(perm_count_ * chunks_ * 256, 0);
    std::vector<std::uint64_t> slot_image(slots_.size());
    for (std::size_t p = 0; p < perm_count_; ++p) {
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            Edge mapped;
            for (Vertex v : slots_[i])
                mapped.push_back(perms[p][v]);
            std::sort(mapped.begin(), mapped.end());
            const auto first = i < d_slots_ ? slots_.begin() : slots_.begin() + d_slots_;
            const auto last = i < d_slots_ ? slots_.begin() + d_slots_ : slots_.end();
            const auto j = static_cast<std::size_t>(std::lower_bound(first, last, mapped) - slots_.begin());
            slot_image[i] = std::uint64_t{1} << j;
        }
        for (std::size_t c = 0; c < chunks_; ++c) {
            std::uint64_t *table = &lookup_[(p * chunks_ + c) * 256];
            for (unsigned byte = 1; byte < 256; ++byte) {
                const unsigned low = std::countr_zero(byte);
                const std::size_t slot = c * 8 + low;
                table[byte] = table[byte & (byte - 1)] | (slot < slots_.size() ? slot_image[slot] : 0);
            }
        }
    }
}

std::uint64_t CandidateSpace::apply(std::size_t perm, std::uint64_t mask) const
{
    const std::uint64_t *table = &lookup_[perm * chunks_ * 256];
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < chunks_; ++c, mask >>= 8, table += 256)
        out |= table[mask & 0xff];
    return out;
}

bool CandidateSpace::is_canonical(std::uint64_t mask) const
{
    // Permutation 0 is the identity.
    for (std::size_t p = 1; p < perm_count_; ++p)
        if (apply(p, mask) < mask)
            return false;
    return true;
}

std::uint64_t CandidateSpace::canonical_form(std::uint64_t mask) const
{
    std::uint64_t best = mask;
    for (std::size_t p = 1; p < perm_count_; ++p)
        best = std::min(best, apply(p, mask));
    return best;
}

MixedHypergraph CandidateSpace::decode(std::uint64_t mask) const
{
    std::vector<Edge> c_edges, d_edges;
    for (std::size_t i = 0; i < slots_.size(); ++i)
        if (mask >> i & 1)
            (i < d_slots_ ? d_edges : c_edges).push_back(slots_[i]);
    return MixedHypergraph(static_cast<std::size_t>(n_), std::move(c_edges), std::move(d_edges));
}

// ---------------------------------------------------------------------------
// Search

namespace {

std::vector<std::uint64_t> masks_with_popcount(std::size_t slots, std::size_t weight)
{
    std::vector<std::uint64_t> out;
    if (weight == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint64_t limit = std::uint64_t{1} << slots;
    std::uint64_t m = (std::uint64_t{1} << weight) - 1;
    while (m < limit) {
        out.push_back(m);
        // Gosper's hack: next larger mask with the same popcount.
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

struct LevelResult {
    std::size_t first_witness = std::numeric_limits<std::size_t>::max();
    std::vector<std::uint8_t> canonical;
};

LevelResult scan_level(const CandidateSpace &space, const std::vector<std::uint64_t> &level,
                       const FeasibleSet &target, unsigned jobs)
{
    constexpr std::size_t chunk = 256;
    LevelResult result;
    result.canonical.assign(level.size(), 0);
    std::atomic<std::size_t> best{result.first_witness};
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t start = next.fetch_add(chunk); start < level.size();
             start = next.fetch_add(chunk)) {
            if (start > best.load())
                return;
            const std::size_t stop = std::min(level.size(), start + chunk);
            for (std::size_t i = start; i < stop; ++i) {
                if (!space.is_canonical(level[i]))
                    continue;
                result.canonical[i] = 1;
                if (is_one_realization(space.decode(level[i]), target)) {
                    std::size_t seen = best.load();
                    while (i < seen && !best.compare_exchange_weak(seen, i)) {
                    }
                    break;
                }
            }
        }
    };

    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(work);
    }
    result.first_witness = best.load();
    return result;
}

} // namespace

SearchReport bounded_minimality_search(const SpecSet &s, int n, const SearchBudget &budget)
{
    if (budget.max_vertices > kSearchVertexCap)
        throw std::invalid_argument("search budget allows at most " +
                                    std::to_string(kSearchVertexCap) + " vertices");
    if (n < 1 || n > budget.max_vertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(budget.max_vertices) + "]");

    const CandidateSpace space(n, budget.c_edge_size, budget.d_edge_size);
    const FeasibleSet target = s.as_set();
    SearchReport report;

    const std::size_t slots = space.slot_count();
    if (slots >= 63 || (std::uint64_t{1} << slots) > budget.max_candidates) {
        report.outcome = SearchOutcome::budget_exceeded;
        return report;
    }

    for (std::size_t weight = 0; weight <= slots; ++weight) {
        const auto level = masks_with_popcount(slots, weight);
        const LevelResult scanned = scan_level(space, level, target, budget.jobs);
        const bool found = scanned.first_witness < level.size();
        const std::size_t counted = found ? scanned.first_witness + 1 : level.size();
        report.examined += counted;
        report.representatives += static_cast<std::uint64_t>(
            std::count(scanned.canonical.begin(), scanned.canonical.begin() + counted, 1));
        if (found) {
            report.outcome = SearchOutcome::witness_found;
            report.witness = space.decode(level[scanned.first_witness]);
            break;
        }
    }

    if (report.examined > 0)
        report.dedup_ratio = static_cast<double>(report.examined - report.representatives) /
                             static_cast<double>(report.examined);
    return report;
}

} // namespace mixhyp
