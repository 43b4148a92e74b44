#include "mixhyp/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace mixhyp {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<std::uint32_t> assignment)
    : assignment_(std::move(assignment)), blocks_(0)
{
    if (assignment_.empty())
        throw std::invalid_argument("partition of an empty vertex set");
    for (std::uint32_t b : assignment_) {
        if (b > blocks_)
            throw std::invalid_argument("assignment is not a restricted-growth string");
        if (b == blocks_)
            ++blocks_;
    }
}

Partition Partition::from_colors(std::span<const int> colors)
{
    std::map<int, std::uint32_t> rename;
    std::vector<std::uint32_t> rgs;
    rgs.reserve(colors.size());
    for (int c : colors) {
        auto [it, inserted] = rename.try_emplace(c, static_cast<std::uint32_t>(rename.size()));
        rgs.push_back(it->second);
    }
    return Partition(std::move(rgs));
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Vertex>> &blocks)
{
    std::vector<int> colors(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw std::invalid_argument("empty block");
        for (Vertex v : blocks[b]) {
            if (v >= n || colors[v] != -1)
                throw std::invalid_argument("blocks do not partition the vertex set");
            colors[v] = static_cast<int>(b);
        }
    }
    if (std::find(colors.begin(), colors.end(), -1) != colors.end())
        throw std::invalid_argument("blocks do not cover the vertex set");
    return from_colors(colors);
}

std::vector<std::vector<Vertex>> Partition::blocks() const
{
    std::vector<std::vector<Vertex>> out(blocks_);
    for (Vertex v = 0; v < assignment_.size(); ++v)
        out[assignment_[v]].push_back(v);
    return out;
}

Partition restrict_partition(const Partition &p, std::span<const Vertex> subset)
{
    std::vector<Vertex> kept(subset.begin(), subset.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    std::vector<int> colors;
    colors.reserve(kept.size());
    for (Vertex v : kept) {
        if (v >= p.vertex_count())
            throw std::invalid_argument("subset leaves the partitioned set");
        colors.push_back(static_cast<int>(p.block_of(v)));
    }
    return Partition::from_colors(colors);
}

// ---------------------------------------------------------------------------
// Spectrum / FeasibleSet

std::optional<std::size_t> Spectrum::upper_chromatic() const
{
    if (counts.empty())
        return std::nullopt;
    return counts.size();
}

std::optional<std::size_t> Spectrum::lower_chromatic() const
{
    for (std::size_t k = 1; k <= counts.size(); ++k)
        if (counts[k - 1] > 0)
            return k;
    return std::nullopt;
}

FeasibleSet::FeasibleSet(std::initializer_list<int> values)
    : FeasibleSet(std::vector<int>(values))
{
}

FeasibleSet::FeasibleSet(std::vector<int> values) : values_(std::move(values))
{
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (!values_.empty() && values_.front() < 1)
        throw std::invalid_argument("feasible set values must be positive");
}

bool FeasibleSet::contains(int k) const
{
    return std::binary_search(values_.begin(), values_.end(), k);
}

FeasibleSet feasible_set(const Spectrum &spectrum)
{
    std::vector<int> values;
    for (std::size_t k = 1; k <= spectrum.counts.size(); ++k)
        if (spectrum.counts[k - 1] > 0)
            values.push_back(static_cast<int>(k));
    return FeasibleSet(std::move(values));
}

bool has_gap_at(const FeasibleSet &f, int k)
{
    return !f.empty() && f.min() < k && k < f.max() && !f.contains(k);
}

bool is_gap_free(const FeasibleSet &f)
{
    return f.empty() || static_cast<std::size_t>(f.max() - f.min()) + 1 == f.size();
}

std::vector<int> gaps(const FeasibleSet &f)
{
    std::vector<int> out;
    if (f.empty())
        return out;
    for (int k = f.min() + 1; k < f.max(); ++k)
        if (!f.contains(k))
            out.push_back(k);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration engine

namespace {

using Mask = std::uint64_t;

// Edges as bitmasks, bucketed by their largest vertex: that is the vertex
// whose assignment decides the edge.
struct Closing {
    std::vector<std::vector<Mask>> c;
    std::vector<std::vector<Mask>> d;
};

Closing compile(const MixedHypergraph &h)
{
    const std::size_t n = h.vertex_count();
    if (n > kEnumerationVertexCap)
        throw std::length_error("coloring enumeration is limited to " +
                                std::to_string(kEnumerationVertexCap) + " vertices");
    Closing out{std::vector<std::vector<Mask>>(n), std::vector<std::vector<Mask>>(n)};
    auto add = [](auto &buckets, const Edge &e) {
        Mask m = 0;
        for (Vertex v : e)
            m |= Mask{1} << v;
        buckets[e.back()].push_back(m);
    };
    for (const auto &e : h.c_edges())
        add(out.c, e);
    for (const auto &e : h.d_edges())
        add(out.d, e);
    return out;
}

class Walker {
public:
    // target == 0 means any block count.
    Walker(const Closing &closing, std::size_t n, std::size_t target)
        : closing_(closing), n_(n), target_(target), rgs_(n, 0), blocks_(n, 0)
    {
    }

    // Loads a prefix that is already known to be consistent.
    void load(std::span<const std::uint32_t> prefix)
    {
        std::fill(blocks_.begin(), blocks_.end(), 0);
        used_ = 0;
        for (Vertex v = 0; v < prefix.size(); ++v) {
            rgs_[v] = prefix[v];
            blocks_[prefix[v]] |= Mask{1} << v;
            used_ = std::max<std::size_t>(used_, prefix[v] + 1);
        }
    }

    // Visits every consistent extension of the loaded prefix down to `stop`
    // (exclusive). visit(rgs, used_blocks) sees rgs[0..stop).
    template <typename Visit>
    void walk(Vertex v, Vertex stop, Visit &visit)
    {
        if (v == stop) {
            if (stop < n_ || target_ == 0 || used_ == target_)
                visit(std::span<const std::uint32_t>(rgs_.data(), stop), used_);
            return;
        }
        const std::size_t after = n_ - v - 1;
        for (std::uint32_t b = 0; b <= used_; ++b) {
            const bool opens = b == used_;
            const std::size_t reach = opens ? used_ + 1 : used_;
            if (target_ != 0 && (reach > target_ || reach + after < target_))
                continue;
            if (!fits(v, b))
                continue;
            rgs_[v] = b;
            blocks_[b] |= Mask{1} << v;
            const std::size_t saved = used_;
            used_ = reach;
            walk(v + 1, stop, visit);
            used_ = saved;
            blocks_[b] &= ~(Mask{1} << v);
        }
    }

private:
    bool fits(Vertex v, std::uint32_t b) const
    {
        const Mask here = blocks_[b] | (Mask{1} << v);
        for (Mask e : closing_.d[v])
            if ((e & ~here) == 0)
                return false;
        for (Mask e : closing_.c[v]) {
            bool common = std::popcount(e & here) >= 2;
            for (std::uint32_t j = 0; !common && j < used_; ++j)
                common = j != b && std::popcount(e & blocks_[j]) >= 2;
            if (!common)
                return false;
        }
        return true;
    }

    const Closing &closing_;
    std::size_t n_;
    std::size_t target_;
    std::vector<std::uint32_t> rgs_;
    std::vector<Mask> blocks_;
    std::size_t used_ = 0;
};

// Runs the walk and hands each subtree's results to `Sink` in lexicographic
// prefix order. Sink is default-constructible and provides
// on_leaf(rgs, used) and merge(Sink&&).
template <typename Sink>
Sink run_walk(const MixedHypergraph &h, std::size_t target, unsigned jobs)
{
    const Closing closing = compile(h);
    const std::size_t n = h.vertex_count();

    auto leaf = [](Sink &sink) {
        return [&sink](std::span<const std::uint32_t> rgs, std::size_t used) {
            sink.on_leaf(rgs, used);
        };
    };

    if (jobs <= 1 || n < 2) {
        Sink sink;
        Walker walker(closing, n, target);
        auto visit = leaf(sink);
        walker.walk(0, static_cast<Vertex>(n), visit);
        return sink;
    }

    // Deepen the split until there is enough work to share.
    std::vector<std::vector<std::uint32_t>> prefixes;
    for (Vertex depth = 1; depth < n; ++depth) {
        prefixes.clear();
        Walker walker(closing, n, target);
        auto collect = [&](std::span<const std::uint32_t> rgs, std::size_t) {
            prefixes.emplace_back(rgs.begin(), rgs.end());
        };
        walker.walk(0, depth, collect);
        if (prefixes.size() >= 4 * static_cast<std::size_t>(jobs))
            break;
    }

    std::vector<Sink> parts(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        Walker walker(closing, n, target);
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            walker.load(prefixes[i]);
            auto visit = leaf(parts[i]);
            walker.walk(static_cast<Vertex>(prefixes[i].size()), static_cast<Vertex>(n), visit);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(work);
    }

    Sink merged;
    for (auto &part : parts)
        merged.merge(std::move(part));
    return merged;
}

struct CollectSink {
    std::vector<Partition> partitions;

    void on_leaf(std::span<const std::uint32_t> rgs, std::size_t)
    {
        partitions.emplace_back(std::vector<std::uint32_t>(rgs.begin(), rgs.end()));
    }
    void merge(CollectSink &&other)
    {
        partitions.insert(partitions.end(), std::make_move_iterator(other.partitions.begin()),
                          std::make_move_iterator(other.partitions.end()));
    }
};

struct CountSink {
    std::vector<std::uint64_t> counts;

    void on_leaf(std::span<const std::uint32_t>, std::size_t used)
    {
        if (counts.size() < used)
            counts.resize(used, 0);
        ++counts[used - 1];
    }
    void merge(CountSink &&other)
    {
        if (counts.size() < other.counts.size())
            counts.resize(other.counts.size(), 0);
        for (std::size_t i = 0; i < other.counts.size(); ++i)
            counts[i] += other.counts[i];
    }
};

} // namespace

bool is_proper(const MixedHypergraph &h, const Partition &p)
{
    if (p.vertex_count() != h.vertex_count())
        throw std::invalid_argument("partition does not cover the hypergraph's vertex set");
    auto monochromatic = [&](const Edge &e) {
        return std::all_of(e.begin(), e.end(),
                           [&](Vertex v) { return p.block_of(v) == p.block_of(e.front()); });
    };
    auto has_common_pair = [&](const Edge &e) {
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                if (p.block_of(e[i]) == p.block_of(e[j]))
                    return true;
        return false;
    };
    return std::all_of(h.c_edges().begin(), h.c_edges().end(), has_common_pair) &&
           std::none_of(h.d_edges().begin(), h.d_edges().end(), monochromatic);
}

std::vector<Partition> enumerate_strict(const MixedHypergraph &h, std::size_t k, unsigned jobs)
{
    if (k < 1 || k > h.vertex_count())
        throw std::invalid_argument("block count " + std::to_string(k) + " outside [1, " +
                                    std::to_string(h.vertex_count()) + "]");
    return run_walk<CollectSink>(h, k, jobs).partitions;
}

std::vector<Partition> enumerate_feasible(const MixedHypergraph &h, unsigned jobs)
{
    return run_walk<CollectSink>(h, 0, jobs).partitions;
}

Spectrum chromatic_spectrum(const MixedHypergraph &h, unsigned jobs)
{
    return Spectrum{run_walk<CountSink>(h, 0, jobs).counts};
}

FeasibleSet feasible_set(const MixedHypergraph &h, unsigned jobs)
{
    return feasible_set(chromatic_spectrum(h, jobs));
}

} // namespace mixhyp
