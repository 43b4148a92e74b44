#include "mixhyp/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mixhyp {

namespace {

void canonicalize_family(std::vector<Edge> &family, std::size_t n, const char *kind)
{
    for (auto &edge : family) {
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw std::invalid_argument(std::string(kind) + "-edge repeats a vertex");
        if (edge.size() < 2)
            throw std::invalid_argument(std::string(kind) + "-edge has fewer than 2 vertices");
        if (edge.back() >= n)
            throw std::invalid_argument(std::string(kind) + "-edge vertex " +
                                        std::to_string(edge.back()) + " out of range");
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

using Mask = std::uint64_t;

Mask edge_mask(const Edge &edge, std::span<const Vertex> image = {})
{
    Mask m = 0;
    for (Vertex v : edge)
        m |= Mask{1} << (image.empty() ? v : image[v]);
    return m;
}

std::vector<Mask> family_masks(const std::vector<Edge> &family)
{
    std::vector<Mask> out;
    out.reserve(family.size());
    for (const auto &e : family)
        out.push_back(edge_mask(e));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> size_multiset(const std::vector<Edge> &family)
{
    std::vector<std::size_t> sizes;
    for (const auto &e : family)
        sizes.push_back(e.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

// Sizes of C-edges and D-edges through each vertex, sorted.
struct Signature {
    std::vector<std::size_t> c_sizes;
    std::vector<std::size_t> d_sizes;

    bool operator==(const Signature &) const = default;
};

std::vector<Signature> signatures(const MixedHypergraph &h)
{
    std::vector<Signature> sig(h.vertex_count());
    for (const auto &e : h.c_edges())
        for (Vertex v : e)
            sig[v].c_sizes.push_back(e.size());
    for (const auto &e : h.d_edges())
        for (Vertex v : e)
            sig[v].d_sizes.push_back(e.size());
    for (auto &s : sig) {
        std::sort(s.c_sizes.begin(), s.c_sizes.end());
        std::sort(s.d_sizes.begin(), s.d_sizes.end());
    }
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const MixedHypergraph &a, const MixedHypergraph &b)
        : n_(a.vertex_count()), sig_a_(signatures(a)), sig_b_(signatures(b)),
          c_b_(family_masks(b.c_edges())), d_b_(family_masks(b.d_edges())),
          c_closing_(n_), d_closing_(n_), image_(n_), used_(n_, false)
    {
        for (const auto &e : a.c_edges())
            c_closing_[e.back()].push_back(&e);
        for (const auto &e : a.d_edges())
            d_closing_[e.back()].push_back(&e);
    }

    bool run() { return extend(0); }
    const std::vector<Vertex> &image() const { return image_; }

private:
    bool closes_consistently(Vertex v) const
    {
        for (const Edge *e : c_closing_[v])
            if (!std::binary_search(c_b_.begin(), c_b_.end(), edge_mask(*e, image_)))
                return false;
        for (const Edge *e : d_closing_[v])
            if (!std::binary_search(d_b_.begin(), d_b_.end(), edge_mask(*e, image_)))
                return false;
        return true;
    }

    bool extend(Vertex v)
    {
        if (v == n_)
            return true;
        for (Vertex w = 0; w < n_; ++w) {
            if (used_[w] || !(sig_a_[v] == sig_b_[w]))
                continue;
            image_[v] = w;
            used_[w] = true;
            if (closes_consistently(v) && extend(v + 1))
                return true;
            used_[w] = false;
        }
        return false;
    }

    std::size_t n_;
    std::vector<Signature> sig_a_, sig_b_;
    std::vector<Mask> c_b_, d_b_;
    std::vector<std::vector<const Edge *>> c_closing_, d_closing_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
};

} // namespace

MixedHypergraph::MixedHypergraph(std::size_t n, std::vector<Edge> c_edges,
                                 std::vector<Edge> d_edges, std::vector<TupleLabel> labels)
    : n_(n), c_edges_(std::move(c_edges)), d_edges_(std::move(d_edges)), labels_(std::move(labels))
{
    if (n_ == 0)
        throw std::invalid_argument("hypergraph needs at least one vertex");
    if (!labels_.empty() && labels_.size() != n_)
        throw std::invalid_argument("label count does not match vertex count");
    canonicalize_family(c_edges_, n_, "C");
    canonicalize_family(d_edges_, n_, "D");
}

std::optional<Vertex> MixedHypergraph::find_label(const TupleLabel &label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Vertex> MixedHypergraph::vertices() const
{
    std::vector<Vertex> out(n_);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

MixedHypergraph derived_subhypergraph(const MixedHypergraph &h, std::span<const Vertex> subset)
{
    if (subset.empty())
        throw std::invalid_argument("derived sub-hypergraph needs a nonempty vertex subset");

    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> renumber(h.vertex_count(), absent);
    std::vector<Vertex> kept(subset.begin(), subset.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw std::invalid_argument("vertex subset repeats a vertex");
    if (kept.back() >= h.vertex_count())
        throw std::invalid_argument("vertex subset leaves the vertex set");
    for (std::size_t i = 0; i < kept.size(); ++i)
        renumber[kept[i]] = static_cast<Vertex>(i);

    auto restrict_family = [&](const std::vector<Edge> &family) {
        std::vector<Edge> out;
        for (const auto &e : family) {
            if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return renumber[v] == absent; }))
                continue;
            Edge r;
            r.reserve(e.size());
            for (Vertex v : e)
                r.push_back(renumber[v]);
            out.push_back(std::move(r));
        }
        return out;
    };

    std::vector<TupleLabel> labels;
    if (h.has_labels())
        for (Vertex v : kept)
            labels.push_back(h.label(v));

    return MixedHypergraph(kept.size(), restrict_family(h.c_edges()),
                           restrict_family(h.d_edges()), std::move(labels));
}

MixedHypergraph delete_vertex(const MixedHypergraph &h, Vertex v)
{
    if (v >= h.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " not present");
    if (h.vertex_count() == 1)
        throw std::invalid_argument("cannot delete the last vertex");
    auto rest = h.vertices();
    rest.erase(rest.begin() + v);
    return derived_subhypergraph(h, rest);
}

MixedHypergraph permute(const MixedHypergraph &h, std::span<const Vertex> perm)
{
    const std::size_t n = h.vertex_count();
    if (perm.size() != n)
        throw std::invalid_argument("permutation size does not match vertex count");
    std::vector<bool> seen(n, false);
    for (Vertex v : perm) {
        if (v >= n || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }

    auto map_family = [&](const std::vector<Edge> &family) {
        std::vector<Edge> out;
        out.reserve(family.size());
        for (const auto &e : family) {
            Edge m;
            m.reserve(e.size());
            for (Vertex v : e)
                m.push_back(perm[v]);
            out.push_back(std::move(m));
        }
        return out;
    };

    std::vector<TupleLabel> labels;
    if (h.has_labels()) {
        labels.resize(n);
        for (Vertex v = 0; v < n; ++v)
            labels[perm[v]] = h.label(v);
    }
    return MixedHypergraph(n, map_family(h.c_edges()), map_family(h.d_edges()), std::move(labels));
}

std::optional<IsoMapping> are_isomorphic(const MixedHypergraph &a, const MixedHypergraph &b)
{
    if (a.vertex_count() > kIsomorphismVertexCap || b.vertex_count() > kIsomorphismVertexCap)
        throw std::length_error("isomorphism test is limited to " +
                                std::to_string(kIsomorphismVertexCap) + " vertices");
    if (a.vertex_count() != b.vertex_count())
        return std::nullopt;
    if (size_multiset(a.c_edges()) != size_multiset(b.c_edges()) ||
        size_multiset(a.d_edges()) != size_multiset(b.d_edges()))
        return std::nullopt;

    IsoSearch search(a, b);
    if (!search.run())
        return std::nullopt;
    return IsoMapping{search.image()};
}

bool is_isomorphism(const MixedHypergraph &a, const MixedHypergraph &b, const IsoMapping &mapping)
{
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || mapping.image.size() != n)
        return false;
    if (n > 64)
        throw std::length_error("isomorphism check is limited to 64 vertices");
    std::vector<bool> hit(n, false);
    for (Vertex w : mapping.image) {
        if (w >= n || hit[w])
            return false;
        hit[w] = true;
    }
    auto images = [&](const std::vector<Edge> &family) {
        std::vector<Mask> out;
        for (const auto &e : family)
            out.push_back(edge_mask(e, mapping.image));
        std::sort(out.begin(), out.end());
        return out;
    };
    return images(a.c_edges()) == family_masks(b.c_edges()) &&
           images(a.d_edges()) == family_masks(b.d_edges());
}

} // namespace mixhyp
