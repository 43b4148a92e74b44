#include "mixhyp/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace mixhyp {

SpecSet::SpecSet(std::vector<int> values) : values_(std::move(values))
{
    std::sort(values_.begin(), values_.end(), std::greater<>());
    if (values_.size() < 2)
        throw std::invalid_argument("target set needs at least two values");
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end())
        throw std::invalid_argument("target set has duplicate values");
    if (values_.back() < 2)
        throw std::invalid_argument("target set values must be at least 2");
}

std::vector<TupleLabel> ConstructionVertexSet::ordered() const
{
    std::vector<TupleLabel> out = diagonal;
    out.insert(out.end(), steps.begin(), steps.end());
    out.push_back(apex);
    return out;
}

ConstructionVertexSet construction_vertices(const SpecSet &s)
{
    const std::size_t len = s.size();
    ConstructionVertexSet out;

    for (int i = 1; i <= s.smallest() - 1; ++i)
        out.diagonal.push_back(TupleLabel{std::vector<int>(len, i)});

    for (std::size_t t = 2; t <= len; ++t) {
        for (int j = s.n(t); j <= s.n(t - 1) - 1; ++j) {
            TupleLabel upper{std::vector<int>(t - 1, j)};
            TupleLabel lower = upper;
            for (std::size_t r = t; r <= len; ++r) {
                upper.coords.push_back(s.n(r));
                lower.coords.push_back(1);
            }
            out.steps.push_back(std::move(upper));
            out.steps.push_back(std::move(lower));
        }
    }

    out.apex.coords = s.values();
    return out;
}

bool differ_everywhere(const TupleLabel &x, const TupleLabel &y)
{
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i] == y.coords[i])
            return false;
    return true;
}

bool two_valued_everywhere(const TupleLabel &x, const TupleLabel &y, const TupleLabel &z)
{
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        const int a = x.coords[i], b = y.coords[i], c = z.coords[i];
        const int distinct = 1 + (b != a) + (c != a && c != b);
        if (distinct != 2)
            return false;
    }
    return true;
}

MixedHypergraph construct_one(const SpecSet &s)
{
    auto labels = construction_vertices(s).ordered();
    const auto m = static_cast<Vertex>(labels.size());

    std::vector<Edge> d_edges;
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = a + 1; b < m; ++b)
            if (differ_everywhere(labels[a], labels[b]))
                d_edges.push_back({a, b});

    std::vector<Edge> c_edges;
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = a + 1; b < m; ++b)
            for (Vertex c = b + 1; c < m; ++c)
                if (two_valued_everywhere(labels[a], labels[b], labels[c]))
                    c_edges.push_back({a, b, c});

    return MixedHypergraph(m, std::move(c_edges), std::move(d_edges), std::move(labels));
}

namespace {

TupleLabel removed_label(const SpecSet &s)
{
    TupleLabel label{std::vector<int>(s.size(), 1)};
    label.coords[0] = s.n(2);
    return label;
}

void require_top_adjacent(const SpecSet &s)
{
    if (!s.top_adjacent())
        throw std::invalid_argument("second construction needs n_1 = n_2 + 1, got n_1 = " +
                                    std::to_string(s.n(1)) + ", n_2 = " + std::to_string(s.n(2)));
}

} // namespace

MixedHypergraph construct_two(const SpecSet &s)
{
    require_top_adjacent(s);
    const MixedHypergraph full = construct_one(s);
    return delete_vertex(full, *full.find_label(removed_label(s)));
}

MixedHypergraph construct(const SpecSet &s, Variant variant)
{
    return variant == Variant::one ? construct_one(s) : construct_two(s);
}

Partition canonical_coloring(const SpecSet &s, std::size_t i, Variant variant)
{
    if (i < 1 || i > s.size())
        throw std::invalid_argument("coordinate index " + std::to_string(i) + " outside [1, " +
                                    std::to_string(s.size()) + "]");
    if (variant == Variant::two)
        require_top_adjacent(s);

    auto labels = construction_vertices(s).ordered();
    if (variant == Variant::two)
        labels.erase(std::find(labels.begin(), labels.end(), removed_label(s)));

    std::vector<int> colors;
    colors.reserve(labels.size());
    for (const auto &label : labels)
        colors.push_back(label.coords[i - 1]);
    return Partition::from_colors(colors);
}

int delta(const SpecSet &s)
{
    return s.top_adjacent() ? 2 * s.largest() - s.smallest() - 1 : 2 * s.largest() - s.smallest();
}

MixedHypergraph smallest_one_realization(const SpecSet &s)
{
    return s.top_adjacent() ? construct_two(s) : construct_one(s);
}

bool is_feasible_set_predicate(const FeasibleSet &f)
{
    if (f.empty())
        throw std::invalid_argument("feasibility predicate needs a nonempty set");
    return !f.contains(1) || is_gap_free(f);
}

} // namespace mixhyp
