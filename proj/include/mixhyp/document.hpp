#ifndef MIXHYP_DOCUMENT_HPP
#define MIXHYP_DOCUMENT_HPP

#include "mixhyp/core.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mixhyp {

inline constexpr int kDocumentFormatVersion = 1;

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// On-disk form of a hypergraph. Serialized as JSON with a fixed key order,
/// one edge per line, edges sorted ascending and families sorted
/// lexicographically, so equal hypergraphs serialize to identical bytes.
///
///     {
///       "format_version": 1,
///       "vertex_count": 3,
///       "labels": [[1,1],[2,2],[3,2]],
///       "c_edges": [],
///       "d_edges": [
///         [0,1],
///         [0,2]
///       ]
///     }
///
/// "labels" is optional (null or absent when the hypergraph is unlabelled).
struct HypergraphDocument {
    int format_version = kDocumentFormatVersion;
    std::size_t vertex_count = 0;
    std::vector<std::vector<int>> labels;
    std::vector<Edge> c_edges;
    std::vector<Edge> d_edges;
};

HypergraphDocument to_document(const MixedHypergraph &h);
// Throws DocumentError if the document does not describe a valid hypergraph.
MixedHypergraph from_document(const HypergraphDocument &doc);

std::string serialize(const MixedHypergraph &h);
MixedHypergraph parse_hypergraph(std::string_view text);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

// "sha256:" followed by the lowercase hex digest of `bytes`.
std::string content_digest(std::string_view bytes);

} // namespace mixhyp

#endif // MIXHYP_DOCUMENT_HPP
