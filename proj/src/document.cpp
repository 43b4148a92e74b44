#include "mixhyp/document.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace mixhyp {

namespace {

template <typename Seq>
void write_list(std::ostream &os, const Seq &seq)
{
    os << '[';
    bool first = true;
    for (const auto &x : seq) {
        if (!first)
            os << ',';
        os << x;
        first = false;
    }
    os << ']';
}

void write_family(std::ostream &os, const char *key, const std::vector<Edge> &family, bool last)
{
    os << "  \"" << key << "\": ";
    if (family.empty()) {
        os << "[]";
    } else {
        os << "[\n";
        for (std::size_t i = 0; i < family.size(); ++i) {
            os << "    ";
            write_list(os, family[i]);
            os << (i + 1 < family.size() ? ",\n" : "\n");
        }
        os << "  ]";
    }
    os << (last ? "\n" : ",\n");
}

std::vector<Edge> read_family(const nlohmann::json &j, const char *key)
{
    if (!j.contains(key) || !j[key].is_array())
        throw DocumentError(std::string("missing or non-array \"") + key + "\"");
    std::vector<Edge> out;
    for (const auto &edge : j[key]) {
        if (!edge.is_array())
            throw DocumentError(std::string("\"") + key + "\" entries must be arrays");
        Edge e;
        for (const auto &v : edge) {
            if (!v.is_number_unsigned())
                throw DocumentError(std::string("\"") + key + "\" vertices must be non-negative integers");
            e.push_back(v.get<Vertex>());
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

HypergraphDocument to_document(const MixedHypergraph &h)
{
    HypergraphDocument doc;
    doc.vertex_count = h.vertex_count();
    for (const auto &label : h.labels())
        doc.labels.push_back(label.coords);
    doc.c_edges = h.c_edges();
    doc.d_edges = h.d_edges();
    return doc;
}

MixedHypergraph from_document(const HypergraphDocument &doc)
{
    if (doc.format_version != kDocumentFormatVersion)
        throw DocumentError("unsupported format_version " + std::to_string(doc.format_version));
    std::vector<TupleLabel> labels;
    for (const auto &coords : doc.labels) {
        for (int c : coords)
            if (c < 1)
                throw DocumentError("label coordinates must be positive");
        labels.push_back(TupleLabel{coords});
    }
    try {
        return MixedHypergraph(doc.vertex_count, doc.c_edges, doc.d_edges, std::move(labels));
    } catch (const std::invalid_argument &e) {
        throw DocumentError(e.what());
    }
}

std::string serialize(const MixedHypergraph &h)
{
    std::ostringstream os;
    os << "{\n";
    os << "  \"format_version\": " << kDocumentFormatVersion << ",\n";
    os << "  \"vertex_count\": " << h.vertex_count() << ",\n";
    os << "  \"labels\": ";
    if (h.has_labels()) {
        os << '[';
        for (std::size_t v = 0; v < h.vertex_count(); ++v) {
            if (v)
                os << ',';
            write_list(os, h.labels()[v].coords);
        }
        os << ']';
    } else {
        os << "null";
    }
    os << ",\n";
    write_family(os, "c_edges", h.c_edges(), false);
    write_family(os, "d_edges", h.d_edges(), true);
    os << "}\n";
    return os.str();
}

MixedHypergraph parse_hypergraph(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw DocumentError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw DocumentError("document must be a JSON object");

    HypergraphDocument doc;
    if (!j.contains("format_version") || !j["format_version"].is_number_integer())
        throw DocumentError("missing integer \"format_version\"");
    doc.format_version = j["format_version"].get<int>();
    if (!j.contains("vertex_count") || !j["vertex_count"].is_number_unsigned())
        throw DocumentError("missing non-negative integer \"vertex_count\"");
    doc.vertex_count = j["vertex_count"].get<std::size_t>();

    if (j.contains("labels") && !j["labels"].is_null()) {
        if (!j["labels"].is_array())
            throw DocumentError("\"labels\" must be an array or null");
        for (const auto &label : j["labels"]) {
            if (!label.is_array())
                throw DocumentError("\"labels\" entries must be arrays");
            std::vector<int> coords;
            for (const auto &c : label) {
                if (!c.is_number_integer())
                    throw DocumentError("label coordinates must be integers");
                coords.push_back(c.get<int>());
            }
            doc.labels.push_back(std::move(coords));
        }
    }
    doc.c_edges = read_family(j, "c_edges");
    doc.d_edges = read_family(j, "d_edges");
    return from_document(doc);
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DocumentError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DocumentError("cannot write " + path.string());
    out << text;
    if (!out)
        throw DocumentError("write failed for " + path.string());
}

std::string content_digest(std::string_view bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 digest failed");
    std::ostringstream os;
    os << "sha256:" << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i)
        os << std::setw(2) << static_cast<int>(md[i]);
    return os.str();
}

} // namespace mixhyp
