#include "mixhyp/report.hpp"

#include "mixhyp/document.hpp"

#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <sstream>

namespace mixhyp {

namespace {

std::string join(const std::vector<int> &values, const char *open, const char *close)
{
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << values[i];
    os << close;
    return os.str();
}

std::string vertex_name(Vertex v, const std::vector<TupleLabel> &labels)
{
    if (labels.empty())
        return std::to_string(v);
    return join(labels[v].coords, "(", ")");
}

nlohmann::ordered_json optional_number(const std::optional<std::size_t> &x)
{
    return x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(nullptr);
}

} // namespace

std::string format_partition(const Partition &p, const std::vector<TupleLabel> &labels)
{
    std::ostringstream os;
    bool first_block = true;
    for (const auto &block : p.blocks()) {
        os << (first_block ? "{" : " {");
        for (std::size_t i = 0; i < block.size(); ++i)
            os << (i ? "," : "") << vertex_name(block[i], labels);
        os << '}';
        first_block = false;
    }
    return os.str();
}

RunReport make_spectrum_report(std::string command, const std::string &document_text,
                               const MixedHypergraph &h, bool list_colorings, unsigned jobs)
{
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.command = std::move(command);
    report.input_digest = content_digest(document_text);
    report.vertex_count = h.vertex_count();
    report.labels = h.labels();
    report.spectrum = chromatic_spectrum(h, jobs);
    report.feasible = feasible_set(report.spectrum);
    report.gap_values = gaps(report.feasible);
    report.lower_chromatic = report.spectrum.lower_chromatic();
    report.upper_chromatic = report.spectrum.upper_chromatic();
    if (list_colorings)
        report.colorings = enumerate_feasible(h, jobs);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string render(const RunReport &report, OutputFormat format)
{
    if (format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["command"] = report.command;
        j["input_digest"] = report.input_digest;
        j["vertex_count"] = report.vertex_count;
        j["spectrum"] = report.spectrum.counts;
        j["feasible_set"] = report.feasible.values();
        j["gaps"] = report.gap_values;
        j["lower_chromatic"] = optional_number(report.lower_chromatic);
        j["upper_chromatic"] = optional_number(report.upper_chromatic);
        if (report.colorings) {
            auto list = nlohmann::ordered_json::array();
            for (const auto &p : *report.colorings)
                list.push_back(p.blocks());
            j["colorings"] = std::move(list);
        }
        return j.dump() + "\n";
    }

    std::ostringstream os;
    auto or_none = [](const std::optional<std::size_t> &x) {
        return x ? std::to_string(*x) : std::string("none");
    };
    std::vector<int> counts(report.spectrum.counts.begin(), report.spectrum.counts.end());
    os << "command: " << report.command << '\n'
       << "input-digest: " << report.input_digest << '\n'
       << "vertices: " << report.vertex_count << '\n'
       << "spectrum: " << join(counts, "(", ")") << '\n'
       << "feasible-set: " << join(report.feasible.values(), "{", "}") << '\n'
       << "gaps: " << join(report.gap_values, "{", "}") << '\n'
       << "lower-chromatic: " << or_none(report.lower_chromatic) << '\n'
       << "upper-chromatic: " << or_none(report.upper_chromatic) << '\n';
    if (report.colorings) {
        os << "colorings: " << report.colorings->size() << '\n';
        for (const auto &p : *report.colorings)
            os << "  k=" << p.block_count() << ": " << format_partition(p, report.labels) << '\n';
    }
    return os.str();
}

std::string render(const SearchReport &report, const SpecSet &s, int n, OutputFormat format)
{
    if (format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["set"] = s.values();
        j["n"] = n;
        j["outcome"] = std::string(to_string(report.outcome));
        j["examined"] = report.examined;
        j["representatives"] = report.representatives;
        j["dedup_ratio"] = report.dedup_ratio;
        j["witness"] = report.witness ? nlohmann::ordered_json::parse(serialize(*report.witness))
                                      : nlohmann::ordered_json(nullptr);
        return j.dump() + "\n";
    }

    std::ostringstream os;
    os << "set: " << join(s.values(), "{", "}") << '\n'
       << "n: " << n << '\n'
       << "outcome: " << to_string(report.outcome) << '\n'
       << "examined: " << report.examined << '\n'
       << "representatives: " << report.representatives << '\n'
       << "dedup-ratio: " << std::fixed << std::setprecision(6) << report.dedup_ratio << '\n';
    if (report.witness) {
        os << "witness:\n" << serialize(*report.witness);
    }
    return os.str();
}

} // namespace mixhyp
