#ifndef MIXHYP_REPORT_HPP
#define MIXHYP_REPORT_HPP

#include "mixhyp/coloring.hpp"
#include "mixhyp/core.hpp"
#include "mixhyp/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mixhyp {

enum class OutputFormat { text, json };

// Result of the spectrum command. Rendering is a pure function of these
// fields; wall-clock timing is carried alongside but never rendered.
struct RunReport {
    std::string command;
    std::string input_digest;
    std::size_t vertex_count = 0;
    Spectrum spectrum;
    FeasibleSet feasible;
    std::vector<int> gap_values;
    std::optional<std::size_t> lower_chromatic;
    std::optional<std::size_t> upper_chromatic;
    std::optional<std::vector<Partition>> colorings;
    std::vector<TupleLabel> labels;
    double seconds = 0.0;
};

RunReport make_spectrum_report(std::string command, const std::string &document_text,
                               const MixedHypergraph &h, bool list_colorings, unsigned jobs);

std::string render(const RunReport &report, OutputFormat format);
std::string render(const SearchReport &report, const SpecSet &s, int n, OutputFormat format);

// "{a,b,c}" for blocks; labelled vertices print as their tuples.
std::string format_partition(const Partition &p, const std::vector<TupleLabel> &labels);

} // namespace mixhyp

#endif // MIXHYP_REPORT_HPP
