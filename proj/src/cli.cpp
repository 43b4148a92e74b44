#include "mixhyp/cli.hpp"

#include "mixhyp/coloring.hpp"
#include "mixhyp/constructions.hpp"
#include "mixhyp/document.hpp"
#include "mixhyp/report.hpp"
#include "mixhyp/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace mixhyp {

namespace {

struct Options {
    std::vector<int> set;
    std::string variant = "auto";
    std::string out_path;
    std::string format = "text";
    std::vector<std::string> inputs;
    std::string input;
    bool list_colorings = false;
    unsigned jobs = 1;
    int n = 0;
    SearchBudget budget;
};

OutputFormat output_format(const Options &o)
{
    return o.format == "json" ? OutputFormat::json : OutputFormat::text;
}

std::string braces(const std::vector<int> &values)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << values[i];
    os << '}';
    return os.str();
}

struct Loaded {
    std::string text;
    MixedHypergraph h;
};

Loaded load(const std::string &path)
{
    std::string text = read_text_file(path);
    MixedHypergraph h = parse_hypergraph(text);
    return {std::move(text), std::move(h)};
}

int cmd_construct(const Options &o, std::ostream &out, std::ostream &err)
{
    const SpecSet s(o.set);
    Variant variant = s.top_adjacent() ? Variant::two : Variant::one;
    if (o.variant == "one")
        variant = Variant::one;
    else if (o.variant == "two")
        variant = Variant::two;
    const MixedHypergraph h = construct(s, variant);
    const std::string doc = serialize(h);

    std::ostringstream summary;
    if (output_format(o) == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["set"] = s.values();
        j["variant"] = variant == Variant::one ? "one" : "two";
        j["vertex_count"] = h.vertex_count();
        j["delta"] = delta(s);
        if (!o.out_path.empty())
            j["out"] = o.out_path;
        summary << j.dump() << '\n';
    } else {
        summary << "set: " << braces(s.values()) << '\n'
                << "variant: " << (variant == Variant::one ? "one" : "two") << '\n'
                << "vertices: " << h.vertex_count() << '\n'
                << "delta: " << delta(s) << '\n';
    }

    if (o.out_path.empty()) {
        out << doc;
        err << summary.str();
    } else {
        write_text_file(o.out_path, doc);
        out << summary.str();
    }
    return kExitOk;
}

int cmd_spectrum(const Options &o, std::ostream &out, std::ostream &err)
{
    const Loaded in = load(o.input);
    std::string command = "spectrum " + o.input;
    if (o.list_colorings)
        command += " --list-colorings";
    const RunReport report = make_spectrum_report(command, in.text, in.h, o.list_colorings, o.jobs);
    out << render(report, output_format(o));
    err << "elapsed: " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
    return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &)
{
    const Loaded in = load(o.input);
    const FeasibleSet target(o.set);
    if (target.empty())
        throw std::invalid_argument("verify needs a nonempty --set");
    const Spectrum spectrum = chromatic_spectrum(in.h, o.jobs);
    const FeasibleSet found = feasible_set(spectrum);

    std::vector<std::string> problems;
    for (int k : target.values())
        if (!found.contains(k))
            problems.push_back(std::to_string(k) + " not feasible");
    for (int k : found.values())
        if (!target.contains(k))
            problems.push_back(std::to_string(k) + " feasible but not in the target set");
    for (std::size_t k = 1; k <= spectrum.counts.size(); ++k)
        if (spectrum.counts[k - 1] > 1)
            problems.push_back("r_" + std::to_string(k) + " = " + std::to_string(spectrum.counts[k - 1]));

    if (output_format(o) == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["target"] = target.values();
        j["spectrum"] = spectrum.counts;
        j["one_realization"] = problems.empty();
        j["problems"] = problems;
        out << j.dump() << '\n';
    } else {
        out << "target: " << braces(target.values()) << '\n'
            << "feasible-set: " << braces(found.values()) << '\n'
            << "one-realization: " << (problems.empty() ? "yes" : "no") << '\n';
        for (const auto &p : problems)
            out << "  " << p << '\n';
    }
    return problems.empty() ? kExitOk : kExitNegative;
}

int cmd_search_min(const Options &o, std::ostream &out, std::ostream &)
{
    const SpecSet s(o.set);
    const SearchReport report = bounded_minimality_search(s, o.n, o.budget);
    out << render(report, s, o.n, output_format(o));
    return report.outcome == SearchOutcome::budget_exceeded ? kExitInvalid : kExitOk;
}

int cmd_iso(const Options &o, std::ostream &out, std::ostream &)
{
    const Loaded a = load(o.inputs.at(0));
    const Loaded b = load(o.inputs.at(1));
    const auto mapping = are_isomorphic(a.h, b.h);
    if (output_format(o) == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["isomorphic"] = mapping.has_value();
        j["mapping"] = mapping ? nlohmann::ordered_json(mapping->image) : nlohmann::ordered_json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << "isomorphic: " << (mapping ? "yes" : "no") << '\n';
        if (mapping) {
            out << "mapping:";
            for (Vertex v = 0; v < mapping->image.size(); ++v)
                out << ' ' << v << "->" << mapping->image[v];
            out << '\n';
        }
    }
    return mapping ? kExitOk : kExitNegative;
}

int cmd_delta(const Options &o, std::ostream &out, std::ostream &)
{
    const SpecSet s(o.set);
    if (output_format(o) == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["set"] = s.values();
        j["delta"] = delta(s);
        out << j.dump() << '\n';
    } else {
        out << "set: " << braces(s.values()) << '\n' << "delta: " << delta(s) << '\n';
    }
    return kExitOk;
}

int cmd_gaps(const Options &o, std::ostream &out, std::ostream &)
{
    FeasibleSet f;
    if (!o.input.empty()) {
        if (!o.set.empty())
            throw std::invalid_argument("gaps takes either an input document or --set, not both");
        f = feasible_set(load(o.input).h, o.jobs);
    } else if (!o.set.empty()) {
        f = FeasibleSet(o.set);
    } else {
        throw std::invalid_argument("gaps needs an input document or --set");
    }
    const auto g = gaps(f);
    if (output_format(o) == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["feasible_set"] = f.values();
        j["gaps"] = g;
        j["gap_free"] = is_gap_free(f);
        out << j.dump() << '\n';
    } else {
        out << "feasible-set: " << braces(f.values()) << '\n'
            << "gaps: " << braces(g) << '\n'
            << "gap-free: " << (is_gap_free(f) ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Mixed hypergraph coloring: spectra, one-realization constructions and checks",
                 "mixhyp"};
    app.require_subcommand(1);

    auto add_set = [&](CLI::App *sub, bool required) {
        auto *opt = sub->add_option("--set", o.set, "Integers, comma separated (e.g. 4,2)")
                        ->delimiter(',');
        if (required)
            opt->required();
    };
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_jobs = [&](CLI::App *sub) {
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    };

    auto *construct = app.add_subcommand("construct", "Generate a one-realization construction");
    add_set(construct, true);
    construct->add_option("--variant", o.variant, "auto, one or two")
        ->check(CLI::IsMember({"auto", "one", "two"}));
    construct->add_option("--out", o.out_path, "Write the document here instead of stdout");
    add_format(construct);

    auto *spectrum = app.add_subcommand("spectrum", "Chromatic spectrum of a document");
    spectrum->add_option("input", o.input, "Hypergraph document")->required();
    spectrum->add_flag("--list-colorings", o.list_colorings, "List every feasible partition");
    add_jobs(spectrum);
    add_format(spectrum);

    auto *verify = app.add_subcommand("verify", "Check that a document one-realizes a set");
    verify->add_option("input", o.input, "Hypergraph document")->required();
    add_set(verify, true);
    add_jobs(verify);
    add_format(verify);

    auto *search = app.add_subcommand("search-min", "Bounded search for a smaller one-realization");
    add_set(search, true);
    search->add_option("--n", o.n, "Vertex count to search")->required();
    search->add_option("--max-vertices", o.budget.max_vertices, "Vertex cap (at most 6)");
    search->add_option("--c-size", o.budget.c_edge_size, "C-edge size");
    search->add_option("--d-size", o.budget.d_edge_size, "D-edge size");
    search->add_option("--max-candidates", o.budget.max_candidates, "Candidate cap");
    add_jobs(search);
    add_format(search);

    auto *iso = app.add_subcommand("iso", "Test two documents for isomorphism");
    iso->add_option("inputs", o.inputs, "Two hypergraph documents")->required()->expected(2);
    add_format(iso);

    auto *delta_cmd = app.add_subcommand("delta", "Minimum one-realization size of a set");
    add_set(delta_cmd, true);
    add_format(delta_cmd);

    auto *gaps_cmd = app.add_subcommand("gaps", "Gaps of a document's feasible set or of --set");
    gaps_cmd->add_option("input", o.input, "Hypergraph document");
    add_set(gaps_cmd, false);
    add_jobs(gaps_cmd);
    add_format(gaps_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    o.budget.jobs = o.jobs;
    try {
        if (construct->parsed())
            return cmd_construct(o, out, err);
        if (spectrum->parsed())
            return cmd_spectrum(o, out, err);
        if (verify->parsed())
            return cmd_verify(o, out, err);
        if (search->parsed())
            return cmd_search_min(o, out, err);
        if (iso->parsed())
            return cmd_iso(o, out, err);
        if (delta_cmd->parsed())
            return cmd_delta(o, out, err);
        if (gaps_cmd->parsed())
            return cmd_gaps(o, out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    err << "error: no subcommand\n";
    return kExitInvalid;
}

} // namespace mixhyp
