#include "mixhyp/cli.hpp"
#include "mixhyp/constructions.hpp"
#include "mixhyp/document.hpp"
#include "oracle.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <random>
#include <sstream>

using namespace mixhyp;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("mixhyp-cli-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string write(const TempDir &dir, const std::string &name, const MixedHypergraph &h)
{
    const auto path = dir.file(name);
    write_text_file(path, serialize(h));
    return path;
}

} // namespace

TEST_CASE("document round trip")
{
    std::mt19937_64 rng(61);
    std::vector<MixedHypergraph> corpus;
    for (int i = 0; i < 100; ++i)
        corpus.push_back(oracle::random_hypergraph(rng, 9));
    for (const auto &values : oracle::integer_subsets(2, 6, 2, 3))
        corpus.push_back(smallest_one_realization(SpecSet(values)));

    for (const auto &h : corpus) {
        const std::string text = serialize(h);
        const auto back = parse_hypergraph(text);
        CHECK(back == h);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("document canonical form and errors")
{
    const auto doc = serialize(construct_two(SpecSet({3, 2})));
    CHECK(doc == "{\n"
                 "  \"format_version\": 1,\n"
                 "  \"vertex_count\": 3,\n"
                 "  \"labels\": [[1,1],[2,2],[3,2]],\n"
                 "  \"c_edges\": [],\n"
                 "  \"d_edges\": [\n"
                 "    [0,1],\n"
                 "    [0,2]\n"
                 "  ]\n"
                 "}\n");

    // Non-canonical input is accepted and normalized.
    const auto h = parse_hypergraph(
        R"({"format_version":1,"vertex_count":3,"c_edges":[[2,0,1],[1,0,2]],"d_edges":[]})");
    CHECK(h.c_edges() == std::vector<Edge>{{0, 1, 2}});
    CHECK_FALSE(h.has_labels());

    CHECK_THROWS_AS(parse_hypergraph("{"), DocumentError);
    CHECK_THROWS_AS(parse_hypergraph("[]"), DocumentError);
    CHECK_THROWS_AS(parse_hypergraph(R"({"format_version":2,"vertex_count":1,"c_edges":[],"d_edges":[]})"),
                    DocumentError);
    CHECK_THROWS_AS(parse_hypergraph(R"({"format_version":1,"vertex_count":2,"c_edges":[[0]],"d_edges":[]})"),
                    DocumentError);
    CHECK_THROWS_AS(parse_hypergraph(R"({"format_version":1,"vertex_count":2,"c_edges":[],"d_edges":[[0,5]]})"),
                    DocumentError);
    CHECK_THROWS_AS(parse_hypergraph(R"({"format_version":1,"vertex_count":2,"c_edges":[]})"), DocumentError);
    CHECK_THROWS_AS(parse_hypergraph(R"({"format_version":1,"vertex_count":0,"c_edges":[],"d_edges":[]})"),
                    DocumentError);
    CHECK_THROWS_AS(
        parse_hypergraph(R"({"format_version":1,"vertex_count":1,"labels":[[0]],"c_edges":[],"d_edges":[]})"),
        DocumentError);

    CHECK(content_digest("abc") ==
          "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("construct command")
{
    TempDir dir;
    auto r = run({"construct", "--set", "4,2", "--out", dir.file("a.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices: 6") != std::string::npos);
    CHECK(r.out.find("delta: 6") != std::string::npos);
    CHECK(parse_hypergraph(read_text_file(dir.file("a.json"))) == construct_one(SpecSet({4, 2})));

    r = run({"construct", "--set", "4,3", "--variant", "two", "--out", dir.file("b.json")});
    CHECK(r.code == 0);
    CHECK(parse_hypergraph(read_text_file(dir.file("b.json"))).vertex_count() == 4);

    r = run({"construct", "--set", "3,4"});
    CHECK(r.code == 0);
    CHECK(parse_hypergraph(r.out) == construct_two(SpecSet({4, 3})));

    CHECK(run({"construct", "--set", "4,2", "--variant", "two"}).code == 2);
    CHECK(run({"construct", "--set", "4,1"}).code == 2);
    CHECK(run({"construct", "--set", "4"}).code == 2);
    CHECK(run({"construct", "--set", "4,x"}).code == 2);
    CHECK(run({"construct"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("spectrum command")
{
    TempDir dir;
    const auto a = write(dir, "a.json", construct_one(SpecSet({4, 2})));
    auto r = run({"spectrum", a});
    CHECK(r.code == 0);
    CHECK(r.out.find("spectrum: (0,1,0,1)\n") != std::string::npos);
    CHECK(r.out.find("feasible-set: {2,4}\n") != std::string::npos);
    CHECK(r.out.find("gaps: {3}\n") != std::string::npos);

    const auto edgeless = write(dir, "e.json", MixedHypergraph(3, {}, {}));
    r = run({"spectrum", edgeless, "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["spectrum"] == nlohmann::json::array({oracle::stirling2(3, 1), oracle::stirling2(3, 2),
                                                  oracle::stirling2(3, 3)}));
    CHECK(j["gaps"].empty());
    CHECK(j["lower_chromatic"] == 1);

    const auto b = write(dir, "b.json", construct_two(SpecSet({4, 3})));
    r = run({"spectrum", b, "--list-colorings"});
    CHECK(r.code == 0);
    CHECK(r.out.find("colorings: 2\n") != std::string::npos);
    CHECK(r.out.find("  k=3: {(1,1)} {(2,2)} {(3,3),(4,3)}\n") != std::string::npos);
    CHECK(r.out.find("  k=4: {(1,1)} {(2,2)} {(3,3)} {(4,3)}\n") != std::string::npos);

    const auto none = write(dir, "n.json", MixedHypergraph(2, {{0, 1}}, {{0, 1}}));
    r = run({"spectrum", none, "--format", "json"});
    const auto k = nlohmann::json::parse(r.out);
    CHECK(k["spectrum"].empty());
    CHECK(k["upper_chromatic"].is_null());

    write_text_file(dir.file("bad.json"), "{\"format_version\": 1}");
    CHECK(run({"spectrum", dir.file("bad.json")}).code == 2);
    CHECK(run({"spectrum", dir.file("missing.json")}).code == 2);
}

TEST_CASE("verify command")
{
    TempDir dir;
    const auto a = write(dir, "a.json", construct_one(SpecSet({4, 2})));
    CHECK(run({"verify", a, "--set", "2,4"}).code == 0);

    auto r = run({"verify", a, "--set", "2,3,4"});
    CHECK(r.code == 1);
    CHECK(r.out.find("3 not feasible") != std::string::npos);

    const auto edgeless = write(dir, "e.json", MixedHypergraph(3, {}, {}));
    r = run({"verify", edgeless, "--set", "1,2,3"});
    CHECK(r.code == 1);
    CHECK(r.out.find("r_2 = 3") != std::string::npos);

    r = run({"verify", a, "--set", "2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("4 feasible but not in the target set") != std::string::npos);

    write_text_file(dir.file("bad.json"), "not json");
    CHECK(run({"verify", dir.file("bad.json"), "--set", "2,4"}).code == 2);
}

TEST_CASE("search-min command")
{
    auto r = run({"search-min", "--set", "3,2", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("outcome: witness-found") != std::string::npos);

    r = run({"search-min", "--set", "4,3", "--n", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["outcome"] == "exhausted");

    CHECK(run({"search-min", "--set", "4,2", "--n", "7"}).code == 2);
    CHECK(run({"search-min", "--set", "4,2", "--n", "6", "--max-vertices", "6"}).code == 2);
    CHECK(run({"search-min", "--set", "3,2", "--n", "3", "--max-candidates", "4"}).code == 2);
}

TEST_CASE("iso command")
{
    TempDir dir;
    const auto big = construct_one(SpecSet({4, 3, 2}));
    std::vector<Vertex> slice;
    for (Vertex v = 0; v < big.vertex_count(); ++v)
        if (big.label(v).coords[0] == big.label(v).coords[1])
            slice.push_back(v);
    const auto x = write(dir, "x.json", derived_subhypergraph(big, slice));
    const auto y = write(dir, "y.json", construct_one(SpecSet({3, 2})));

    auto r = run({"iso", y, y});
    CHECK(r.code == 0);
    CHECK(r.out.find("mapping: 0->0 1->1 2->2 3->3") != std::string::npos);
    CHECK(run({"iso", x, y}).code == 0);

    const auto c = write(dir, "c.json", MixedHypergraph(2, {{0, 1}}, {}));
    const auto d = write(dir, "d.json", MixedHypergraph(2, {}, {{0, 1}}));
    CHECK(run({"iso", c, d}).code == 1);

    const auto huge = write(dir, "h.json", MixedHypergraph(13, {}, {}));
    CHECK(run({"iso", huge, huge}).code == 2);
    CHECK(run({"iso", c}).code == 2);
}

TEST_CASE("delta and gaps commands")
{
    auto r = run({"delta", "--set", "4,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("delta: 6") != std::string::npos);
    r = run({"delta", "--set", "2,3,5", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["delta"] == 8);
    CHECK(run({"delta", "--set", "5"}).code == 2);

    r = run({"gaps", "--set", "2,5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gaps: {3,4}") != std::string::npos);
    CHECK(r.out.find("gap-free: no") != std::string::npos);

    TempDir dir;
    const auto a = write(dir, "a.json", construct_one(SpecSet({4, 2})));
    r = run({"gaps", a, "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["gaps"] == nlohmann::json::array({3}));
    CHECK(run({"gaps"}).code == 2);
}

TEST_CASE("spectrum output does not depend on --jobs")
{
    TempDir dir;
    const auto path = write(dir, "s.json", construct_one(SpecSet({5, 3, 2})));
    for (const char *format : {"text", "json"}) {
        const auto base = run({"spectrum", path, "--list-colorings", "--format", format, "--jobs", "1"});
        CHECK(base.code == 0);
        for (const char *jobs : {"2", "8"})
            CHECK(run({"spectrum", path, "--list-colorings", "--format", format, "--jobs", jobs}).out ==
                  base.out);
    }
}
