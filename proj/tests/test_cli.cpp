#include <doctest.h>

#include <sstream>

#include "rtlink/report.hpp"

using namespace rtlink;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(CommandRequest req) {
    std::ostringstream out, err;
    int code = run(req, out, err);
    return {code, out.str(), err.str()};
}

CommandRequest request(std::string cmd, std::vector<int> args, std::string format = "json") {
    CommandRequest r;
    r.command = std::move(cmd);
    r.args = std::move(args);
    r.format = std::move(format);
    return r;
}

}   // namespace

TEST_CASE("gram json carries exact entries and 12-digit approximations") {
    auto o = call(request("gram", {4, 6}));
    REQUIRE(o.code == 0);
    auto j = json::parse(o.out);
    CHECK(j["m"] == 6);
    CHECK(j["gram_text"][0][1] == "-sqrt(3)");
    CHECK(j["gram_text"][3][5] == "-2*sqrt(3)");
    CHECK(j["gram"][0][1]["approx"].get<double>() == -1.73205080757);
    CHECK(j["signature"]["negative"] == 1);
}

TEST_CASE("json output round-trips byte for byte") {
    for (auto req : {request("gram", {6, 6}), request("arithmetic", {7, 4}), request("tracefield", {6, 4}),
                     request("classify", {5, 5}), request("commensurable", {3, 3, 6, 6})}) {
        auto o = call(req);
        REQUIRE(o.code == 0);
        CHECK(json::parse(o.out).dump(2) + "\n" == o.out);
    }
}

TEST_CASE("exit codes and error lines") {
    auto bad = call(request("gram", {2, 5}));
    CHECK(bad.code == 2);
    CHECK(bad.err.rfind("error: domain: ", 0) == 0);
    CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
    CHECK(call(request("gram", {4, 4})).code == 2);
    auto big = request("report", {});
    big.bound = 51;
    CHECK(call(big).code == 2);
    CHECK(call(request("nonsense", {})).code == 2);
    auto sph = request("arithmetic", {3, 5});
    sph.spherical = true;
    auto o = call(sph);
    CHECK(o.code == 0);
    CHECK(json::parse(o.out)["failing_item"]["faces"] == json::array({1, 2}));
}

TEST_CASE("commensurable prints the clause") {
    auto o = call(request("commensurable", {3, 3, 6, 6}, "text"));
    CHECK(o.out == "true (Q(i) family)\n");
}

TEST_CASE("geometry-verify is reproducible for a fixed seed") {
    auto r = request("geometry-verify", {6, 6});
    r.samples = 1500;
    r.seed = 42;
    auto a = call(r), b = call(r);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    r.seed = 43;
    CHECK(call(r).out != a.out);
}

TEST_CASE("report rows") {
    auto r = request("report", {});
    r.samples = 500;
    r.bound = 3;
    auto j = json::parse(call(r).out);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["geometry"] == "spherical");

    r.bound = 6;
    j = json::parse(call(r).out);
    std::vector<std::pair<int, int>> arith;
    for (const auto& row : j["rows"])
        if (row["arithmetic"].get<bool>())
            arith.push_back({row["m"], row["n"]});
    CHECK(arith == std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {4, 4}, {6, 3}, {6, 4}, {6, 6}});

    r.format = "csv";
    auto csv = call(r).out;
    CHECK(csv.rfind("m,n,geometry,arithmetic,trace_field,min_orbifold_degree,commensurability_class_id\n", 0) == 0);
    CHECK(csv.find("6,4,hyperbolic,true,\"Q(i*sqrt(6))\",not_applicable,") != std::string::npos);
}
