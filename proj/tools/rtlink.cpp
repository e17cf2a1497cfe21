#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rtlink/report.hpp"

namespace {

struct Shared {
    std::string format = "text";
    std::string out_file;
};

}   // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic and geometry of right-angled tiling links"};
    app.require_subcommand(1);

    Shared shared;
    if (const char* env = std::getenv("RTLINK_FORMAT"))
        shared.format = env;

    rtlink::CommandRequest req;
    std::vector<int> pair;
    std::vector<int> quad;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", shared.format, "text, json or csv (report only)")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", shared.out_file, "write output to FILE");
    };

    auto* gram = app.add_subcommand("gram", "Gram matrix of P(m,n) with its signature");
    gram->add_option("m_n", pair, "the pair m n")->expected(2)->required();
    gram->add_flag("--spherical", req.spherical, "build the spherical polyhedron");

    auto* arith = app.add_subcommand("arithmetic", "Vinberg arithmeticity certificate");
    arith->add_option("m_n", pair, "the pair m n")->expected(2)->required();
    arith->add_flag("--spherical", req.spherical, "use the spherical polyhedron");

    auto* trace = app.add_subcommand("tracefield", "invariant trace field worksheet");
    trace->add_option("m_n", pair, "the pair m n")->expected(2)->required();
    trace->add_flag("--spherical", req.spherical, "use the spherical polyhedron");

    auto* classify = app.add_subcommand("classify", "geometry, arithmeticity and trace field of a tiling type");
    classify->add_option("m_n", pair, "the pair m n")->expected(2)->required();
    int genus = -1;
    classify->add_option("--genus", genus, "surface genus for the Euler count")->check(CLI::NonNegativeNumber);

    auto* comm = app.add_subcommand("commensurable", "commensurability of two tiling links");
    comm->add_option("pairs", quad, "m1 n1 m2 n2")->expected(4)->required();

    auto* geom = app.add_subcommand("geometry-verify", "floating-point checks of the canonical cells");
    geom->add_option("m_n", pair, "the pair m n")->expected(2)->required();
    geom->add_option("--samples", req.samples, "sample count for the basin check")->check(CLI::PositiveNumber);
    geom->add_option("--seed", req.seed, "sampling seed");

    auto* sweep = app.add_subcommand("sweep", "arithmeticity of all hyperbolic pairs up to a bound");
    sweep->add_option("--bound", req.bound, "largest m and n");

    auto* report = app.add_subcommand("report", "full classification report");
    report->add_option("--bound", req.bound, "largest m and n");
    report->add_option("--samples", req.samples, "sample count for the basin checks")->check(CLI::PositiveNumber);
    report->add_option("--seed", req.seed, "sampling seed");

    for (auto* sub : {gram, arith, trace, classify, comm, geom, sweep, report})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    req.command = app.get_subcommands().front()->get_name();
    req.args = comm->parsed() ? quad : pair;
    if (genus >= 0)
        req.genus = genus;
    req.format = shared.format;

    if (shared.out_file.empty())
        return rtlink::run(req, std::cout, std::cerr);
    std::ofstream file(shared.out_file);
    if (!file) {
        std::cerr << "error: io: cannot open " << shared.out_file << "\n";
        return 2;
    }
    return rtlink::run(req, file, std::cerr);
}
