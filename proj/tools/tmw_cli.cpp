// Command-line driver for the resolution pipeline.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tmw/pipeline/run.hpp"

using namespace tmw;

namespace {

std::vector<long> parse_kappas(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v <= 0) throw CLI::ValidationError("--kappa-schedule", "bad entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--kappa-schedule", "empty schedule");
    return out;
}

void print_summary(const ResolutionReport& rep) {
    for (auto& s : rep.stages) {
        std::cout << s.name << ": " << s.status << " (" << s.code << ")";
        if (s.data.is_object() && s.data.contains("error")) std::cout << ": " << s.data["error"].get<std::string>();
        std::cout << "\n";
    }
    std::cout << "verdict: " << rep.verdict << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resolution pipeline for x^2 + 5^a 11^b = y^n"};
    app.require_subcommand(1);

    std::string pack = TMW_DATA_DIR, report, kappas;
    long precision = 240, y_bound = kDefaultYBound;
    bool strict = true, keep_going = false, quiet = false;
    unsigned threads = default_threads();
    app.add_option("--pack", pack, "directory holding F.json, L.json, K.json and newforms.json");
    app.add_option("--precision", precision, "working precision in digits for logarithms and local fields")->check(CLI::Range(120, 2000));
    app.add_option("--kappa-schedule", kappas, "comma-separated kappa values for reduction passes after the first");
    app.add_option("--y-bound", y_bound, "search bound for |y| in the final Thue search")->check(CLI::Range(1L, 100000000L));
    app.add_option("--report", report, "write the JSON report to this path");
    app.add_option("--strict-radicand", strict, "require the strict radicand variant to pass as well (true/false)");
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_flag("--keep-going", keep_going, "run later stages after a failed stage");
    app.add_flag("-q,--quiet", quiet, "print only the verdict");

    const std::vector<std::pair<std::string, std::pair<std::string, std::set<std::string>>>> commands{
        {"validate-pack", {"validate the data packs", {"field_data"}}},
        {"modular-check", {"run the newform elimination", {"modular"}}},
        {"descent", {"expand the descent identity and derive the Thue form", {"descent"}}},
        {"padic-analysis", {"5-adic and 11-adic analysis and delta_2 valuations", {"five_adic", "eleven_adic", "delta2_valuations"}}},
        {"bound", {"heights, Yu and Matveev constants, initial bounds", {"initial_bounds"}}},
        {"reduce", {"reduction chain from the initial bounds", {"reduction_chain"}}},
        {"search", {"bounded search over the final Thue equations", {"final_search"}}},
        {"full-run", {"all stages and the small-solution verification", {}}},
    };
    std::map<std::string, CLI::App*> subs;
    // global options are also accepted after the subcommand
    for (auto& [name, v] : commands) subs[name] = app.add_subcommand(name, v.first)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    cfg.packs = PackPaths::in_dir(pack);
    cfg.precision = precision;
    cfg.y_bound = y_bound;
    cfg.radicand.require_strict = strict;
    cfg.threads = threads;
    cfg.keep_going = keep_going;
    if (!kappas.empty()) {
        try {
            cfg.schedules.later_kappas = parse_kappas(kappas);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    for (auto& [name, v] : commands)
        if (subs[name]->parsed()) {
            cfg.stages = v.second;
            cfg.run_theorem = name == "full-run";
        }

    ResolutionReport rep;
    try {
        rep = run_full(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (quiet) std::cout << rep.verdict << "\n";
    else print_summary(rep);
    if (!report.empty()) {
        std::ofstream out(report);
        if (!out) {
            std::cerr << "cannot write " << report << "\n";
            return 2;
        }
        out << rep.to_json().dump(2) << "\n";
    }
    bool ok = rep.verdict == "complete-at-desk-scale" || rep.verdict.rfind("partial-run", 0) == 0;
    return ok ? 0 : 1;
}
