// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

// vimaps: command-line front end.
//
//   vimaps compute <mode> [--g G --d D --r R --n N --l L1,L2 --ins a1:3,s2:1 ...]
//   vimaps batch <file.jsonl> [--workers W]
//   vimaps preset <name> | vimaps presets

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "vimaps/job.hpp"

namespace {

int emit(const vimaps::JobResult& res, const std::string& format) {
    if (format == "text")
        std::cout << vimaps::to_text(res);
    else
        std::cout << vimaps::to_json(res).dump() << "\n";
    return res.exit_code();
}

int usage_error(const std::string& message, const std::string& format) {
    vimaps::JobResult res;
    res.error_code = vimaps::errc::invalid_argument;
    res.error_message = message;
    return emit(res, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Virtual counts of maps to Grassmannians and their subvarieties"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    // compute
    auto* compute = app.add_subcommand("compute", "Run a single computation");
    std::string mode, ins, multidegree, pairs, path = "closed", family = "projective";
    int g = 0, d = 0, r = 1, n = 0, t = -1, workers = vimaps::default_workers();
    compute->add_option("mode", mode, "grassmannian, hypersurface, complete-intersection, closed-form, duality-check, b-reduce, tevelev, oracle-check")
        ->required();
    compute->add_option("--g", g, "Genus of the domain curve");
    compute->add_option("--d", d, "Degree");
    compute->add_option("--r", r, "Rank r of G(r, n)");
    compute->add_option("--n", n, "Ambient n of G(r, n) (default r + 1)");
    compute->add_option("--l", multidegree, "Hypersurface degrees, comma separated");
    compute->add_option("--ins", ins, "Insertions a<i>:<exp> / s<i>:<exp>, comma separated");
    compute->add_option("--pairs", pairs, "b-reduce: phi pair indices j, comma separated");
    compute->add_option("--t", t, "tevelev: number of points (default from the dimension count)");
    compute->add_option("--workers", workers, "Worker threads");
    compute->add_option("--path", path, "closed, phi or both");
    compute->add_option("--family", family, "closed-form family: projective or lg24");
    compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    // batch
    auto* batch = app.add_subcommand("batch", "Run a JSON Lines file of requests");
    std::string batch_file;
    std::optional<int> batch_workers;
    batch->add_option("file", batch_file, "Input file ('-' for stdin)")->required();
    batch->add_option("--workers", batch_workers, "Override worker threads for every record");

    // presets
    auto* preset = app.add_subcommand("preset", "Run a named reference example");
    std::string preset_name;
    preset->add_option("name", preset_name, "Preset name (see 'presets')")->required();
    preset->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    auto* presets = app.add_subcommand("presets", "List named reference examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            vimaps::JobRequest req;
            req.mode = vimaps::parse_mode(mode);
            req.g = g;
            req.d = d;
            req.r = r;
            if (n > 0) req.n = n;
            if (t >= 0) req.t = t;
            req.multidegree = vimaps::parse_int_list(multidegree);
            req.pairs = vimaps::parse_int_list(pairs);
            req.insertions = vimaps::parse_insertions(ins);
            req.workers = workers;
            req.path = vimaps::parse_path(path);
            req.family = vimaps::parse_family(family);
            return emit(vimaps::run(req), format);
        }
        if (*batch) {
            vimaps::BatchSummary summary;
            if (batch_file == "-") {
                summary = vimaps::run_batch(std::cin, std::cout, batch_workers);
            } else {
                std::ifstream in(batch_file);
                if (!in) return usage_error("cannot open batch file '" + batch_file + "'", "json");
                summary = vimaps::run_batch(in, std::cout, batch_workers);
            }
            return summary.checks_failed == 0 ? 0 : 3;
        }
        if (*preset) {
            const auto* p = vimaps::find_preset(preset_name);
            if (p == nullptr) return usage_error("unknown preset '" + preset_name + "'", format);
            return emit(vimaps::run(vimaps::request_from_json(nlohmann::json::parse(p->request))), format);
        }
        if (*presets) {
            for (const auto& p : vimaps::kPresets) std::cout << p.name << "\t" << p.description << "\n";
            return 0;
        }
    } catch (const vimaps::error& e) {
        vimaps::JobResult res;
        res.error_code = e.code();
        res.error_message = e.what();
        return emit(res, format);
    }
    return 0;
}
