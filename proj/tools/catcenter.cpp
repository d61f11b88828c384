#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "catcenter/cli_run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"catcenter - exhaustive checker for finite monoidal and 2-categorical structures"};
    app.allow_extras();
    std::vector<std::string> spec_files;
    std::string out_path, dir = ".";
    app.add_option("--spec", spec_files, "structure spec file(s) to load")
        ->check(CLI::ExistingFile)
        ->type_size(1)
        ->allow_extra_args(false);
    app.add_option("--out", out_path, "write the full JSON report to this file");
    app.add_option("--dir", dir, "output directory for seed-suite");

    CLI11_PARSE(app, argc, argv);
    std::vector<std::string> command = app.remaining();

    try {
        catcenter::Workspace ws;
        for (const auto& f : spec_files) catcenter::parse_spec_file(f, ws);
        if (command.empty()) {
            std::cerr << "usage: catcenter [--spec FILE]... "
                         "<check|center|adjoints|enumerate|map-to-dist|seed-suite> ...\n";
            return 2;
        }

        if (command[0] == "seed-suite") {
            std::filesystem::create_directories(dir);
            for (const auto& [fname, text] : catcenter::seed_suite_files()) {
                std::ofstream out(std::filesystem::path(dir) / fname);
                out << text;
                std::cout << "wrote " << (std::filesystem::path(dir) / fname).string() << "\n";
            }
            return 0;
        }

        auto t0 = std::chrono::steady_clock::now();
        catcenter::RunResult res = catcenter::run_command(command, ws);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        std::cout << res.human;
        if (!res.report.laws().empty() && res.human != res.report.summary())
            std::cout << res.report.summary();
        if (!out_path.empty()) {
            std::string cmdline;
            for (const auto& c : command) cmdline += (cmdline.empty() ? "" : " ") + c;
            std::ofstream out(out_path);
            out << catcenter::report_json(res.report, cmdline, ms);
        }
        if (!res.artifact.empty() && command[0] == "center") {
            std::string art_path = out_path.empty() ? command[1] + "_center.spec"
                                                    : out_path + ".center.spec";
            std::ofstream out(art_path);
            out << res.artifact;
            std::cout << "wrote " << art_path << "\n";
        }
        return res.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
