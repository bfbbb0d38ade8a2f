// Copyright 2026 The update-structures Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "updstruct/registry.hpp"

using namespace updstruct;

namespace {

double default_tolerance() {
    if (const char *env = std::getenv("UPDSTRUCT_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception &) {
            std::cerr << "ignoring malformed UPDSTRUCT_TOL=" << env << "\n";
        }
    }
    return 1e-9;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Law checker for update structures"};
    app.require_subcommand(1);

    std::string format = "text";
    auto *list = app.add_subcommand("list", "List registered examples");
    list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string name;
    bool all = false;
    double tol = default_tolerance();
    Caps caps;
    auto *check = app.add_subcommand("check", "Run the law suite on one example or all of them");
    auto *name_opt = check->add_option("name", name, "Example name");
    auto *all_opt = check->add_flag("--all", all, "Run every registered example");
    name_opt->excludes(all_opt);
    check->add_option("--tol", tol, "Absolute and relative comparison tolerance")->check(CLI::PositiveNumber);
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    check->add_option("--max-dim", caps.max_wire, "Largest permitted wire dimension")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list->parsed()) {
        std::cout << (format == "json" ? list_json() : list_text());
        return 0;
    }

    if (!all && name.empty()) {
        std::cerr << "check needs an example name or --all\n";
        return 2;
    }
    Tolerance t = Tolerance::uniform(tol);
    std::vector<SuiteReport> reports;
    if (all) {
        reports = run_all(t, caps);
    } else {
        try {
            reports.push_back(run_example(find_example(name), t, caps));
        } catch (const NotFound &e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    std::cout << (format == "json" ? report_json(reports, !all) : report_text(reports));
    bool constructed = true;
    bool ok = true;
    for (const auto &r : reports) {
        constructed = constructed && r.error.empty();
        ok = ok && r.ok();
    }
    if (!constructed) {
        return 2;
    }
    return ok ? 0 : 1;
}
