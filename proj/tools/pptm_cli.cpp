// Copyright 2026 The pptmoments Authors
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

// pptm: command-line front end. Only talks to the C API.

#include <cstdio>
#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "pptm/pptm.h"

namespace {

constexpr int kExitError = 2;

int emit(pptm_status status, char *out, int exit_code) {
    if (status != PPTM_OK) {
        std::fprintf(stderr, "pptm: %s: %s\n", pptm_status_string(status), pptm_last_error());
        return kExitError;
    }
    std::fputs(out, stdout);
    pptm_string_free(out);
    return exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Partial-transpose moment tests for bipartite states"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", pptm_version());

    pptm_run_options options;
    pptm_run_options_init(&options);
    std::string format;
    std::string max_k = "auto";
    std::uint64_t shots = 0;

    app.add_option("--tol", options.tolerance, "sign tolerance on f(k)")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", options.seed, "RNG seed (random states, sampler, selftest)");
    app.add_option("--shots", shots, "sampled-moment mode with this many shots per moment")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-k", max_k, "highest k, or 'auto' for the dimension");
    app.add_flag("--oracle", options.oracle, "also run the eigenvalue oracle");

    std::string spec;
    auto add_stateful = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("state", spec, "state specifier, e.g. bell, werner:p=0.75, file:rho.json")->required();
        return sub;
    };
    auto *test = add_stateful("test", "full moment report and verdict");
    auto *fseries = add_stateful("fseries", "f(k) for k = 1..max_k");
    auto *zeta = add_stateful("zeta", "graph zeta coefficients and prime classes");
    auto *moments = add_stateful("moments", "moments p_k of the partial transpose");
    auto *exporter = add_stateful("export", "density matrix as JSON");

    auto *scan = add_stateful("scan", "sweep one state parameter");
    std::string parameter, range;
    scan->add_option("parameter", parameter, "parameter name (werner: p; butterfly: t, J, a)")->required();
    scan->add_option("range", range, "lo:hi:step")->required();

    auto *selftest = app.add_subcommand("selftest", "cross-path invariant table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitError;
    }

    if (format == "json") options.format = PPTM_FORMAT_JSON;
    if (format == "csv") options.format = PPTM_FORMAT_CSV;
    options.shots = shots;
    if (max_k != "auto") {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(max_k, &pos);
            if (pos != max_k.size() || v <= 0) throw std::invalid_argument("");
            options.max_k = static_cast<size_t>(v);
        } catch (const std::exception &) {
            std::fprintf(stderr, "pptm: --max-k expects a positive integer or 'auto'\n");
            return kExitError;
        }
    }

    char *out = nullptr;
    int code = kExitError;
    pptm_status status = PPTM_ERR_INTERNAL;
    if (*test) {
        status = pptm_cmd_test(spec.c_str(), &options, &out, &code);
    } else if (*fseries) {
        status = pptm_cmd_fseries(spec.c_str(), &options, &out, &code);
    } else if (*zeta) {
        status = pptm_cmd_zeta(spec.c_str(), &options, &out, &code);
    } else if (*moments) {
        status = pptm_cmd_moments(spec.c_str(), &options, &out, &code);
    } else if (*scan) {
        status = pptm_cmd_scan(spec.c_str(), parameter.c_str(), range.c_str(), &options, &out, &code);
    } else if (*selftest) {
        status = pptm_cmd_selftest(&options, &out, &code);
    } else if (*exporter) {
        status = pptm_cmd_export(spec.c_str(), &out, &code);
    }
    return emit(status, out, code);
}
