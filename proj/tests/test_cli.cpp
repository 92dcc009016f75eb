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

// Runs the installed-style binary and checks output plus exit status.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef PPTM_CLI_PATH
#error "PPTM_CLI_PATH must point at the pptm executable"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string &args) {
    const std::string cmd = std::string(PPTM_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace

TEST(cli, test_exit_codes) {
    EXPECT_EQ(run("test bell").status, 1);
    EXPECT_EQ(run("test werner:p=0.2").status, 0);
    EXPECT_EQ(run("test werner:p=0.75").status, 1);
    EXPECT_EQ(run("test notastate").status, 2);
    EXPECT_EQ(run("test bell --max-k 9").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(cli, test_json) {
    const auto r = run("test bell --oracle");
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("first_violation"), 3);
    EXPECT_EQ(j.at("oracle").at("verdict"), "NPT");
}

TEST(cli, flags_after_subcommand) {
    const auto r = run("fseries bell --format json --max-k 3");
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("f").size(), 3u);
    EXPECT_EQ(run("--format csv test bell").out.substr(0, 3), "k,p");
}

TEST(cli, fseries_csv) {
    EXPECT_EQ(run("fseries bell").out, "k,f_k\n1,1\n2,0\n3,-0.25\n4,-0.0625\n");
}

TEST(cli, shots_mode_reproducible) {
    const auto a = run("moments bell --shots 5000 --seed 3");
    const auto b = run("moments bell --shots 5000 --seed 3");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.status, 0);
}

TEST(cli, scan_and_zeta) {
    const auto s = run("scan werner p 0.3:0.4:0.05");
    EXPECT_EQ(s.status, 0);
    EXPECT_NE(s.out.find("0.35,4,"), std::string::npos);
    const auto z = run("zeta bell");
    EXPECT_EQ(z.status, 1);
    EXPECT_EQ(nlohmann::json::parse(z.out).at("primes").size(), 3u);
}

TEST(cli, selftest_and_export) {
    EXPECT_EQ(run("selftest").status, 0);
    const auto e = run("export bell");
    EXPECT_EQ(nlohmann::json::parse(e.out).at("dim_a"), 2);
}
