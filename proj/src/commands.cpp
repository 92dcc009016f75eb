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

#include "pptm/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "pptm/errors.hpp"
#include "pptm/graph_zeta.hpp"
#include "pptm/matrix_json.hpp"
#include "pptm/states.hpp"
#include "pptm/sympoly.hpp"

namespace pptm::cli {

using nlohmann::json;

namespace {

constexpr double kZetaAgreement = 1e-9;
// Upper bound on DFS leaves the prime enumeration may visit.
constexpr double kEnumerationBudget = 5e7;

std::size_t resolve_max_k(const RunConfig &config, std::size_t dim) {
    if (!config.max_k) return dim;
    if (*config.max_k == 0 || *config.max_k > dim) {
        throw InvalidArgument("--max-k must lie in [1, " + std::to_string(dim) + "] for this state");
    }
    return *config.max_k;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::optional<std::size_t> first_violation(std::span<const double> f, double tol) {
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] < -tol) return k + 1;
    }
    return std::nullopt;
}

json optional_index(const std::optional<std::size_t> &k) { return k ? json(*k) : json(); }

}  // namespace

const char *to_string(SignStatus s) {
    switch (s) {
        case SignStatus::Satisfied: return "SATISFIED";
        case SignStatus::Violated: return "VIOLATED";
        case SignStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string format_real(double x) {
    if (x == 0.0) return "0";  // no "-0"
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

SampledFSequence sampled_f_sequence(const DensityMatrix &rho, std::size_t m, std::uint64_t shots, std::uint64_t seed,
                                    double tol) {
    SampledFSequence out;
    std::vector<double> p, sigma;
    for (std::size_t k = 1; k <= m; ++k) {
        out.moments.push_back(circuit::sample_hadamard_test(rho, k, shots, seed + k));
        p.push_back(out.moments.back().mean);
        sigma.push_back(out.moments.back().std_error);
    }
    const auto e = sympoly::newton_elementary(p, m);
    for (std::size_t k = 1; k <= m; ++k) {
        const double f = sympoly::elementary_closed_form(p, k);
        double var = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            const double e_prev = (k == j) ? 1.0 : e[k - j - 1];
            const double grad = e_prev / static_cast<double>(j);
            var += grad * grad * sigma[j - 1] * sigma[j - 1];
        }
        const double se = std::sqrt(var);
        out.values.push_back(f);
        out.std_errors.push_back(se);
        if (std::abs(f) <= kShotsSigma * se) {
            out.status.push_back(SignStatus::Inconclusive);
        } else {
            out.status.push_back(f < -tol ? SignStatus::Violated : SignStatus::Satisfied);
        }
    }
    return out;
}

CommandResult cmd_test(const RunConfig &config) {
    const auto rho = states::make_state(config.state);
    const std::size_t m = resolve_max_k(config, rho.dim());
    const Format format = config.format.value_or(Format::Json);
    CommandResult result;

    if (config.shots) {
        const auto sampled = sampled_f_sequence(rho, m, *config.shots, config.seed, config.tolerance);
        std::optional<std::size_t> violated;
        bool inconclusive = false;
        for (std::size_t k = 0; k < m; ++k) {
            if (sampled.status[k] == SignStatus::Violated && !violated) violated = k + 1;
            inconclusive = inconclusive || sampled.status[k] == SignStatus::Inconclusive;
        }
        const char *verdict = violated ? "ENTANGLED" : (inconclusive ? "INCONCLUSIVE" : "PPT_CONSISTENT");
        result.exit_code = violated ? kExitEntangled : (inconclusive ? kExitInconclusive : kExitConsistent);
        if (format == Format::Csv) {
            std::ostringstream s;
            s << "k,p_k,p_k_std_error,f_k,f_k_std_error,status\n";
            for (std::size_t k = 0; k < m; ++k) {
                s << k + 1 << ',' << format_real(sampled.moments[k].mean) << ','
                  << format_real(sampled.moments[k].std_error) << ',' << format_real(sampled.values[k]) << ','
                  << format_real(sampled.std_errors[k]) << ',' << to_string(sampled.status[k]) << '\n';
            }
            result.output = s.str();
            return result;
        }
        json j;
        j["state"] = config.state;
        j["mode"] = "shots";
        j["advisory"] = true;
        j["dimension"] = rho.dim();
        json est = json::array();
        for (const auto &e : sampled.moments) est.push_back(circuit::estimate_to_json(e));
        j["moment_estimates"] = est;
        std::vector<double> means;
        for (const auto &e : sampled.moments) means.push_back(e.mean);
        j["moments"] = means;
        j["f"] = sampled.values;
        j["f_std_errors"] = sampled.std_errors;
        json status = json::array();
        for (auto s : sampled.status) status.push_back(to_string(s));
        j["status"] = status;
        j["tolerance"] = config.tolerance;
        j["verdict"] = verdict;
        j["first_violation"] = optional_index(violated);
        if (config.oracle) {
            const auto oracle = ppt::oracle_ppt(rho, config.tolerance);
            j["oracle"] = {{"min_eig", oracle.min_eigenvalue}, {"verdict", ppt::to_string(oracle.verdict)}};
        } else {
            j["oracle"] = nullptr;
        }
        result.output = dump(j);
        return result;
    }

    auto report = ppt::full_report(rho, config.tolerance, config.oracle);
    if (m < report.f.values.size()) {
        report.moments.resize(m);
        report.f.values.resize(m);
        report.f.first_violation = first_violation(report.f.values, config.tolerance);
        report.verdict = report.f.first_violation ? ppt::Verdict::Entangled : ppt::Verdict::PptConsistent;
    }
    result.exit_code = report.verdict == ppt::Verdict::Entangled ? kExitEntangled : kExitConsistent;
    if (format == Format::Csv) {
        std::ostringstream s;
        s << "k,p_k,f_k\n";
        for (std::size_t k = 0; k < report.f.values.size(); ++k) {
            s << k + 1 << ',' << format_real(report.moments[k]) << ',' << format_real(report.f.values[k]) << '\n';
        }
        result.output = s.str();
        return result;
    }
    json j = ppt::report_to_json(report);
    j["state"] = config.state;
    j["mode"] = "exact";
    result.output = dump(j);
    return result;
}

CommandResult cmd_fseries(const RunConfig &config) {
    const auto rho = states::make_state(config.state);
    const std::size_t m = resolve_max_k(config, rho.dim());
    const Format format = config.format.value_or(Format::Csv);
    CommandResult result;
    std::ostringstream s;

    if (config.shots) {
        const auto sampled = sampled_f_sequence(rho, m, *config.shots, config.seed, config.tolerance);
        if (format == Format::Json) {
            json status = json::array();
            for (auto st : sampled.status) status.push_back(to_string(st));
            json j{{"state", config.state}, {"mode", "shots"}, {"f", sampled.values},
                   {"std_error", sampled.std_errors}, {"status", status}};
            result.output = dump(j);
            return result;
        }
        s << "k,f_k,std_error,status\n";
        for (std::size_t k = 0; k < m; ++k) {
            s << k + 1 << ',' << format_real(sampled.values[k]) << ',' << format_real(sampled.std_errors[k]) << ','
              << to_string(sampled.status[k]) << '\n';
        }
        result.output = s.str();
        return result;
    }

    const auto f = ppt::f_sequence(rho, m, config.tolerance);
    if (format == Format::Json) {
        json j{{"state", config.state}, {"mode", "exact"}, {"f", f.values},
               {"first_violation", optional_index(f.first_violation)}};
        result.output = dump(j);
        return result;
    }
    s << "k,f_k\n";
    for (std::size_t k = 0; k < m; ++k) s << k + 1 << ',' << format_real(f.values[k]) << '\n';
    result.output = s.str();
    return result;
}

CommandResult cmd_zeta(const RunConfig &config) {
    const auto rho = states::make_state(config.state);
    const std::size_t k_max = resolve_max_k(config, rho.dim());
    const ComplexMatrix pt = partial_transpose(rho);
    const auto graph = zeta::graph_from_matrix(pt, zeta::kDefaultEdgeThreshold);

    const double mean_degree =
        graph.vertex_count() == 0 ? 0.0
                                  : static_cast<double>(graph.edges().size()) / static_cast<double>(graph.vertex_count());
    if (std::pow(std::max(mean_degree, 1.0), static_cast<double>(k_max)) * static_cast<double>(graph.vertex_count()) >
        kEnumerationBudget) {
        throw SizeGuardExceeded("zeta: enumerating prime classes to length " + std::to_string(k_max) +
                                " on this graph is too expensive; lower --max-k");
    }

    const auto primes = zeta::enumerate_prime_classes(graph, k_max);
    const auto via_primes = zeta::zeta_inverse_coeffs_via_primes(primes, k_max);
    const auto via_moments = zeta::zeta_coeffs_via_moments(pt, k_max);

    double discrepancy = 0.0;
    for (std::size_t k = 0; k <= k_max; ++k) {
        discrepancy = std::max(discrepancy, std::abs(via_primes[k] - via_moments[k]));
    }

    json j;
    j["state"] = config.state;
    j["graph"] = zeta::graph_to_json(graph);
    j["adjacency"] = zeta::describe_graph(graph);
    json plist = json::array();
    for (const auto &p : primes) plist.push_back(zeta::prime_to_json(graph, p));
    j["primes"] = plist;
    j["coeffs_primes"] = via_primes;
    j["coeffs_moments"] = via_moments;
    json conds = json::array();
    std::optional<std::size_t> violated;
    for (std::size_t k = 1; k <= k_max; ++k) {
        const auto c = zeta::graph_condition(primes, k);
        conds.push_back(zeta::condition_to_json(c));
        if (!c.coefficient_satisfied && !violated) violated = k;
    }
    j["conditions"] = conds;
    j["first_violation"] = optional_index(violated);
    j["max_discrepancy"] = discrepancy;

    CommandResult result;
    if (discrepancy > kZetaAgreement) {
        j["error"] = "internal-consistency failure: coefficient paths disagree";
        result.exit_code = kExitError;
    } else {
        result.exit_code = violated ? kExitEntangled : kExitConsistent;
    }
    result.output = dump(j);
    return result;
}

CommandResult cmd_moments(const RunConfig &config) {
    const auto rho = states::make_state(config.state);
    const std::size_t m = resolve_max_k(config, rho.dim());
    const Format format = config.format.value_or(Format::Csv);
    CommandResult result;
    std::ostringstream s;
    if (config.shots) {
        std::vector<circuit::ShotEstimate> est;
        for (std::size_t k = 1; k <= m; ++k) est.push_back(circuit::sample_hadamard_test(rho, k, *config.shots, config.seed + k));
        if (format == Format::Json) {
            json arr = json::array();
            for (const auto &e : est) arr.push_back(circuit::estimate_to_json(e));
            result.output = dump(arr);
            return result;
        }
        s << "k,mean,std_error,shots,seed\n";
        for (const auto &e : est) {
            s << e.k << ',' << format_real(e.mean) << ',' << format_real(e.std_error) << ',' << e.shots << ',' << e.seed
              << '\n';
        }
        result.output = s.str();
        return result;
    }
    const auto p = ppt::moments_of_partial_transpose(rho, m);
    if (format == Format::Json) {
        result.output = dump(json{{"state", config.state}, {"moments", p}});
        return result;
    }
    s << "k,p_k\n";
    for (std::size_t k = 0; k < m; ++k) s << k + 1 << ',' << format_real(p[k]) << '\n';
    result.output = s.str();
    return result;
}

ScanRange parse_range(const std::string &text) {
    std::vector<double> parts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw ParseError("range: '" + item + "' is not a number");
        }
    }
    if (parts.size() == 1) return {parts[0], parts[0], 0.0};
    if (parts.size() != 3) throw ParseError("range: expected lo:hi:step");
    if (parts[1] < parts[0]) throw ParseError("range: hi < lo");
    if (parts[1] > parts[0] && !(parts[2] > 0.0)) throw ParseError("range: step must be > 0");
    return {parts[0], parts[1], parts[2]};
}

std::vector<double> scan_grid(const ScanRange &range) {
    if (range.hi < range.lo) throw InvalidArgument("range: hi < lo");
    if (range.hi == range.lo) return {range.lo};
    if (!(range.step > 0.0)) throw InvalidArgument("range: step must be > 0");
    const auto count = static_cast<std::size_t>(std::floor((range.hi - range.lo) / range.step + 1e-9));
    std::vector<double> grid;
    for (std::size_t i = 0; i <= count; ++i) {
        const double x = range.lo + static_cast<double>(i) * range.step;
        grid.push_back(std::round(x * 1e12) / 1e12);
    }
    return grid;
}

CommandResult cmd_scan(const RunConfig &config, const std::string &parameter, const ScanRange &range) {
    if (config.shots) throw InvalidArgument("scan: shots mode is not supported");
    auto spec = states::parse_state_spec(config.state);
    const bool known = (spec.family == "werner" && parameter == "p") ||
                       (spec.family == "butterfly" && (parameter == "t" || parameter == "J" || parameter == "a"));
    if (!known) throw InvalidArgument("scan: unknown parameter '" + parameter + "' for state family " + spec.family);
    const Format format = config.format.value_or(Format::Csv);

    std::ostringstream s;
    json rows = json::array();
    s << "param,first_violation,min_f,final_f\n";
    for (double x : scan_grid(range)) {
        spec.set(parameter, format_real(x));
        const auto rho = states::make_state(spec);
        const std::size_t m = resolve_max_k(config, rho.dim());
        const auto f = ppt::f_sequence(rho, m, config.tolerance);
        const double min_f = *std::min_element(f.values.begin(), f.values.end());
        const std::size_t fv = f.first_violation.value_or(0);
        s << format_real(x) << ',' << fv << ',' << format_real(min_f) << ',' << format_real(f.values.back()) << '\n';
        rows.push_back({{"param", x}, {"first_violation", fv}, {"min_f", min_f}, {"final_f", f.values.back()}, {"f", f.values}});
    }
    CommandResult result;
    result.output = format == Format::Json ? dump(rows) : s.str();
    return result;
}

CommandResult cmd_export(const RunConfig &config) {
    const auto rho = states::make_state(config.state);
    return {kExitConsistent, density_to_json(rho).dump() + "\n"};
}

}  // namespace pptm::cli
