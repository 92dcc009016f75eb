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

#include "pptm/pptm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "pptm/circuit.hpp"
#include "pptm/commands.hpp"
#include "pptm/errors.hpp"
#include "pptm/graph_zeta.hpp"
#include "pptm/matrix_json.hpp"
#include "pptm/ppt_engine.hpp"
#include "pptm/states.hpp"
#include "pptm/sympoly.hpp"

struct pptm_state {
    pptm::DensityMatrix rho;
};

namespace {

thread_local std::string last_error;

pptm_status fail(pptm_status status, const char *message) {
    last_error = message;
    return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
pptm_status guarded(Body &&body) {
    last_error.clear();
    try {
        body();
        return PPTM_OK;
    } catch (const pptm::DimensionMismatch &e) {
        return fail(PPTM_ERR_DIMENSION, e.what());
    } catch (const pptm::ParseError &e) {
        return fail(PPTM_ERR_PARSE, e.what());
    } catch (const pptm::InvalidArgument &e) {
        return fail(PPTM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const pptm::SizeGuardExceeded &e) {
        return fail(PPTM_ERR_SIZE_GUARD, e.what());
    } catch (const pptm::NumericalConsistencyError &e) {
        return fail(PPTM_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc &) {
        return fail(PPTM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(PPTM_ERR_INTERNAL, e.what());
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void *p, const char *name) {
    if (!p) throw pptm::InvalidArgument(std::string(name) + " must not be null");
}

pptm::cli::RunConfig to_config(const char *spec, const pptm_run_options *options) {
    pptm::cli::RunConfig config;
    if (spec) config.state = spec;
    if (!options) return config;
    if (options->tolerance > 0.0) config.tolerance = options->tolerance;
    if (options->max_k != 0) config.max_k = options->max_k;
    if (options->format == PPTM_FORMAT_JSON) config.format = pptm::cli::Format::Json;
    if (options->format == PPTM_FORMAT_CSV) config.format = pptm::cli::Format::Csv;
    config.seed = options->seed;
    if (options->shots != 0) config.shots = options->shots;
    config.oracle = options->oracle != 0;
    return config;
}

template <class Command>
pptm_status run_command(Command &&command, char **out, int *exit_code) {
    return guarded([&] {
        require(out, "out");
        require(exit_code, "exit_code");
        const auto result = command();
        *out = copy_string(result.output);
        *exit_code = result.exit_code;
    });
}

}  // namespace

extern "C" {

const char *pptm_version(void) { return "1.0.0"; }

const char *pptm_last_error(void) { return last_error.c_str(); }

const char *pptm_status_string(pptm_status status) {
    switch (status) {
        case PPTM_OK: return "ok";
        case PPTM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case PPTM_ERR_DIMENSION: return "dimension mismatch";
        case PPTM_ERR_PARSE: return "parse error";
        case PPTM_ERR_SIZE_GUARD: return "size guard exceeded";
        case PPTM_ERR_NUMERICAL: return "numerical consistency failure";
        case PPTM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void pptm_string_free(char *s) { std::free(s); }

void pptm_run_options_init(pptm_run_options *options) {
    if (!options) return;
    *options = pptm_run_options{};
    options->tolerance = pptm::ppt::kDefaultTolerance;
}

pptm_status pptm_state_from_spec(const char *spec, pptm_state **out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = new pptm_state{pptm::states::make_state(std::string(spec))};
    });
}

pptm_status pptm_state_from_json(const char *json, pptm_state **out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new pptm_state{pptm::density_from_json(pptm::parse_json_text(json))};
    });
}

pptm_status pptm_state_from_arrays(size_t dim_a, size_t dim_b, const double *re, const double *im,
                                   pptm_state **out) {
    return guarded([&] {
        require(re, "re");
        require(out, "out");
        const std::size_t d = dim_a * dim_b;
        std::vector<pptm::Complex> entries(d * d);
        for (std::size_t i = 0; i < d * d; ++i) entries[i] = {re[i], im ? im[i] : 0.0};
        *out = new pptm_state{pptm::DensityMatrix(pptm::ComplexMatrix(d, d, std::move(entries)), {dim_a, dim_b})};
    });
}

void pptm_state_free(pptm_state *state) { delete state; }

pptm_status pptm_state_dims(const pptm_state *state, size_t *dim_a, size_t *dim_b) {
    return guarded([&] {
        require(state, "state");
        if (dim_a) *dim_a = state->rho.partition().dim_a;
        if (dim_b) *dim_b = state->rho.partition().dim_b;
    });
}

pptm_status pptm_state_to_json(const pptm_state *state, char **out_json) {
    return guarded([&] {
        require(state, "state");
        require(out_json, "out_json");
        *out_json = copy_string(pptm::density_to_json(state->rho).dump());
    });
}

pptm_status pptm_moments(const pptm_state *state, size_t m, double *out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        const auto p = pptm::ppt::moments_of_partial_transpose(state->rho, m);
        std::copy(p.begin(), p.end(), out);
    });
}

pptm_status pptm_f_sequence(const pptm_state *state, size_t m, double tol, double *out, size_t *first_violation) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        const auto f = pptm::ppt::f_sequence(state->rho, m, tol);
        std::copy(f.values.begin(), f.values.end(), out);
        if (first_violation) *first_violation = f.first_violation.value_or(0);
    });
}

pptm_status pptm_oracle_ppt(const pptm_state *state, double tol, int *npt, double *min_eigenvalue) {
    return guarded([&] {
        require(state, "state");
        const auto r = pptm::ppt::oracle_ppt(state->rho, tol);
        if (npt) *npt = r.verdict == pptm::ppt::OracleVerdict::Npt ? 1 : 0;
        if (min_eigenvalue) *min_eigenvalue = r.min_eigenvalue;
    });
}

pptm_status pptm_report_json(const pptm_state *state, double tol, int run_oracle, char **out_json, int *entangled) {
    return guarded([&] {
        require(state, "state");
        require(out_json, "out_json");
        const auto report = pptm::ppt::full_report(state->rho, tol, run_oracle != 0);
        *out_json = copy_string(pptm::ppt::report_to_json(report).dump());
        if (entangled) *entangled = report.verdict == pptm::ppt::Verdict::Entangled ? 1 : 0;
    });
}

pptm_status pptm_perm_moment_trace(const pptm_state *state, size_t k, double *out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        *out = pptm::circuit::perm_moment_trace(state->rho, k);
    });
}

pptm_status pptm_hadamard_expectation(const pptm_state *state, size_t k, double *out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        *out = pptm::circuit::hadamard_test_expectation(state->rho, k);
    });
}

pptm_status pptm_sample_hadamard_test(const pptm_state *state, size_t k, uint64_t shots, uint64_t seed,
                                      pptm_shot_estimate *out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        const auto e = pptm::circuit::sample_hadamard_test(state->rho, k, shots, seed);
        *out = pptm_shot_estimate{e.k, e.mean, e.shots, e.std_error, e.seed};
    });
}

pptm_status pptm_zeta_coeffs_primes(const pptm_state *state, size_t k_max, double *out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        const auto g = pptm::zeta::graph_from_matrix(pptm::partial_transpose(state->rho));
        const auto c = pptm::zeta::zeta_inverse_coeffs_via_primes(g, k_max);
        std::copy(c.begin(), c.end(), out);
    });
}

pptm_status pptm_zeta_coeffs_moments(const pptm_state *state, size_t k_max, double *out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        const auto c = pptm::zeta::zeta_coeffs_via_moments(pptm::partial_transpose(state->rho), k_max);
        std::copy(c.begin(), c.end(), out);
    });
}

pptm_status pptm_newton_elementary(const double *moments, size_t n, double *out_e) {
    return guarded([&] {
        require(moments, "moments");
        require(out_e, "out_e");
        const auto e = pptm::sympoly::newton_elementary({moments, n}, n);
        std::copy(e.begin(), e.end(), out_e);
    });
}

pptm_status pptm_elementary_closed_form(const double *moments, size_t count, size_t k, double *out) {
    return guarded([&] {
        require(moments, "moments");
        require(out, "out");
        *out = pptm::sympoly::elementary_closed_form({moments, count}, k);
    });
}

pptm_status pptm_descartes_bound(const double *coefficients, size_t count, size_t *out) {
    return guarded([&] {
        require(coefficients, "coefficients");
        require(out, "out");
        *out = pptm::sympoly::descartes_bound({coefficients, count});
    });
}

pptm_status pptm_cmd_test(const char *spec, const pptm_run_options *options, char **out, int *exit_code) {
    return run_command([&] { return pptm::cli::cmd_test(to_config(spec, options)); }, out, exit_code);
}

pptm_status pptm_cmd_fseries(const char *spec, const pptm_run_options *options, char **out, int *exit_code) {
    return run_command([&] { return pptm::cli::cmd_fseries(to_config(spec, options)); }, out, exit_code);
}

pptm_status pptm_cmd_zeta(const char *spec, const pptm_run_options *options, char **out, int *exit_code) {
    return run_command([&] { return pptm::cli::cmd_zeta(to_config(spec, options)); }, out, exit_code);
}

pptm_status pptm_cmd_moments(const char *spec, const pptm_run_options *options, char **out, int *exit_code) {
    return run_command([&] { return pptm::cli::cmd_moments(to_config(spec, options)); }, out, exit_code);
}

pptm_status pptm_cmd_scan(const char *spec, const char *parameter, const char *range, const pptm_run_options *options,
                          char **out, int *exit_code) {
    return run_command(
        [&] {
            require(parameter, "parameter");
            require(range, "range");
            return pptm::cli::cmd_scan(to_config(spec, options), parameter, pptm::cli::parse_range(range));
        },
        out, exit_code);
}

pptm_status pptm_cmd_selftest(const pptm_run_options *options, char **out, int *exit_code) {
    return run_command([&] { return pptm::cli::cmd_selftest(to_config(nullptr, options)); }, out, exit_code);
}

pptm_status pptm_cmd_export(const char *spec, char **out, int *exit_code) {
    return run_command([&] { return pptm::cli::cmd_export(to_config(spec, nullptr)); }, out, exit_code);
}

}  // extern "C"
