#include "cnsobs.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "cnsobs/scenario.hpp"

namespace {

thread_local std::string g_last_error;

int set_error(int code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return set_error(CNSOBS_EINVAL, e.what());
  } catch (const std::exception& e) {
    return set_error(CNSOBS_ERUNTIME, e.what());
  }
}

cnsobs::ObservedVar to_observed(cnsobs_observed o) {
  return o == CNSOBS_OBSERVE_DENSITY ? cnsobs::ObservedVar::density
                                     : cnsobs::ObservedVar::velocity;
}

cnsobs::WaveNumber make_wave(const int* wave, int dim) {
  if (!wave || dim < 1) throw std::invalid_argument("wave: null or empty");
  return cnsobs::WaveNumber(std::vector<int>(wave, wave + dim));
}

}  // namespace

struct cnsobs_params {
  cnsobs::FluidParams v;
};
struct cnsobs_kernels {
  cnsobs::KernelCoeffs v;
};
struct cnsobs_scenario {
  cnsobs::ScenarioConfig v;
};
struct cnsobs_table {
  cnsobs::ResultTable v;
};

extern "C" {

const char* cnsobs_version(void) { return "1.0.0"; }

const char* cnsobs_last_error(void) { return g_last_error.c_str(); }

int cnsobs_params_create(double gamma, double mu, double lambda, double rho0,
                         int dim, cnsobs_params** out) {
  if (!out) return set_error(CNSOBS_EINVAL, "out: null");
  return guarded([&] {
    cnsobs::FluidParams p{gamma, mu, lambda, rho0, dim};
    p.validate();
    *out = new cnsobs_params{p};
    return CNSOBS_OK;
  });
}

void cnsobs_params_destroy(cnsobs_params* p) { delete p; }

int cnsobs_constants(const cnsobs_params* p, double out[8]) {
  if (!p || !out) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    const cnsobs::SpectralConstants c = cnsobs::compute_constants(p->v);
    out[0] = c.c1;
    out[1] = c.c2;
    out[2] = c.c3;
    out[3] = c.c4.real();
    out[4] = c.c4.imag();
    out[5] = c.c5.real();
    out[6] = c.c5.imag();
    out[7] = p->v.nu();
    return CNSOBS_OK;
  });
}

int cnsobs_kernels_flat(cnsobs_observed target, double coeff_rho,
                        double coeff_u, int kmax, int allow_negative,
                        cnsobs_kernels** out) {
  if (!out) return set_error(CNSOBS_EINVAL, "out: null");
  return guarded([&] {
    *out = new cnsobs_kernels{cnsobs::KernelCoeffs::flat(
        to_observed(target), coeff_rho, coeff_u, kmax, allow_negative != 0)};
    return CNSOBS_OK;
  });
}

int cnsobs_kernels_design(const cnsobs_params* p, cnsobs_observed target,
                          double rate, double cutoff, cnsobs_kernels** out) {
  if (!p || !out) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    *out = new cnsobs_kernels{
        to_observed(target) == cnsobs::ObservedVar::velocity
            ? cnsobs::design_kernels_velocity(rate, cutoff, p->v)
            : cnsobs::design_kernels_density(rate, cutoff, p->v)};
    return CNSOBS_OK;
  });
}

int cnsobs_kernels_get(const cnsobs_kernels* k, const int* wave, int dim,
                       double* coeff_rho, double* coeff_u) {
  if (!k || !coeff_rho || !coeff_u)
    return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    const cnsobs::WaveNumber w = make_wave(wave, dim);
    *coeff_rho = k->v.rho_coeff(w);
    *coeff_u = k->v.u_coeff(w);
    return CNSOBS_OK;
  });
}

void cnsobs_kernels_destroy(cnsobs_kernels* k) { delete k; }

int cnsobs_eigen_closed_form(const cnsobs_params* p, const cnsobs_kernels* k,
                             const int* wave, int dim, cnsobs_mode_eigen* out) {
  if (!p || !k || !out) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    const cnsobs::ModeEigen m =
        cnsobs::eigenvalues_closed_form(p->v, k->v, make_wave(wave, dim));
    out->lambda_diff = m.lambda_diff.value_or(0.0);
    out->has_diff = m.lambda_diff.has_value();
    out->lambda_plus_re = m.lambda_plus.real();
    out->lambda_plus_im = m.lambda_plus.imag();
    out->lambda_minus_re = m.lambda_minus.real();
    out->lambda_minus_im = m.lambda_minus.imag();
    out->discriminant = m.discriminant;
    out->decay_rate = m.decay_rate;
    out->period = m.period.value_or(0.0);
    out->has_period = m.period.has_value();
    return CNSOBS_OK;
  });
}

int cnsobs_optimal_nudging(const cnsobs_params* p, const int* wave, int dim,
                           cnsobs_observed observed, double* coefficient,
                           double* rate) {
  if (!p || !coefficient || !rate)
    return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    const cnsobs::OptimalNudging n =
        cnsobs::optimal_nudging(p->v, make_wave(wave, dim), to_observed(observed));
    *coefficient = n.coefficient;
    *rate = n.rate;
    return CNSOBS_OK;
  });
}

int cnsobs_forced_amplitude(const cnsobs_params* p, const cnsobs_kernels* k,
                            int mode, double amplitude, double frequency,
                            double out[4]) {
  if (!p || !k || !out) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    const cnsobs::ForcedAmplitude f =
        cnsobs::forced_amplitude(p->v, k->v, {mode, amplitude, frequency});
    out[0] = f.a_coef;
    out[1] = f.b_coef;
    out[2] = f.velocity_amplitude;
    out[3] = f.density_amplitude;
    return CNSOBS_OK;
  });
}

int cnsobs_partial_obs_rate(const cnsobs_params* p, double phi_u, double L,
                            int mode, double* rate) {
  if (!p || !rate) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    *rate = cnsobs::partial_obs_rate(p->v, phi_u, L, mode);
    return CNSOBS_OK;
  });
}

int cnsobs_scenario_create(const char* id_or_path, cnsobs_scenario** out) {
  if (!id_or_path || !out) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    cnsobs::ScenarioConfig cfg;
    std::error_code ec;
    if (std::filesystem::exists(id_or_path, ec)) {
      try {
        cfg = cnsobs::load_scenario_file(id_or_path);
      } catch (const std::invalid_argument& e) {
        return set_error(CNSOBS_EPARSE, e.what());
      }
    } else {
      cfg = cnsobs::default_scenario(cnsobs::scenario_from_string(id_or_path));
    }
    *out = new cnsobs_scenario{std::move(cfg)};
    return CNSOBS_OK;
  });
}

int cnsobs_scenario_set(cnsobs_scenario* s, const char* key, const char* value) {
  if (!s || !key || !value) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    s->v.set(key, value);
    return CNSOBS_OK;
  });
}

int cnsobs_scenario_serialize(const cnsobs_scenario* s, char* buf, size_t cap,
                              size_t* needed) {
  if (!s || !needed) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    const std::string text = s->v.serialize();
    *needed = text.size();
    if (buf && cap > 0) {
      const size_t n = std::min(cap - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
    return CNSOBS_OK;
  });
}

int cnsobs_scenario_run(const cnsobs_scenario* s, const char* out_dir,
                        int workers, cnsobs_table** out) {
  if (!s || !out) return set_error(CNSOBS_EINVAL, "null argument");
  return guarded([&] {
    cnsobs::ScenarioResult r = cnsobs::run_scenario(s->v, workers);
    if (out_dir) {
      try {
        cnsobs::emit_plot_data(r, out_dir);
      } catch (const std::runtime_error& e) {
        return set_error(CNSOBS_EIO, e.what());
      }
    }
    *out = new cnsobs_table{std::move(r.summary)};
    return CNSOBS_OK;
  });
}

void cnsobs_scenario_destroy(cnsobs_scenario* s) { delete s; }

int cnsobs_table_shape(const cnsobs_table* t, int* rows, int* cols) {
  if (!t || !rows || !cols) return set_error(CNSOBS_EINVAL, "null argument");
  *rows = static_cast<int>(t->v.rows.size());
  *cols = static_cast<int>(t->v.columns.size());
  return CNSOBS_OK;
}

const char* cnsobs_table_column(const cnsobs_table* t, int col) {
  if (!t || col < 0 || col >= static_cast<int>(t->v.columns.size()))
    return nullptr;
  return t->v.columns[static_cast<size_t>(col)].c_str();
}

int cnsobs_table_cell(const cnsobs_table* t, int row, int col, double* value) {
  if (!t || !value) return set_error(CNSOBS_EINVAL, "null argument");
  if (row < 0 || row >= static_cast<int>(t->v.rows.size()) || col < 0 ||
      col >= static_cast<int>(t->v.columns.size()))
    return set_error(CNSOBS_EINVAL, "cell index out of range");
  *value = t->v.rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
  return CNSOBS_OK;
}

const char* cnsobs_table_row_status(const cnsobs_table* t, int row) {
  if (!t || row < 0 || row >= static_cast<int>(t->v.status.size()))
    return nullptr;
  return t->v.status[static_cast<size_t>(row)].c_str();
}

void cnsobs_table_destroy(cnsobs_table* t) { delete t; }

}  // extern "C"
