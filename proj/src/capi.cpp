// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "unimoments.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "um/error.hpp"
#include "um/haar.hpp"
#include "um/hypergeom.hpp"
#include "um/moments.hpp"
#include "um/polynomial.hpp"
#include "um/rational.hpp"
#include "um/rational_function.hpp"
#include "um/selftest.hpp"

struct um_rat {
  um::Rat v;
};
struct um_poly {
  um::PolyQ v;
};
struct um_ratfunc {
  um::RatFuncQ v;
};

namespace {

thread_local std::string g_last_error;

// Strings handed to C callers are malloc'd so um_str_free can be plain free
// even if the library and the caller use different C++ runtimes.
char* dup_cstr(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return UM_OK;
  } catch (const um::error& e) {
    g_last_error = e.what();
    return e.code();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UM_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return UM_EINTERNAL;
  }
}

int usage(const char* msg) {
  g_last_error = msg;
  return UM_EUSAGE;
}

std::vector<um::Rat> parse_list(const char* const* items, size_t n) {
  std::vector<um::Rat> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (!items[i]) throw um::usage_error("null string in parameter list");
    out.push_back(um::rat_from_string(items[i]));
  }
  return out;
}

um_rat** dup_rat_array(const std::vector<um::Rat>& xs) {
  um_rat** arr = static_cast<um_rat**>(std::calloc(xs.size() ? xs.size() : 1, sizeof(um_rat*)));
  if (!arr) throw std::bad_alloc();
  for (size_t i = 0; i < xs.size(); ++i) arr[i] = new um_rat{xs[i]};
  return arr;
}

}  // namespace

extern "C" {

const char* um_version(void) { return "1.0.0"; }

const char* um_last_error(void) { return g_last_error.c_str(); }

void um_str_free(char* s) { std::free(s); }

int um_rat_from_string(const char* text, um_rat** out) {
  if (!text || !out) return usage("um_rat_from_string: null argument");
  return guard([&] { *out = new um_rat{um::rat_from_string(text)}; });
}

char* um_rat_to_string(const um_rat* x) {
  if (!x) return nullptr;
  return dup_cstr(um::rat_to_string(x->v));
}

int um_rat_to_double(const um_rat* x, double* out) {
  if (!x || !out) return usage("um_rat_to_double: null argument");
  return guard([&] { *out = um::rat_to_double(x->v); });
}

void um_rat_free(um_rat* x) { delete x; }

const char* um_i_normalized_tag(void) { return um::kINormalizedTag; }

int um_m_ratio_finite(long k, long r, long N, um_rat** out) {
  if (!out) return usage("um_m_ratio_finite: null out");
  return guard([&] { *out = new um_rat{um::m_ratio_finite(k, r, N)}; });
}

int um_m_ratio_limit(long k, long r, um_rat** out) {
  if (!out) return usage("um_m_ratio_limit: null out");
  return guard([&] { *out = new um_rat{um::m_ratio_limit(k, r)}; });
}

int um_moment_zero_finite(long k, long N, um_rat** out) {
  if (!out) return usage("um_moment_zero_finite: null out");
  return guard([&] { *out = new um_rat{um::moment_zero_finite(k, N)}; });
}

int um_moment_zero_limit(long k, um_rat** out) {
  if (!out) return usage("um_moment_zero_limit: null out");
  return guard([&] { *out = new um_rat{um::moment_zero_limit(k)}; });
}

int um_v_moment_finite(long k, long h, long N, um_rat** out) {
  if (!out) return usage("um_v_moment_finite: null out");
  return guard([&] { *out = new um_rat{um::v_moment_finite(k, h, N)}; });
}

int um_m_ratio_finite_polyN(long k, long r, um_poly** out) {
  if (!out) return usage("um_m_ratio_finite_polyN: null out");
  return guard([&] { *out = new um_poly{um::m_ratio_finite_polyN(k, r)}; });
}

long um_poly_degree(const um_poly* p) { return p ? p->v.degree() : -1; }

int um_poly_coeff(const um_poly* p, long i, um_rat** out) {
  if (!p || !out) return usage("um_poly_coeff: null argument");
  return guard([&] { *out = new um_rat{p->v.coeff(i)}; });
}

char* um_poly_render(const um_poly* p, const char* var) {
  if (!p || !var) return nullptr;
  return dup_cstr(p->v.render(var));
}

int um_poly_eval(const um_poly* p, const um_rat* x, um_rat** out) {
  if (!p || !x || !out) return usage("um_poly_eval: null argument");
  return guard([&] { *out = new um_rat{p->v.evaluate(x->v)}; });
}

void um_poly_free(um_poly* p) { delete p; }

int um_m_ratio_limit_ratfunc(long r, um_ratfunc** out) {
  if (!out) return usage("um_m_ratio_limit_ratfunc: null out");
  return guard([&] { *out = new um_ratfunc{um::m_ratio_limit_ratfunc(r)}; });
}

int um_v_ratio_limit_ratfunc(long h, um_ratfunc** out) {
  if (!out) return usage("um_v_ratio_limit_ratfunc: null out");
  return guard([&] { *out = new um_ratfunc{um::v_ratio_limit_ratfunc(h)}; });
}

long um_ratfunc_num_degree(const um_ratfunc* f) { return f ? f->v.num().degree() : -1; }

long um_ratfunc_den_degree(const um_ratfunc* f) { return f ? f->v.den().degree() : -1; }

int um_ratfunc_num_coeff(const um_ratfunc* f, long i, um_rat** out) {
  if (!f || !out) return usage("um_ratfunc_num_coeff: null argument");
  return guard([&] { *out = new um_rat{f->v.num().coeff(i)}; });
}

int um_ratfunc_den_coeff(const um_ratfunc* f, long i, um_rat** out) {
  if (!f || !out) return usage("um_ratfunc_den_coeff: null argument");
  return guard([&] { *out = new um_rat{f->v.den().coeff(i)}; });
}

char* um_ratfunc_render(const um_ratfunc* f, const char* var) {
  if (!f || !var) return nullptr;
  return dup_cstr(f->v.render(var));
}

int um_ratfunc_eval(const um_ratfunc* f, const um_rat* x, um_rat** out) {
  if (!f || !x || !out) return usage("um_ratfunc_eval: null argument");
  return guard([&] { *out = new um_rat{f->v.evaluate(x->v)}; });
}

void um_ratfunc_free(um_ratfunc* f) { delete f; }

int um_hyper_layers(const char* const* upper, size_t n_upper, const char* const* lower,
                    size_t n_lower, long N, long max_degree, um_rat*** out_layers,
                    size_t* out_count) {
  if ((!upper && n_upper) || (!lower && n_lower) || !out_layers || !out_count)
    return usage("um_hyper_layers: null argument");
  return guard([&] {
    const auto layers =
        um::hyper_layers(parse_list(upper, n_upper), parse_list(lower, n_lower), N, max_degree);
    *out_layers = dup_rat_array(layers);
    *out_count = layers.size();
  });
}

int um_hyper_pfq_scalar(const char* const* upper, size_t n_upper, const char* const* lower,
                        size_t n_lower, long N, const char* z, long max_degree, um_rat** out) {
  if ((!upper && n_upper) || (!lower && n_lower) || !z || !out)
    return usage("um_hyper_pfq_scalar: null argument");
  return guard([&] {
    um::HyperParams p;
    p.upper = parse_list(upper, n_upper);
    p.lower = parse_list(lower, n_lower);
    p.N = N;
    p.z = um::rat_from_string(z);
    p.max_degree = max_degree;
    *out = new um_rat{um::hyper_pfq_scalar(p)};
  });
}

void um_rat_array_free(um_rat** arr, size_t count) {
  if (!arr) return;
  for (size_t i = 0; i < count; ++i) delete arr[i];
  std::free(arr);
}

int um_egf_check(long k, long N, long r_max, int* out_equal, um_rat*** out_residuals,
                 size_t* out_count) {
  if (!out_equal || (out_residuals && !out_count))
    return usage("um_egf_check: null argument");
  return guard([&] {
    const um::EgfCheckResult res = um::egf_check(k, N, r_max);
    *out_equal = res.equal ? 1 : 0;
    if (out_residuals) {
      *out_residuals = dup_rat_array(res.residuals);
      *out_count = res.residuals.size();
    }
  });
}

int um_estimate_m_moment(long k, long r, long N, unsigned long long samples, uint64_t seed,
                         int threads, um_mc_estimate* out) {
  if (!out) return usage("um_estimate_m_moment: null out");
  return guard([&] {
    const um::McEstimate e = um::estimate_m_moment(k, r, N, samples, seed, threads);
    *out = {e.mean_real, e.mean_imag, e.std_error, e.std_error_imag,
            e.samples,   e.seed,      e.resampled};
  });
}

int um_estimate_v_moment(long k, long h, long N, unsigned long long samples, uint64_t seed,
                         int threads, um_mc_estimate* out) {
  if (!out) return usage("um_estimate_v_moment: null out");
  return guard([&] {
    const um::McEstimate e = um::estimate_v_moment(k, h, N, samples, seed, threads);
    *out = {e.mean_real, e.mean_imag, e.std_error, e.std_error_imag,
            e.samples,   e.seed,      e.resampled};
  });
}

int um_selftest(int full, um_selftest_result** out, size_t* out_count) {
  if (!out || !out_count) return usage("um_selftest: null argument");
  return guard([&] {
    const auto results = um::run_selftest(full != 0);
    auto* arr = static_cast<um_selftest_result*>(
        std::calloc(results.size() ? results.size() : 1, sizeof(um_selftest_result)));
    if (!arr) throw std::bad_alloc();
    for (size_t i = 0; i < results.size(); ++i) {
      arr[i].name = dup_cstr(results[i].name);
      arr[i].passed = results[i].passed ? 1 : 0;
      arr[i].detail = dup_cstr(results[i].detail);
    }
    *out = arr;
    *out_count = results.size();
  });
}

void um_selftest_free(um_selftest_result* results, size_t count) {
  if (!results) return;
  for (size_t i = 0; i < count; ++i) {
    std::free(results[i].name);
    std::free(results[i].detail);
  }
  std::free(results);
}

}  // extern "C"
