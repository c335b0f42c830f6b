// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface over the unimoments C API. Orchestration only: all
// mathematics lives behind unimoments.h. Reports go to stdout, logs and
// error messages to stderr, and exit codes mirror the API status codes
// (0 ok, 1 usage, 2 domain, 3 internal, 4 capacity).

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unimoments.h"

namespace {

// Insertion-ordered JSON keeps the documented field order stable.
using ojson = nlohmann::ordered_json;

struct RatBox {
  um_rat* p = nullptr;
  RatBox() = default;
  RatBox(const RatBox&) = delete;
  RatBox& operator=(const RatBox&) = delete;
  ~RatBox() { um_rat_free(p); }
};

std::string rat_str(const um_rat* r) {
  char* s = um_rat_to_string(r);
  std::string out = s ? s : "";
  um_str_free(s);
  return out;
}

double rat_dbl(const um_rat* r) {
  double d = 0;
  um_rat_to_double(r, &d);
  return d;
}

int report_api_error(int rc) {
  std::cerr << "error: " << um_last_error() << "\n";
  return rc;
}

int usage_fail(const std::string& msg) {
  std::cerr << "usage error: " << msg << "\n";
  return UM_EUSAGE;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// "a:b" inclusive integer range.
bool parse_range(const std::string& text, long& lo, long& hi) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    size_t used = 0;
    lo = std::stol(text.substr(0, colon), &used);
    if (used != colon) return false;
    const std::string rest = text.substr(colon + 1);
    hi = std::stol(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int env_threads() {
  const char* s = std::getenv("UM_THREADS");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 0 || v > 4096) {
    std::cerr << "warning: ignoring invalid UM_THREADS value\n";
    return 0;
  }
  return static_cast<int>(v);
}

void emit_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

// ---- m-ratio / m-ratio-limit ------------------------------------------

struct MRow {
  long k, r, N;  // N = -1 for the limit kind
  std::string value;
  double value_double;
};

ojson m_row_json(const MRow& row) {
  ojson j;
  j["subcommand"] = row.N >= 0 ? "m-ratio" : "m-ratio-limit";
  j["k"] = row.k;
  j["r"] = row.r;
  if (row.N >= 0) j["N"] = row.N;
  j["value"] = row.value;
  j["value_double"] = row.value_double;
  j["i_power"] = row.r % 4;
  j["convention"] = um_i_normalized_tag();
  return j;
}

int emit_m_rows(const std::vector<MRow>& rows, bool sweep, bool limit_kind,
                const std::string& format) {
  if (format == "json") {
    if (sweep) {
      ojson arr = ojson::array();
      for (const MRow& row : rows) arr.push_back(m_row_json(row));
      emit_json(arr);
    } else {
      emit_json(m_row_json(rows.front()));
    }
  } else if (format == "csv") {
    std::cout << (limit_kind ? "k,r,value,value_double,i_power\n"
                             : "k,r,N,value,value_double,i_power\n");
    for (const MRow& row : rows) {
      std::cout << row.k << ',' << row.r << ',';
      if (!limit_kind) std::cout << row.N << ',';
      std::cout << row.value << ',' << row.value_double << ',' << row.r % 4 << "\n";
    }
  } else {
    for (const MRow& row : rows) {
      std::cout << (limit_kind ? "m-ratio-limit" : "m-ratio") << " k=" << row.k
                << " r=" << row.r;
      if (!limit_kind) std::cout << " N=" << row.N;
      std::cout << ": " << row.value << " ~ " << row.value_double << " [i_power=" << row.r % 4
                << ", " << um_i_normalized_tag() << "]\n";
    }
  }
  return UM_OK;
}

// ---- rational function emission ----------------------------------------

int emit_ratfunc(um_ratfunc* f, const char* subcommand, const char* order_key, long order,
                 const std::string& format) {
  const long nd = um_ratfunc_num_degree(f);
  const long dd = um_ratfunc_den_degree(f);
  std::vector<std::string> num, den;
  for (long i = 0; i <= std::max<long>(nd, 0); ++i) {
    RatBox c;
    if (int rc = um_ratfunc_num_coeff(f, i, &c.p); rc != UM_OK) return report_api_error(rc);
    num.push_back(rat_str(c.p));
  }
  for (long i = 0; i <= std::max<long>(dd, 0); ++i) {
    RatBox c;
    if (int rc = um_ratfunc_den_coeff(f, i, &c.p); rc != UM_OK) return report_api_error(rc);
    den.push_back(rat_str(c.p));
  }
  char* rendered_c = um_ratfunc_render(f, "k");
  const std::string rendered = rendered_c ? rendered_c : "";
  um_str_free(rendered_c);

  if (format == "json") {
    ojson j;
    j["subcommand"] = subcommand;
    j[order_key] = order;
    j["variable"] = "k";
    j["num_degree"] = nd;
    j["den_degree"] = dd;
    j["num_coeffs"] = num;
    j["den_coeffs"] = den;
    j["rendered"] = rendered;
    j["convention"] = um_i_normalized_tag();
    emit_json(j);
  } else if (format == "csv") {
    std::cout << "part,index,coeff\n";
    for (size_t i = 0; i < num.size(); ++i)
      std::cout << "num," << i << ',' << num[i] << "\n";
    for (size_t i = 0; i < den.size(); ++i)
      std::cout << "den," << i << ',' << den[i] << "\n";
  } else {
    std::cout << subcommand << " " << order_key << "=" << order << ": " << rendered << "\n";
  }
  return UM_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unimoments: exact moments of derivatives of characteristic polynomials "
               "of Haar-random unitary matrices, with a Monte Carlo cross-check"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(um_version()));
  // Long-only help so the half-order option can be spelled --h.
  app.set_help_flag("--help", "print help and exit");

  const std::vector<std::string> formats = {"json", "csv", "plain"};
  const auto sub = [&app](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->set_help_flag("--help", "print help and exit");
    return s;
  };

  // m-ratio
  long mr_k = 1, mr_r = 0, mr_N = 1;
  std::string mr_krange, mr_rrange, mr_format = "plain";
  bool mr_poly = false;
  CLI::App* mratio = sub(
      "m-ratio", "Finite-size i-normalized moment ratio of order r at matrix size N");
  mratio->add_option("--k", mr_k, "power parameter, k >= 1");
  mratio->add_option("--r", mr_r, "derivative order, 0 <= r <= 2k");
  mratio->add_option("--N", mr_N, "matrix size, N >= 1")->check(CLI::NonNegativeNumber);
  mratio->add_option("--k-range", mr_krange, "sweep k over a:b (inclusive)");
  mratio->add_option("--r-range", mr_rrange, "sweep r over a:b (inclusive)");
  mratio->add_flag("--poly-N", mr_poly, "emit the value as a polynomial in N");
  mratio->add_option("--format", mr_format, "output format")->check(CLI::IsMember(formats));

  // m-ratio-limit
  long ml_k = 1, ml_r = 0;
  std::string ml_krange, ml_rrange, ml_format = "plain";
  CLI::App* mlimit = sub(
      "m-ratio-limit", "Large-N limit of the moment ratio divided by N^r");
  mlimit->add_option("--k", ml_k, "power parameter, k >= 1");
  mlimit->add_option("--r", ml_r, "derivative order, 0 <= r <= 2k");
  mlimit->add_option("--k-range", ml_krange, "sweep k over a:b (inclusive)");
  mlimit->add_option("--r-range", ml_rrange, "sweep r over a:b (inclusive)");
  mlimit->add_option("--format", ml_format, "output format")->check(CLI::IsMember(formats));

  // ratfunc
  long rf_r = 0;
  std::string rf_format = "plain";
  CLI::App* ratfunc = sub(
      "ratfunc", "Large-N limit ratio of order r as a rational function of k");
  ratfunc->add_option("--r", rf_r, "derivative order, r >= 0")->required()
      ->check(CLI::NonNegativeNumber);
  ratfunc->add_option("--format", rf_format, "output format")->check(CLI::IsMember(formats));

  // v-moment
  long vm_k = 1, vm_h = 0, vm_N = 1;
  std::string vm_format = "plain";
  CLI::App* vmoment = sub(
      "v-moment", "Absolute moment of order 2h of V'/V weighted by |V|^{2k} at size N");
  vmoment->add_option("--k", vm_k, "power parameter, k >= 1")->required();
  vmoment->add_option("--h", vm_h, "half order, 0 <= h <= k")->required();
  vmoment->add_option("--N", vm_N, "matrix size, N >= 1")->check(CLI::PositiveNumber);
  vmoment->add_option("--format", vm_format, "output format")->check(CLI::IsMember(formats));

  // v-ratfunc
  long vf_h = 0;
  std::string vf_format = "plain";
  CLI::App* vratfunc = sub(
      "v-ratfunc", "Large-N limit V-ratio of order 2h as a rational function of k");
  vratfunc->add_option("--h", vf_h, "half order, h >= 0")->required()
      ->check(CLI::NonNegativeNumber);
  vratfunc->add_option("--format", vf_format, "output format")->check(CLI::IsMember(formats));

  // moment-zero
  long mz_k = 1, mz_N = 1;
  bool mz_limit = false;
  std::string mz_format = "plain";
  CLI::App* mzero = sub(
      "moment-zero", "Zeroth absolute moment |Z|^{2k}: finite N or large-N normalization");
  mzero->add_option("--k", mz_k, "power parameter, k >= 1")->required();
  CLI::Option* mz_n_opt = mzero->add_option("--N", mz_N, "matrix size, N >= 1")
                              ->check(CLI::PositiveNumber);
  mzero->add_flag("--limit", mz_limit, "emit the large-N normalization instead")
      ->excludes(mz_n_opt);
  mzero->add_option("--format", mz_format, "output format")->check(CLI::IsMember(formats));

  // hypergeom
  std::string hy_upper, hy_lower, hy_z = "1", hy_format = "plain";
  long hy_N = 1, hy_maxdeg = 8;
  CLI::App* hyper = sub(
      "hypergeom", "Truncated hypergeometric sum of matrix argument at z times the identity");
  hyper->add_option("--upper", hy_upper, "comma-separated upper parameters (rationals)");
  hyper->add_option("--lower", hy_lower, "comma-separated lower parameters (rationals)");
  hyper->add_option("--N", hy_N, "matrix size, N >= 1")->check(CLI::PositiveNumber);
  hyper->add_option("--z", hy_z, "scalar argument (rational)");
  hyper->add_option("--max-degree", hy_maxdeg, "truncation degree, >= 0")
      ->check(CLI::NonNegativeNumber);
  hyper->add_option("--format", hy_format, "output format")->check(CLI::IsMember(formats));

  // egf-check
  long eg_k = 1, eg_N = 1, eg_rmax = -1;
  std::string eg_format = "plain";
  CLI::App* egf = sub(
      "egf-check", "Compare the moment-ratio generating function with the confluent sum");
  egf->add_option("--k", eg_k, "power parameter, k >= 1")->required();
  egf->add_option("--N", eg_N, "matrix size, N >= 1")->check(CLI::PositiveNumber);
  egf->add_option("--r-max", eg_rmax, "highest degree compared (default 2k)");
  egf->add_option("--format", eg_format, "output format")->check(CLI::IsMember(formats));

  // mc-verify
  std::string mc_kind = "m", mc_format = "plain";
  long mc_k = 1, mc_r = 0, mc_h = 0, mc_N = 1;
  unsigned long long mc_samples = 200000;
  std::uint64_t mc_seed = 12345;
  int mc_threads = env_threads();
  CLI::App* mc = sub(
      "mc-verify", "Monte Carlo estimate against the exact engine value");
  mc->add_option("--kind", mc_kind, "statistic family: m or v")
      ->check(CLI::IsMember({"m", "v"}));
  mc->add_option("--k", mc_k, "power parameter, k >= 1")->required();
  mc->add_option("--r", mc_r, "derivative order for kind m");
  mc->add_option("--h", mc_h, "half order for kind v");
  mc->add_option("--N", mc_N, "matrix size, N >= 1")->check(CLI::PositiveNumber);
  mc->add_option("--samples", mc_samples, "number of Haar draws, >= 1000");
  mc->add_option("--seed", mc_seed, "RNG seed; fully determines the estimate");
  mc->add_option("--threads", mc_threads, "worker threads, 0 = auto (default from UM_THREADS)");
  mc->add_option("--format", mc_format, "output format")->check(CLI::IsMember(formats));

  // selftest
  bool st_full = false;
  std::string st_format = "plain";
  CLI::App* selftest = sub("selftest", "Run the built-in consistency sweeps");
  selftest->add_flag("--full", st_full, "widen ranges (slower)");
  selftest->add_option("--format", st_format, "output format")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "usage error: " << e.what() << "\n";
    return UM_EUSAGE;
  }

  // ---- m-ratio ----------------------------------------------------------
  if (*mratio) {
    if (mratio->count("--k") == 0 && mr_krange.empty())
      return usage_fail("--k or --k-range is required");
    if (mr_k < 1) return usage_fail("--k must be >= 1");
    const bool sweep = !mr_krange.empty() || !mr_rrange.empty();
    if (mr_poly && sweep) return usage_fail("--poly-N cannot be combined with range sweeps");
    if (mr_poly) {
      if (mr_r > 2 * mr_k) {
        std::cerr << "error: m-ratio requires r <= 2k (got r=" << mr_r << ", k=" << mr_k
                  << ")\n";
        return UM_EDOMAIN;
      }
      um_poly* p = nullptr;
      if (int rc = um_m_ratio_finite_polyN(mr_k, mr_r, &p); rc != UM_OK)
        return report_api_error(rc);
      const long deg = um_poly_degree(p);
      std::vector<std::string> coeffs;
      for (long i = 0; i <= std::max<long>(deg, 0); ++i) {
        RatBox c;
        if (int rc = um_poly_coeff(p, i, &c.p); rc != UM_OK) {
          um_poly_free(p);
          return report_api_error(rc);
        }
        coeffs.push_back(rat_str(c.p));
      }
      char* rendered_c = um_poly_render(p, "N");
      const std::string rendered = rendered_c ? rendered_c : "";
      um_str_free(rendered_c);
      um_poly_free(p);
      if (mr_format == "json") {
        ojson j;
        j["subcommand"] = "m-ratio";
        j["k"] = mr_k;
        j["r"] = mr_r;
        j["poly_N"] = true;
        j["variable"] = "N";
        j["degree"] = deg;
        j["coeffs"] = coeffs;
        j["rendered"] = rendered;
        j["i_power"] = mr_r % 4;
        j["convention"] = um_i_normalized_tag();
        emit_json(j);
      } else if (mr_format == "csv") {
        std::cout << "index,coeff\n";
        for (size_t i = 0; i < coeffs.size(); ++i) std::cout << i << ',' << coeffs[i] << "\n";
      } else {
        std::cout << "m-ratio k=" << mr_k << " r=" << mr_r << " as a polynomial in N: "
                  << rendered << "\n";
      }
      return UM_OK;
    }
    long k_lo = mr_k, k_hi = mr_k, r_lo = mr_r, r_hi = mr_r;
    if (!mr_krange.empty() && !parse_range(mr_krange, k_lo, k_hi))
      return usage_fail("--k-range expects a:b with a <= b");
    if (!mr_rrange.empty() && !parse_range(mr_rrange, r_lo, r_hi))
      return usage_fail("--r-range expects a:b with a <= b");
    if (!sweep && mr_r > 2 * mr_k) {
      std::cerr << "error: m-ratio requires r <= 2k (got r=" << mr_r << ", k=" << mr_k
                << ")\n";
      return UM_EDOMAIN;
    }
    std::vector<MRow> rows;
    for (long k = k_lo; k <= k_hi; ++k) {
      for (long r = r_lo; r <= r_hi; ++r) {
        if (sweep && (k < 1 || r < 0 || r > 2 * k)) continue;  // out-of-domain sweep cells
        RatBox v;
        if (int rc = um_m_ratio_finite(k, r, mr_N, &v.p); rc != UM_OK)
          return report_api_error(rc);
        rows.push_back({k, r, mr_N, rat_str(v.p), rat_dbl(v.p)});
      }
    }
    return emit_m_rows(rows, sweep, /*limit_kind=*/false, mr_format);
  }

  // ---- m-ratio-limit ------------------------------------------------------
  if (*mlimit) {
    if (mlimit->count("--k") == 0 && ml_krange.empty())
      return usage_fail("--k or --k-range is required");
    if (ml_k < 1) return usage_fail("--k must be >= 1");
    const bool sweep = !ml_krange.empty() || !ml_rrange.empty();
    long k_lo = ml_k, k_hi = ml_k, r_lo = ml_r, r_hi = ml_r;
    if (!ml_krange.empty() && !parse_range(ml_krange, k_lo, k_hi))
      return usage_fail("--k-range expects a:b with a <= b");
    if (!ml_rrange.empty() && !parse_range(ml_rrange, r_lo, r_hi))
      return usage_fail("--r-range expects a:b with a <= b");
    if (!sweep && ml_r > 2 * ml_k) {
      std::cerr << "error: m-ratio-limit requires r <= 2k (got r=" << ml_r << ", k=" << ml_k
                << ")\n";
      return UM_EDOMAIN;
    }
    std::vector<MRow> rows;
    for (long k = k_lo; k <= k_hi; ++k) {
      for (long r = r_lo; r <= r_hi; ++r) {
        if (sweep && (k < 1 || r < 0 || r > 2 * k)) continue;
        RatBox v;
        if (int rc = um_m_ratio_limit(k, r, &v.p); rc != UM_OK) return report_api_error(rc);
        rows.push_back({k, r, -1, rat_str(v.p), rat_dbl(v.p)});
      }
    }
    return emit_m_rows(rows, sweep, /*limit_kind=*/true, ml_format);
  }

  // ---- ratfunc / v-ratfunc ------------------------------------------------
  if (*ratfunc) {
    um_ratfunc* f = nullptr;
    if (int rc = um_m_ratio_limit_ratfunc(rf_r, &f); rc != UM_OK) return report_api_error(rc);
    const int rc = emit_ratfunc(f, "ratfunc", "r", rf_r, rf_format);
    um_ratfunc_free(f);
    return rc;
  }
  if (*vratfunc) {
    um_ratfunc* f = nullptr;
    if (int rc = um_v_ratio_limit_ratfunc(vf_h, &f); rc != UM_OK) return report_api_error(rc);
    const int rc = emit_ratfunc(f, "v-ratfunc", "h", vf_h, vf_format);
    um_ratfunc_free(f);
    return rc;
  }

  // ---- v-moment -------------------------------------------------------------
  if (*vmoment) {
    if (vm_k < 1) return usage_fail("--k must be >= 1");
    if (vm_h > vm_k || vm_h < 0) {
      std::cerr << "error: v-moment requires 0 <= h <= k (got h=" << vm_h << ", k=" << vm_k
                << ")\n";
      return UM_EDOMAIN;
    }
    RatBox v;
    if (int rc = um_v_moment_finite(vm_k, vm_h, vm_N, &v.p); rc != UM_OK)
      return report_api_error(rc);
    if (vm_format == "json") {
      ojson j;
      j["subcommand"] = "v-moment";
      j["k"] = vm_k;
      j["h"] = vm_h;
      j["N"] = vm_N;
      j["value"] = rat_str(v.p);
      j["value_double"] = rat_dbl(v.p);
      j["convention"] = "real";
      emit_json(j);
    } else if (vm_format == "csv") {
      std::cout << "k,h,N,value,value_double\n"
                << vm_k << ',' << vm_h << ',' << vm_N << ',' << rat_str(v.p) << ','
                << rat_dbl(v.p) << "\n";
    } else {
      std::cout << "v-moment k=" << vm_k << " h=" << vm_h << " N=" << vm_N << ": "
                << rat_str(v.p) << " ~ " << rat_dbl(v.p) << "\n";
    }
    return UM_OK;
  }

  // ---- moment-zero ----------------------------------------------------------
  if (*mzero) {
    if (mz_k < 1) return usage_fail("--k must be >= 1");
    RatBox v;
    const int rc = mz_limit ? um_moment_zero_limit(mz_k, &v.p)
                            : um_moment_zero_finite(mz_k, mz_N, &v.p);
    if (rc != UM_OK) return report_api_error(rc);
    if (mz_format == "json") {
      ojson j;
      j["subcommand"] = "moment-zero";
      j["k"] = mz_k;
      if (mz_limit) {
        j["limit"] = true;
      } else {
        j["N"] = mz_N;
      }
      j["value"] = rat_str(v.p);
      j["value_double"] = rat_dbl(v.p);
      emit_json(j);
    } else if (mz_format == "csv") {
      std::cout << "k,N,value,value_double\n" << mz_k << ',';
      if (mz_limit) {
        std::cout << "limit";
      } else {
        std::cout << mz_N;
      }
      std::cout << ',' << rat_str(v.p) << ',' << rat_dbl(v.p) << "\n";
    } else {
      std::cout << "moment-zero k=" << mz_k;
      if (mz_limit) {
        std::cout << " (large-N normalization)";
      } else {
        std::cout << " N=" << mz_N;
      }
      std::cout << ": " << rat_str(v.p) << " ~ " << rat_dbl(v.p) << "\n";
    }
    return UM_OK;
  }

  // ---- hypergeom --------------------------------------------------------------
  if (*hyper) {
    const std::vector<std::string> upper = split_commas(hy_upper);
    const std::vector<std::string> lower = split_commas(hy_lower);
    for (const auto& s : upper)
      if (s.empty()) return usage_fail("--upper contains an empty entry");
    for (const auto& s : lower)
      if (s.empty()) return usage_fail("--lower contains an empty entry");
    std::vector<const char*> up, lo;
    for (const auto& s : upper) up.push_back(s.c_str());
    for (const auto& s : lower) lo.push_back(s.c_str());

    um_rat** layers = nullptr;
    size_t n_layers = 0;
    int rc = um_hyper_layers(up.data(), up.size(), lo.data(), lo.size(), hy_N, hy_maxdeg,
                             &layers, &n_layers);
    if (rc != UM_OK) return report_api_error(rc);
    RatBox value;
    rc = um_hyper_pfq_scalar(up.data(), up.size(), lo.data(), lo.size(), hy_N, hy_z.c_str(),
                             hy_maxdeg, &value.p);
    if (rc != UM_OK) {
      um_rat_array_free(layers, n_layers);
      return report_api_error(rc);
    }
    std::vector<std::string> layer_strs;
    layer_strs.reserve(n_layers);
    for (size_t i = 0; i < n_layers; ++i) layer_strs.push_back(rat_str(layers[i]));
    um_rat_array_free(layers, n_layers);

    if (hy_format == "json") {
      ojson j;
      j["subcommand"] = "hypergeom";
      j["upper"] = upper;
      j["lower"] = lower;
      j["N"] = hy_N;
      j["z"] = hy_z;
      j["max_degree"] = hy_maxdeg;
      j["layers"] = layer_strs;
      j["value"] = rat_str(value.p);
      j["value_double"] = rat_dbl(value.p);
      emit_json(j);
    } else if (hy_format == "csv") {
      std::cout << "degree,layer\n";
      for (size_t i = 0; i < layer_strs.size(); ++i)
        std::cout << i << ',' << layer_strs[i] << "\n";
    } else {
      std::cout << "hypergeom N=" << hy_N << " z=" << hy_z << " truncated at degree "
                << hy_maxdeg << "\n";
      for (size_t i = 0; i < layer_strs.size(); ++i)
        std::cout << "  layer " << i << ": " << layer_strs[i] << "\n";
      std::cout << "value: " << rat_str(value.p) << " ~ " << rat_dbl(value.p) << "\n";
    }
    return UM_OK;
  }

  // ---- egf-check ---------------------------------------------------------------
  if (*egf) {
    if (eg_k < 1) return usage_fail("--k must be >= 1");
    if (eg_rmax < 0) eg_rmax = 2 * eg_k;
    int equal = 0;
    um_rat** residuals = nullptr;
    size_t n_res = 0;
    if (int rc = um_egf_check(eg_k, eg_N, eg_rmax, &equal, &residuals, &n_res); rc != UM_OK)
      return report_api_error(rc);
    std::vector<std::string> res_strs;
    res_strs.reserve(n_res);
    for (size_t i = 0; i < n_res; ++i) res_strs.push_back(rat_str(residuals[i]));
    um_rat_array_free(residuals, n_res);

    if (eg_format == "json") {
      ojson j;
      j["subcommand"] = "egf-check";
      j["k"] = eg_k;
      j["N"] = eg_N;
      j["r_max"] = eg_rmax;
      j["equal"] = equal != 0;
      j["residuals"] = res_strs;
      emit_json(j);
    } else if (eg_format == "csv") {
      std::cout << "degree,residual\n";
      for (size_t i = 0; i < res_strs.size(); ++i)
        std::cout << i << ',' << res_strs[i] << "\n";
    } else {
      std::cout << "egf-check k=" << eg_k << " N=" << eg_N << " r_max=" << eg_rmax << ": "
                << (equal ? "equal at every degree" : "MISMATCH") << "\n";
    }
    if (!equal) {
      std::cerr << "error: generating-function residuals are nonzero\n";
      return UM_EINTERNAL;
    }
    return UM_OK;
  }

  // ---- mc-verify ------------------------------------------------------------------
  if (*mc) {
    if (mc_k < 1) return usage_fail("--k must be >= 1");
    const bool kind_m = mc_kind == "m";
    if (kind_m && (mc_r < 0 || mc_r > 2 * mc_k)) {
      std::cerr << "error: mc-verify kind m requires 0 <= r <= 2k (got r=" << mc_r
                << ", k=" << mc_k << ")\n";
      return UM_EDOMAIN;
    }
    if (!kind_m && (mc_h < 0 || mc_h > mc_k)) {
      std::cerr << "error: mc-verify kind v requires 0 <= h <= k (got h=" << mc_h
                << ", k=" << mc_k << ")\n";
      return UM_EDOMAIN;
    }
    if (mc_k >= 4) {
      std::cerr << "warning: the per-draw statistic is heavy-tailed for k >= 4; "
                   "the reported standard error may be unreliable\n";
    }
    RatBox exact;
    int rc = kind_m ? um_m_ratio_finite(mc_k, mc_r, mc_N, &exact.p)
                    : um_v_moment_finite(mc_k, mc_h, mc_N, &exact.p);
    if (rc != UM_OK) return report_api_error(rc);
    um_mc_estimate est;
    rc = kind_m
             ? um_estimate_m_moment(mc_k, mc_r, mc_N, mc_samples, mc_seed, mc_threads, &est)
             : um_estimate_v_moment(mc_k, mc_h, mc_N, mc_samples, mc_seed, mc_threads, &est);
    if (rc != UM_OK) return report_api_error(rc);

    const double exact_d = rat_dbl(exact.p);
    const double diff = est.mean_real - exact_d;
    const auto sigmas = [](double delta, double se) {
      if (se > 0) return std::abs(delta) / se;
      return delta == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    };
    const double sig_real = sigmas(diff, est.std_error);
    const double sig_imag = sigmas(est.mean_imag, est.std_error_imag);
    const bool within = sig_real <= 4.0;
    const bool imag_within = sig_imag <= 4.0;
    const double resample_frac =
        static_cast<double>(est.resampled) / static_cast<double>(est.samples);
    const bool resample_ok = resample_frac < 1e-4;

    if (mc_format == "json") {
      ojson j;
      j["subcommand"] = "mc-verify";
      j["kind"] = mc_kind;
      j["k"] = mc_k;
      if (kind_m) {
        j["r"] = mc_r;
      } else {
        j["h"] = mc_h;
      }
      j["N"] = mc_N;
      j["samples"] = est.samples;
      j["seed"] = est.seed;
      j["exact"] = rat_str(exact.p);
      j["exact_double"] = exact_d;
      j["mean_real"] = est.mean_real;
      j["mean_imag"] = est.mean_imag;
      j["std_error"] = est.std_error;
      j["std_error_imag"] = est.std_error_imag;
      j["sigmas_real"] = sig_real;
      j["sigmas_imag"] = sig_imag;
      j["within_4se"] = within;
      j["imag_within_4se"] = imag_within;
      j["resampled"] = est.resampled;
      emit_json(j);
    } else if (mc_format == "csv") {
      std::cout << "kind,k,order,N,samples,seed,exact,exact_double,mean_real,mean_imag,"
                   "std_error,std_error_imag,sigmas_real,sigmas_imag,within_4se,"
                   "imag_within_4se,resampled\n";
      std::cout << mc_kind << ',' << mc_k << ',' << (kind_m ? mc_r : mc_h) << ',' << mc_N
                << ',' << est.samples << ',' << est.seed << ',' << rat_str(exact.p) << ','
                << exact_d << ',' << est.mean_real << ',' << est.mean_imag << ','
                << est.std_error << ',' << est.std_error_imag << ',' << sig_real << ','
                << sig_imag << ',' << (within ? 1 : 0) << ',' << (imag_within ? 1 : 0) << ','
                << est.resampled << "\n";
    } else {
      std::cout << "mc-verify kind=" << mc_kind << " k=" << mc_k
                << (kind_m ? " r=" : " h=") << (kind_m ? mc_r : mc_h) << " N=" << mc_N
                << " samples=" << est.samples << " seed=" << est.seed << "\n";
      std::cout << "  exact    = " << rat_str(exact.p) << " ~ " << exact_d << "\n";
      std::cout << "  estimate = " << est.mean_real << " +/- " << est.std_error << " (imag "
                << est.mean_imag << " +/- " << est.std_error_imag << ")\n";
      std::cout << "  deviation: " << sig_real << " SE (imag " << sig_imag << " SE), "
                << (within && imag_within ? "within" : "OUTSIDE") << " the 4 SE band\n";
      if (est.resampled)
        std::cout << "  resampled degenerate draws: " << est.resampled << "\n";
    }
    if (!resample_ok) {
      std::cerr << "error: degenerate-draw rate " << resample_frac
                << " exceeds the 0.01% contract\n";
      return UM_EINTERNAL;
    }
    if (!within || !imag_within) {
      std::cerr << "error: Monte Carlo estimate deviates from the exact value by more "
                   "than 4 standard errors\n";
      return UM_EINTERNAL;
    }
    return UM_OK;
  }

  // ---- selftest ----------------------------------------------------------------------
  if (*selftest) {
    um_selftest_result* results = nullptr;
    size_t count = 0;
    if (int rc = um_selftest(st_full ? 1 : 0, &results, &count); rc != UM_OK)
      return report_api_error(rc);
    size_t passed = 0;
    for (size_t i = 0; i < count; ++i)
      if (results[i].passed) ++passed;

    if (st_format == "json") {
      ojson arr = ojson::array();
      for (size_t i = 0; i < count; ++i) {
        ojson j;
        j["name"] = results[i].name;
        j["passed"] = results[i].passed != 0;
        j["detail"] = results[i].detail;
        arr.push_back(j);
      }
      ojson top;
      top["subcommand"] = "selftest";
      top["full"] = st_full;
      top["passed"] = passed;
      top["total"] = count;
      top["all_passed"] = passed == count;
      top["results"] = arr;
      emit_json(top);
    } else if (st_format == "csv") {
      std::cout << "name,passed,detail\n";
      for (size_t i = 0; i < count; ++i) {
        std::cout << results[i].name << ',' << (results[i].passed ? 1 : 0) << ','
                  << csv_quote(results[i].detail) << "\n";
      }
    } else {
      for (size_t i = 0; i < count; ++i) {
        if (results[i].passed) {
          std::cout << "PASS " << results[i].name << "\n";
        } else {
          std::cout << "FAIL " << results[i].name << ": " << results[i].detail << "\n";
        }
      }
      std::cout << "self test: " << passed << "/" << count << " checks passed\n";
    }
    const bool all = passed == count;
    um_selftest_free(results, count);
    if (!all) {
      std::cerr << "error: self test reported failures\n";
      return UM_EINTERNAL;
    }
    return UM_OK;
  }

  return usage_fail("no subcommand selected");
}
