// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "haar.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "error.hpp"
#include "moments.hpp"
#include "rational.hpp"

namespace um {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
constexpr double kDegenerateAngle = 1e-12;

// Fixed block size for deterministic reduction: each block's partial sums
// are computed by exactly one worker in a fixed sample order, and blocks
// are merged in index order, so results are bit-identical for any thread
// count.
constexpr unsigned long long kBlockSize = 1024;

Eigen::MatrixXcd ginibre(long N, RandomStream& stream) {
  Eigen::MatrixXcd g(N, N);
  for (long i = 0; i < N; ++i) {
    for (long j = 0; j < N; ++j) {
      double re, im;
      stream.next_normal_pair(re, im);
      g(i, j) = std::complex<double>(re, im) * kInvSqrt2;
    }
  }
  return g;
}

bool try_sample(long N, RandomStream& stream, EigenangleSample& out) {
  const Eigen::MatrixXcd g = ginibre(N, stream);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd u = qr.householderQ();
  const Eigen::VectorXcd diag = qr.matrixQR().diagonal();
  for (long j = 0; j < N; ++j) {
    const double a = std::abs(diag(j));
    if (a == 0.0) return false;
    u.col(j) *= diag(j) / a;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) return false;
  out.angles.resize(static_cast<size_t>(N));
  for (long j = 0; j < N; ++j) {
    double t = std::arg(es.eigenvalues()(j));
    if (t <= -kPi) t += 2 * kPi;
    out.angles[static_cast<size_t>(j)] = t;
  }
  return true;
}

}  // namespace

EigenangleSample sample_haar(long N, RandomStream& stream) {
  if (N < 1) throw domain_error("sample_haar requires N >= 1");
  EigenangleSample s;
  if (try_sample(N, stream, s)) return s;
  if (try_sample(N, stream, s)) return s;  // one retry per contract
  throw internal_error("sample_haar: factorization degenerated twice in a row");
}

ZLog z_log_deriv(const EigenangleSample& s) {
  ZLog out;
  out.z0 = std::complex<double>(1.0, 0.0);
  double cot_sum = 0.0;
  for (double t : s.angles) {
    if (std::abs(t) < kDegenerateAngle) {
      throw domain_error("z_log_deriv: eigenangle too close to zero");
    }
    out.z0 *= std::complex<double>(1.0, 0.0) -
              std::complex<double>(std::cos(t), std::sin(t));
    cot_sum += std::cos(t / 2) / std::sin(t / 2);
  }
  if (std::abs(out.z0) < 1e-300) throw domain_error("z_log_deriv: |Z(0)| underflow");
  const double n = static_cast<double>(s.angles.size());
  out.log_deriv = std::complex<double>(-0.5 * cot_sum, -0.5 * n);
  return out;
}

VLog v_log_deriv(const EigenangleSample& s) {
  const ZLog z = z_log_deriv(s);
  const double n = static_cast<double>(s.angles.size());
  VLog out;
  out.log_deriv = z.log_deriv + std::complex<double>(0.0, 0.5 * n);
  double angle_sum = 0.0;
  for (double t : s.angles) angle_sum += t;
  const std::complex<double> phase =
      std::polar(1.0, 0.5 * n * kPi) * std::polar(1.0, -0.5 * angle_sum);
  const std::complex<double> v0 = phase * z.z0;
  out.v0_abs = std::abs(v0);
  const double z0_abs = std::abs(z.z0);
  if (std::abs(out.v0_abs - z0_abs) > 1e-9 * z0_abs) {
    throw internal_error("v_log_deriv: |V(0)| drifted from |Z(0)|");
  }
  return out;
}

namespace {

struct BlockSums {
  double sum_re = 0, sum_im = 0;
  double sumsq_re = 0, sumsq_im = 0;
  unsigned long long resampled = 0;
};

EigenangleSample draw_usable(long N, RandomStream& stream, unsigned long long& resampled) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    EigenangleSample s = sample_haar(N, stream);
    const bool degenerate = std::any_of(s.angles.begin(), s.angles.end(), [](double t) {
      return std::abs(t) < kDegenerateAngle;
    });
    if (!degenerate) return s;
    ++resampled;  // measure-zero event; resampling keeps the estimator unbiased
  }
  throw internal_error("haar sampling produced only degenerate draws");
}

void neumaier_add(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

template <typename Stat>
McEstimate run_mc(long N, unsigned long long samples, std::uint64_t seed, int threads,
                  const Stat& stat) {
  if (samples < 1000) throw domain_error("Monte Carlo estimation requires samples >= 1000");
  unsigned hw = std::thread::hardware_concurrency();
  const unsigned long long n_threads =
      threads > 0 ? static_cast<unsigned long long>(threads) : (hw > 0 ? hw : 1);
  const unsigned long long n_blocks = (samples + kBlockSize - 1) / kBlockSize;

  std::vector<BlockSums> blocks(n_blocks);
  std::vector<std::exception_ptr> failures(n_threads);

  auto worker = [&](unsigned long long w) {
    try {
      for (unsigned long long b = w; b < n_blocks; b += n_threads) {
        BlockSums acc;
        const unsigned long long lo = b * kBlockSize;
        const unsigned long long hi = std::min(samples, lo + kBlockSize);
        for (unsigned long long i = lo; i < hi; ++i) {
          RandomStream stream(seed, i);
          const EigenangleSample s = draw_usable(N, stream, acc.resampled);
          const std::complex<double> v = stat(s);
          acc.sum_re += v.real();
          acc.sum_im += v.imag();
          acc.sumsq_re += v.real() * v.real();
          acc.sumsq_im += v.imag() * v.imag();
        }
        blocks[b] = acc;
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  if (n_threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned long long w = 0; w < n_threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  double sum_re = 0, c_re = 0, sum_im = 0, c_im = 0;
  double sq_re = 0, csq_re = 0, sq_im = 0, csq_im = 0;
  unsigned long long resampled = 0;
  for (const BlockSums& b : blocks) {
    neumaier_add(sum_re, c_re, b.sum_re);
    neumaier_add(sum_im, c_im, b.sum_im);
    neumaier_add(sq_re, csq_re, b.sumsq_re);
    neumaier_add(sq_im, csq_im, b.sumsq_im);
    resampled += b.resampled;
  }
  const double n = static_cast<double>(samples);
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.resampled = resampled;
  est.mean_real = (sum_re + c_re) / n;
  est.mean_imag = (sum_im + c_im) / n;
  if (samples > 1) {
    const double var_re =
        std::max(0.0, ((sq_re + csq_re) - n * est.mean_real * est.mean_real) / (n - 1));
    const double var_im =
        std::max(0.0, ((sq_im + csq_im) - n * est.mean_imag * est.mean_imag) / (n - 1));
    est.std_error = std::sqrt(var_re / n);
    est.std_error_imag = std::sqrt(var_im / n);
  }
  return est;
}

std::complex<double> pow_int(std::complex<double> z, long e) {
  std::complex<double> acc(1.0, 0.0);
  for (long i = 0; i < e; ++i) acc *= z;
  return acc;
}

std::complex<double> unit_i_pow(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

McEstimate estimate_m_moment(long k, long r, long N, unsigned long long samples,
                             std::uint64_t seed, int threads) {
  if (k < 1 || N < 1) throw domain_error("estimate_m_moment requires k, N >= 1");
  if (r < 0 || r > 2 * k) throw domain_error("estimate_m_moment requires 0 <= r <= 2k");
  // The exact zeroth moment enters the statistic itself so the target of
  // the mean is the i-normalized ratio, directly comparable to the engine.
  const double m0 = rat_to_double(moment_zero_finite(k, N));
  const std::complex<double> rot = unit_i_pow(r);
  auto stat = [k, r, m0, rot](const EigenangleSample& s) {
    const ZLog z = z_log_deriv(s);
    const double weight = std::pow(std::abs(z.z0), 2.0 * static_cast<double>(k));
    return weight * pow_int(z.log_deriv, r) * rot / m0;
  };
  return run_mc(N, samples, seed, threads, stat);
}

McEstimate estimate_v_moment(long k, long h, long N, unsigned long long samples,
                             std::uint64_t seed, int threads) {
  if (k < 1 || N < 1) throw domain_error("estimate_v_moment requires k, N >= 1");
  if (h < 0 || h > k) throw domain_error("estimate_v_moment requires 0 <= h <= k");
  auto stat = [k, h](const EigenangleSample& s) {
    const VLog v = v_log_deriv(s);
    const double weight = std::pow(v.v0_abs, 2.0 * static_cast<double>(k));
    const double ld2 = std::norm(v.log_deriv);
    double p = 1.0;
    for (long i = 0; i < h; ++i) p *= ld2;
    return std::complex<double>(weight * p, 0.0);
  };
  return run_mc(N, samples, seed, threads, stat);
}

}  // namespace um
