// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergeom.hpp"

#include "moments.hpp"

namespace um {

std::vector<Rat> hyper_layers(const std::vector<Rat>& upper, const std::vector<Rat>& lower, long N,
                              long max_degree) {
  if (N < 1) throw domain_error("hyper_layers requires N >= 1");
  if (max_degree < 0) throw domain_error("hyper_layers requires max_degree >= 0");
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(max_degree) + 1);
  for (long d = 0; d <= max_degree; ++d) {
    Rat layer(0);
    for (const Partition& lam : enumerate_partitions(d)) {
      if (lam.length() > N) continue;
      Rat num = poch_up(Rat(N), lam);
      for (const Rat& a : upper) num *= poch_up(a, lam);
      if (num == 0) continue;
      Rat den(1);
      for (const Rat& b : lower) den *= poch_up(b, lam);
      if (den == 0) {
        throw domain_error("hypergeometric pole: lower parameters vanish at partition " +
                           lam.to_string());
      }
      const Int h = hook_number(lam);
      Rat hh(1, h * h);
      hh.canonicalize();
      layer += num / den * hh;
    }
    out.push_back(layer);
  }
  return out;
}

Rat hyper_pfq_scalar(const HyperParams& p) {
  const std::vector<Rat> layers = hyper_layers(p.upper, p.lower, p.N, p.max_degree);
  Rat acc(0);
  Rat zpow(1);
  for (const Rat& layer : layers) {
    acc += zpow * layer;
    zpow *= p.z;
  }
  return acc;
}

EgfCheckResult egf_check(long k, long N, long r_max) {
  if (k < 1 || N < 1) throw domain_error("egf_check requires k, N >= 1");
  if (r_max < 0) throw domain_error("egf_check requires r_max >= 0");
  if (r_max > 2 * k) throw domain_error("egf_check requires r_max <= 2k");
  const std::vector<Rat> layers =
      hyper_layers({Rat(-k)}, {Rat(-2 * k)}, N, r_max);
  EgfCheckResult res;
  res.equal = true;
  for (long r = 0; r <= r_max; ++r) {
    Rat coeff = m_ratio_finite(k, r, N);
    coeff /= Rat(factorial(static_cast<unsigned long>(r)));
    const Rat residual = layers[static_cast<size_t>(r)] - coeff;
    if (residual != 0) res.equal = false;
    res.residuals.push_back(residual);
  }
  return res;
}

}  // namespace um
