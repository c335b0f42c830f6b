// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace um {

// Philox 4x64 with 10 rounds (Salmon, Moraes, Dror, Shaw, SC'11). A pure
// function of (counter, key), so independent sample substreams are free and
// results never depend on scheduling. Word stream matches NumPy's Philox
// bit for bit (pinned by unit test).
struct Philox4x64 {
  static constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
  static constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
  static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

  static void block(const std::uint64_t ctr[4], const std::uint64_t key[2],
                    std::uint64_t out[4]) {
    std::uint64_t x0 = ctr[0], x1 = ctr[1], x2 = ctr[2], x3 = ctr[3];
    std::uint64_t k0 = key[0], k1 = key[1];
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 p0 = static_cast<unsigned __int128>(kMult0) * x0;
      const unsigned __int128 p1 = static_cast<unsigned __int128>(kMult1) * x2;
      const std::uint64_t hi0 = static_cast<std::uint64_t>(p0 >> 64);
      const std::uint64_t lo0 = static_cast<std::uint64_t>(p0);
      const std::uint64_t hi1 = static_cast<std::uint64_t>(p1 >> 64);
      const std::uint64_t lo1 = static_cast<std::uint64_t>(p1);
      x0 = hi1 ^ x1 ^ k0;
      x1 = lo1;
      x2 = hi0 ^ x3 ^ k1;
      x3 = lo0;
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    out[0] = x0;
    out[1] = x1;
    out[2] = x2;
    out[3] = x3;
  }
};

// Buffered word stream over one (seed, stream_id) substream. The counter
// layout is (word block, stream_id, 0, 0) with key (seed, 0); each stream
// can emit 2^66 words before the block counter would wrap. The block
// counter is incremented before each block, as NumPy does, so for
// stream_id 0 the words coincide with numpy.random.Philox(key=seed).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_{seed, 0}, ctr_{0, stream_id, 0, 0} {}

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      ++ctr_[0];
      Philox4x64::block(ctr_, key_, buf_);
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
  }

  // Box-Muller pair of independent standard normals.
  void next_normal_pair(double& a, double& b) {
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    a = radius * std::cos(angle);
    b = radius * std::sin(angle);
  }

 private:
  std::uint64_t key_[2];
  std::uint64_t ctr_[4];
  std::uint64_t buf_[4] = {0, 0, 0, 0};
  int pos_ = 4;
};

}  // namespace um
