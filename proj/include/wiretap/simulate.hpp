// Copyright 2026 The wiretap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIRETAP_SIMULATE_HPP_
#define WIRETAP_SIMULATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wiretap/analytic.hpp"
#include "wiretap/linalg.hpp"
#include "wiretap/params.hpp"
#include "wiretap/quantize.hpp"
#include "wiretap/rng.hpp"

namespace wiretap {

// FULL: explicit RVQ codebooks, quantization and zero-forcing.
// QCA: SINRs synthesized from the quantization cell approximation.
// PERFECT: zero-forcing on the true channel directions (no quantization).
enum class SimMode { FULL, QCA, PERFECT };

struct SimOptions {
  // Which terms enter the SINR denominators.
  Regime regime = Regime::GENERAL;
  // Per-user positive part [log2(1+gamma) - log2(1+zeta)]^+.
  bool clip = false;
  // FULL mode: one codebook per user for the whole run instead of a fresh
  // codebook per realization.
  bool fixed_codebook = false;
};

struct SinrRealization {
  std::vector<double> gamma;
  std::vector<double> zeta;
  // Degenerate zero-forcing draws discarded before this one was accepted.
  std::uint64_t rejected = 0;
};

struct RateEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  std::uint64_t n_trials = 0;
  std::uint64_t rejected = 0;
};

// Channels, feedback and beams of one accepted FULL or PERFECT draw.
struct ChannelRealization {
  std::vector<ComplexVec> h;
  ComplexVec g;
  std::vector<ComplexVec> h_hat;  // fed-back directions used for zero-forcing
  BeamMatrix beams;
  std::uint64_t rejected = 0;
};

// Per-user codebooks for fixed-codebook runs.
std::vector<Codebook> make_fixed_codebooks(const SystemParams& params, std::uint64_t seed);

// Draws h_1..h_{n_t} and g, quantizes (FULL) or normalizes (PERFECT) the
// channel directions and builds zero-forcing beams, redrawing on degenerate
// direction sets. `codebooks` (one per user) replaces per-draw codebooks.
ChannelRealization draw_channel_realization(const SystemParams& params, SimMode mode,
                                            RngStream& rng,
                                            const std::vector<Codebook>* codebooks = nullptr);

// gamma_k and zeta_k of a drawn realization, with interference and noise
// terms selected by `regime`.
SinrRealization sinrs_from_channels(const SystemParams& params, SimMode mode,
                                    const ChannelRealization& channels, Regime regime);

SinrRealization simulate_realization(const SystemParams& params, SimMode mode, RngStream& rng,
                                     const SimOptions& options = {},
                                     const std::vector<Codebook>* codebooks = nullptr);

// Trials are processed in chunks of kChunkTrials; chunk c draws from stream
// (seed, c) and chunk statistics are merged in chunk order, so the result is
// bit-identical for any worker count.
inline constexpr std::uint64_t kChunkTrials = 2048;

RateEstimate estimate_secrecy_rate(const SystemParams& params, SimMode mode,
                                   std::uint64_t n_trials, std::uint64_t seed,
                                   unsigned workers = 1, const SimOptions& options = {});

// n samples of gamma_1 (LEGITIMATE) or zeta_1 (EAVESDROPPER), one per
// independent realization.
std::vector<double> collect_sinr_samples(const SystemParams& params, SimMode mode, Link link,
                                         std::size_t n, std::uint64_t seed,
                                         const SimOptions& options = {}, unsigned workers = 1);

}  // namespace wiretap

#endif  // WIRETAP_SIMULATE_HPP_
