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

#include "wiretap/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "wiretap/errors.hpp"

namespace wiretap {
namespace {

constexpr std::uint64_t kCodebookStream = 0xC0DEB00C00000000ULL;
constexpr int kMaxRedraws = 1000;

// Running mean / sum of squared deviations (Welford), mergeable (Chan et al.).
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) noexcept {
    if (o.n == 0) return;
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

struct ChunkResult {
  Moments moments;
  std::uint64_t rejected = 0;
};

// Runs body(chunk_index, first_trial, trial_count) for every chunk on up to
// `workers` threads. Each chunk is processed exactly once.
template <class Body>
void for_each_chunk(std::uint64_t n_items, unsigned workers, Body&& body) {
  const std::uint64_t n_chunks = (n_items + kChunkTrials - 1) / kChunkTrials;
  const auto run = [&](std::uint64_t c) {
    const std::uint64_t first = c * kChunkTrials;
    body(c, first, std::min(kChunkTrials, n_items - first));
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), n_chunks));
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) run(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::uint64_t c = next++; c < n_chunks; c = next++) run(c);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n_chunks;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

double qca_sinr(double signal, double interference, double noise, Regime regime) {
  const double den = (regime == Regime::NOISE_LIMITED ? 0.0 : interference) +
                     (regime == Regime::INTERFERENCE_LIMITED ? 0.0 : noise);
  return signal / den;
}

SinrRealization simulate_qca(const SystemParams& params, RngStream& rng, Regime regime) {
  const int n = params.n_t();
  SinrRealization out;
  out.gamma.resize(n);
  out.zeta.resize(n);
  for (int k = 0; k < n; ++k) {
    const double signal = rng.exponential();
    const double interference = qca_interference_gain(params, rng);
    out.gamma[k] = qca_sinr(signal, interference, params.noise_over_power(), regime);
  }
  // Beams are independent of g, so the eavesdropper sees an unquantized
  // (delta = 1) version of the same structure.
  for (int k = 0; k < n; ++k) {
    const double signal = rng.exponential();
    const double interference = rng.gamma_integer_shape(n - 1, 1.0);
    out.zeta[k] = qca_sinr(signal, interference, params.eve_noise_over_power(), regime);
  }
  return out;
}

void validate_mode(SimMode mode, const SimOptions& options, const SystemParams& params) {
  if (mode == SimMode::PERFECT && options.regime == Regime::INTERFERENCE_LIMITED) {
    throw InvalidArgument("PERFECT mode has no inter-user interference; "
                          "the interference-limited regime is undefined");
  }
  if (mode == SimMode::FULL && params.bits() > kMaxCodebookBits) {
    throw ResourceLimit("FULL mode supports at most " + std::to_string(kMaxCodebookBits) +
                        " feedback bits; use QCA mode");
  }
}

double trial_rate(const SinrRealization& r, bool clip) {
  double total = 0.0;
  for (std::size_t k = 0; k < r.gamma.size(); ++k) {
    double user = std::log2(1.0 + r.gamma[k]) - std::log2(1.0 + r.zeta[k]);
    if (clip) user = std::max(user, 0.0);
    total += user;
  }
  return total;
}

}  // namespace

std::vector<Codebook> make_fixed_codebooks(const SystemParams& params, std::uint64_t seed) {
  std::vector<Codebook> books;
  books.reserve(params.n_t());
  for (int k = 0; k < params.n_t(); ++k) {
    RngStream rng(seed, kCodebookStream + static_cast<std::uint64_t>(k));
    books.push_back(generate_codebook(params.n_t(), params.bits(), rng));
  }
  return books;
}

ChannelRealization draw_channel_realization(const SystemParams& params, SimMode mode,
                                            RngStream& rng,
                                            const std::vector<Codebook>* codebooks) {
  if (mode == SimMode::QCA) {
    throw InvalidArgument("draw_channel_realization: QCA mode has no explicit channels");
  }
  const std::size_t n = static_cast<std::size_t>(params.n_t());
  if (codebooks && codebooks->size() != n) {
    throw InvalidArgument("draw_channel_realization: need one codebook per user");
  }
  std::uint64_t rejected = 0;
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<ComplexVec> h;
    std::vector<ComplexVec> h_hat;
    h.reserve(n);
    h_hat.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      h.push_back(sample_complex_gaussian(n, rng));
      if (mode == SimMode::PERFECT) {
        h_hat.push_back(unit_direction(h.back()));
      } else if (codebooks) {
        h_hat.push_back(quantize(h.back(), (*codebooks)[k]).h_hat);
      } else {
        const Codebook book = generate_codebook(params.n_t(), params.bits(), rng);
        h_hat.push_back(quantize(h.back(), book).h_hat);
      }
    }
    ComplexVec g = sample_complex_gaussian(n, rng);
    try {
      BeamMatrix beams = zfbf_beams(h_hat);
      return ChannelRealization{std::move(h), std::move(g), std::move(h_hat), std::move(beams),
                                rejected};
    } catch (const DegenerateInput&) {
      ++rejected;
    }
  }
  throw NumericalFailure("draw_channel_realization: too many degenerate zero-forcing draws");
}

SinrRealization sinrs_from_channels(const SystemParams& params, SimMode mode,
                                    const ChannelRealization& channels, Regime regime) {
  const std::size_t n = channels.h.size();
  const auto& w = channels.beams.beams;
  const bool drop_noise = regime == Regime::INTERFERENCE_LIMITED;
  const bool drop_interference = regime == Regime::NOISE_LIMITED;
  SinrRealization out;
  out.gamma.resize(n);
  out.zeta.resize(n);
  out.rejected = channels.rejected;

  std::vector<double> eve_gain(n);
  double eve_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    eve_gain[i] = std::norm(inner_product(channels.g, w[i]));
    eve_total += eve_gain[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double gain = std::norm(inner_product(channels.h[k], w[i]));
      (i == k ? signal : interference) += gain;
    }
    // Perfect CSI: the residual is rounding noise, the model value is zero.
    if (mode == SimMode::PERFECT || drop_interference) interference = 0.0;
    const double noise = drop_noise ? 0.0 : params.noise_over_power();
    out.gamma[k] = signal / (interference + noise);

    const double eve_interference = drop_interference ? 0.0 : eve_total - eve_gain[k];
    const double eve_noise = drop_noise ? 0.0 : params.eve_noise_over_power();
    out.zeta[k] = eve_gain[k] / (std::max(eve_interference, 0.0) + eve_noise);
  }
  return out;
}

SinrRealization simulate_realization(const SystemParams& params, SimMode mode, RngStream& rng,
                                     const SimOptions& options,
                                     const std::vector<Codebook>* codebooks) {
  validate_mode(mode, options, params);
  if (mode == SimMode::QCA) return simulate_qca(params, rng, options.regime);
  const ChannelRealization channels = draw_channel_realization(params, mode, rng, codebooks);
  return sinrs_from_channels(params, mode, channels, options.regime);
}

RateEstimate estimate_secrecy_rate(const SystemParams& params, SimMode mode,
                                   std::uint64_t n_trials, std::uint64_t seed,
                                   unsigned workers, const SimOptions& options) {
  if (n_trials < 1) throw InvalidArgument("estimate_secrecy_rate: n_trials must be >= 1");
  validate_mode(mode, options, params);
  std::optional<std::vector<Codebook>> books;
  if (mode == SimMode::FULL && options.fixed_codebook) books = make_fixed_codebooks(params, seed);
  const std::vector<Codebook>* book_ptr = books ? &*books : nullptr;

  const std::uint64_t n_chunks = (n_trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<ChunkResult> chunks(n_chunks);
  for_each_chunk(n_trials, workers, [&](std::uint64_t c, std::uint64_t, std::uint64_t count) {
    RngStream rng(seed, c);
    ChunkResult& result = chunks[c];
    for (std::uint64_t t = 0; t < count; ++t) {
      const SinrRealization r = simulate_realization(params, mode, rng, options, book_ptr);
      result.rejected += r.rejected;
      result.moments.add(trial_rate(r, options.clip));
    }
  });

  Moments total;
  RateEstimate est;
  for (const auto& c : chunks) {
    total.merge(c.moments);
    est.rejected += c.rejected;
  }
  est.mean = total.mean;
  est.n_trials = total.n;
  est.std_err = total.n > 1 ? std::sqrt(total.m2 / static_cast<double>(total.n - 1)) /
                                  std::sqrt(static_cast<double>(total.n))
                            : 0.0;
  return est;
}

std::vector<double> collect_sinr_samples(const SystemParams& params, SimMode mode, Link link,
                                         std::size_t n, std::uint64_t seed,
                                         const SimOptions& options, unsigned workers) {
  if (n < 1) throw InvalidArgument("collect_sinr_samples: n must be >= 1");
  validate_mode(mode, options, params);
  std::optional<std::vector<Codebook>> books;
  if (mode == SimMode::FULL && options.fixed_codebook) books = make_fixed_codebooks(params, seed);
  const std::vector<Codebook>* book_ptr = books ? &*books : nullptr;

  std::vector<double> samples(n);
  for_each_chunk(n, workers, [&](std::uint64_t c, std::uint64_t first, std::uint64_t count) {
    RngStream rng(seed, c);
    for (std::uint64_t t = 0; t < count; ++t) {
      const SinrRealization r = simulate_realization(params, mode, rng, options, book_ptr);
      samples[first + t] = link == Link::LEGITIMATE ? r.gamma.front() : r.zeta.front();
    }
  });
  return samples;
}

}  // namespace wiretap
