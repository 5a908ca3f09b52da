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

#include "wiretap/quantize.hpp"

#include <cmath>
#include <string>

#include "wiretap/errors.hpp"

namespace wiretap {

Codebook::Codebook(std::vector<ComplexVec> codewords, int bits)
    : codewords_(std::move(codewords)), bits_(bits) {
  if (bits < 0 || bits > kMaxCodebookBits) {
    throw InvalidArgument("codebook bits out of range");
  }
  if (codewords_.size() != (std::size_t{1} << bits)) {
    throw InvalidArgument("codebook must hold exactly 2^bits codewords");
  }
  const std::size_t d = codewords_.front().dim();
  for (const auto& c : codewords_) {
    if (c.dim() != d) throw InvalidArgument("codebook dimension mismatch");
    if (std::abs(c.norm() - 1.0) > 1e-12) throw InvalidArgument("codeword not unit norm");
  }
}

Codebook generate_codebook(int n_t, int bits, RngStream& rng) {
  if (n_t < 2) throw InvalidArgument("generate_codebook: n_t must be >= 2");
  if (bits < 0) throw InvalidArgument("generate_codebook: bits must be >= 0");
  if (bits > kMaxCodebookBits) {
    throw ResourceLimit("generate_codebook: " + std::to_string(bits) +
                        " bits exceeds the exhaustive-search cap of " +
                        std::to_string(kMaxCodebookBits) + "; use QCA mode");
  }
  const std::size_t size = std::size_t{1} << bits;
  std::vector<ComplexVec> codewords;
  codewords.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    codewords.push_back(unit_direction(sample_complex_gaussian(n_t, rng)));
  }
  return Codebook(std::move(codewords), bits);
}

QuantizationOutcome quantize(const ComplexVec& h, const Codebook& codebook) {
  if (h.dim() != codebook.dim()) throw InvalidArgument("quantize: dimension mismatch");
  const ComplexVec direction = unit_direction(h);

  std::size_t best = 0;
  double best_gain = -1.0;
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    const double gain = std::norm(inner_product(direction, codebook[i]));
    if (gain > best_gain) {
      best_gain = gain;
      best = i;
    }
  }
  const ComplexVec& h_hat = codebook[best];

  // Residual of h~ after removing its h_hat component, re-orthogonalized once.
  const Complex coeff = inner_product(h_hat, direction);
  ComplexVec residual = direction - coeff * h_hat;
  residual -= inner_product(h_hat, residual) * h_hat;
  const double residual_norm = residual.norm();

  ComplexVec s(h.dim());
  if (residual_norm > 0.0) {
    s = residual;
    s *= 1.0 / residual_norm;
  } else {
    const ComplexVec one[] = {h_hat};
    s = orthonormal_complement(one, h.dim()).front();
  }
  const double mag = std::abs(coeff);
  const Complex phase = mag > 0.0 ? coeff / mag : Complex(1.0, 0.0);
  const double a = std::min(1.0, residual_norm * residual_norm);
  return QuantizationOutcome{best, a, std::move(s), h_hat, phase};
}

double qca_interference_gain(const SystemParams& params, RngStream& rng) {
  return rng.gamma_integer_shape(params.n_t() - 1, params.delta());
}

BeamMatrix zfbf_beams(std::span<const ComplexVec> h_hats) {
  const std::size_t n = h_hats.size();
  if (n < 2) throw InvalidArgument("zfbf_beams: need at least 2 users");
  for (const auto& h : h_hats) {
    if (h.dim() != n) throw InvalidArgument("zfbf_beams: need n_t vectors of dimension n_t");
  }
  BeamMatrix out;
  out.beams.reserve(n);
  std::vector<ComplexVec> others;
  others.reserve(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    others.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k) others.push_back(h_hats[i]);
    }
    // K = n_t leaves a one-dimensional null space; the representative is fixed
    // by the phase convention of orthonormal_complement.
    out.beams.push_back(orthonormal_complement(others, n).front());
  }
  return out;
}

}  // namespace wiretap
