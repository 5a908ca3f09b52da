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

#include "wiretap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wiretap/errors.hpp"

namespace wiretap {
namespace {

void require_same_dim(const ComplexVec& a, const ComplexVec& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
  }
}

// a^H b without the NaN/Inf recovery of std::complex multiplication.
Complex dot(std::span<const Complex> a, std::span<const Complex> b) noexcept {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

// v -= (q^H v) q for each q, applied twice (CGS2).
void project_out(ComplexVec& v, std::span<const ComplexVec> basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) {
      const Complex c = dot(q.entries(), v.entries());
      for (std::size_t i = 0; i < v.dim(); ++i) {
        const Complex qi = q[i];
        v[i] -= Complex(c.real() * qi.real() - c.imag() * qi.imag(),
                        c.real() * qi.imag() + c.imag() * qi.real());
      }
    }
  }
}

void fix_phase(ComplexVec& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-12) {
      v *= std::conj(v[i]) / mag;
      v[i] = Complex(std::abs(v[i]), 0.0);
      return;
    }
  }
}

}  // namespace

ComplexVec::ComplexVec(std::size_t dim) : entries_(dim) {
  if (dim == 0) throw InvalidArgument("ComplexVec dimension must be >= 1");
}

ComplexVec::ComplexVec(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("ComplexVec dimension must be >= 1");
}

ComplexVec::ComplexVec(std::initializer_list<Complex> entries)
    : ComplexVec(std::vector<Complex>(entries)) {}

ComplexVec ComplexVec::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("basis index out of range");
  ComplexVec e(dim);
  e[index] = 1.0;
  return e;
}

double ComplexVec::squared_norm() const noexcept {
  double sum = 0.0;
  for (const auto& z : entries_) sum += std::norm(z);
  return sum;
}

double ComplexVec::norm() const noexcept {
  const double sum = squared_norm();
  if (sum >= std::numeric_limits<double>::min() && sum <= std::numeric_limits<double>::max()) {
    return std::sqrt(sum);
  }
  // Squares under- or overflowed; rescale by the largest component.
  double scale = 0.0;
  for (const auto& z : entries_) scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double scaled = 0.0;
  for (const auto& z : entries_) scaled += std::norm(z / scale);
  return scale * std::sqrt(scaled);
}

ComplexVec& ComplexVec::operator+=(const ComplexVec& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexVec& ComplexVec::operator-=(const ComplexVec& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexVec& ComplexVec::operator*=(Complex scale) noexcept {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexVec sample_complex_gaussian(std::size_t dim, RngStream& rng) {
  if (dim == 0) throw InvalidArgument("sample_complex_gaussian: dim must be >= 1");
  ComplexVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rng.complex_gaussian();
  return v;
}

Complex inner_product(const ComplexVec& a, const ComplexVec& b) {
  require_same_dim(a, b);
  return dot(a.entries(), b.entries());
}

ComplexVec unit_direction(const ComplexVec& v) {
  const double n = v.norm();
  if (!(n > 0.0)) throw DegenerateInput("unit_direction: zero vector");
  ComplexVec u = v;
  u *= 1.0 / n;
  return u;
}

std::vector<ComplexVec> orthonormal_complement(std::span<const ComplexVec> vs,
                                               std::size_t dim) {
  if (dim == 0) throw InvalidArgument("orthonormal_complement: dim must be >= 1");
  if (vs.size() >= dim) {
    throw InvalidArgument("orthonormal_complement: need fewer than dim vectors");
  }
  std::vector<ComplexVec> basis;
  basis.reserve(dim);
  for (const auto& v : vs) {
    if (v.dim() != dim) throw InvalidArgument("orthonormal_complement: dimension mismatch");
    const double input_norm = v.norm();
    ComplexVec r = v;
    project_out(r, basis);
    const double residual = r.norm();
    if (!(input_norm > 0.0) || residual < kRankThreshold * input_norm) {
      throw DegenerateInput("orthonormal_complement: input vectors are linearly dependent");
    }
    r *= 1.0 / residual;
    basis.push_back(std::move(r));
  }

  std::vector<ComplexVec> complement;
  complement.reserve(dim - vs.size());
  while (basis.size() < dim) {
    // ||e_j - Q Q^H e_j||^2 = 1 - sum_q |q_j|^2; some e_j keeps at least
    // (dim - rank) / dim of its norm, so the best candidate is well away from 0.
    std::size_t best_j = 0;
    double best_residual = -1.0;
    for (std::size_t j = 0; j < dim; ++j) {
      double captured = 0.0;
      for (const auto& q : basis) captured += std::norm(q[j]);
      if (1.0 - captured > best_residual) {
        best_residual = 1.0 - captured;
        best_j = j;
      }
    }
    ComplexVec best = ComplexVec::basis(dim, best_j);
    project_out(best, basis);
    best *= 1.0 / best.norm();
    project_out(best, basis);
    best *= 1.0 / best.norm();
    fix_phase(best);
    basis.push_back(best);
    complement.push_back(std::move(best));
  }
  return complement;
}

}  // namespace wiretap
