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

#ifndef WIRETAP_LINALG_HPP_
#define WIRETAP_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "wiretap/rng.hpp"

namespace wiretap {

using Complex = std::complex<double>;

// Fixed-dimension complex column vector. Dimension is set at construction
// and is always >= 1.
class ComplexVec {
 public:
  explicit ComplexVec(std::size_t dim);
  explicit ComplexVec(std::vector<Complex> entries);
  ComplexVec(std::initializer_list<Complex> entries);

  // Standard basis vector e_{index} (zero-based).
  static ComplexVec basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return entries_.size(); }
  Complex operator[](std::size_t i) const noexcept { return entries_[i]; }
  Complex& operator[](std::size_t i) noexcept { return entries_[i]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  double norm() const noexcept;
  double squared_norm() const noexcept;

  ComplexVec& operator+=(const ComplexVec& other);
  ComplexVec& operator-=(const ComplexVec& other);
  ComplexVec& operator*=(Complex scale) noexcept;

  friend ComplexVec operator+(ComplexVec a, const ComplexVec& b) { return a += b; }
  friend ComplexVec operator-(ComplexVec a, const ComplexVec& b) { return a -= b; }
  friend ComplexVec operator*(Complex s, ComplexVec v) { return v *= s; }

 private:
  std::vector<Complex> entries_;
};

// Entries i.i.d. CN(0, 1).
ComplexVec sample_complex_gaussian(std::size_t dim, RngStream& rng);

// a^H b, conjugate-linear in the first argument.
Complex inner_product(const ComplexVec& a, const ComplexVec& b);

// v / ||v||. Throws DegenerateInput for the zero vector.
ComplexVec unit_direction(const ComplexVec& v);

// Residual norm (relative to the input norm) below which a vector is taken
// to lie in the span of the preceding ones.
inline constexpr double kRankThreshold = 1e-8;

// Orthonormal basis of the orthogonal complement of span(vs) in C^dim.
//
// Inputs are orthogonalized by Gram-Schmidt with a second re-orthogonalization
// pass; a relative residual below kRankThreshold raises DegenerateInput. The
// complement is completed from the standard basis, always taking the
// candidate with the largest residual. Each returned vector has its first
// coordinate of magnitude above 1e-12 rotated to be real-positive.
std::vector<ComplexVec> orthonormal_complement(std::span<const ComplexVec> vs,
                                               std::size_t dim);

}  // namespace wiretap

#endif  // WIRETAP_LINALG_HPP_
