// Copyright 2026 The AQED Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Sampled complex signals on one fundamental period and the signal-level
// primitives every encoding is built from: basis synthesis, inner product,
// multiplication, brick-wall filters, comparator and square-wave mixing.
//
// Frequencies passed to filters are angular frequencies in rad/s. Internally
// a component e^{j h w0 t} is identified by its integer harmonic h.

#include <iosfwd>
#include <set>
#include <span>
#include <vector>

#include "aqed/common.hpp"

namespace aqed {

/// Sampling configuration shared by every signal of one computation.
///
/// The window is always exactly one period of the fundamental, T = 2*pi/w0,
/// so every nonzero integer harmonic integrates to zero over it. Samples are
/// taken at the midpoints t_k = (k + 1/2) T / K; with this grid no sample
/// lands on a zero crossing of a carrier whose period is a whole number of
/// samples, which keeps comparator outputs symmetric.
class SignalConfig {
 public:
  static constexpr double kDefaultOmega0 = 2.0 * 3.14159265358979323846 * 1000.0;
  static constexpr std::size_t kDefaultSamples = 4096;

  SignalConfig() : SignalConfig(kDefaultOmega0, kDefaultSamples) {}
  SignalConfig(double omega0, std::size_t samples_per_window);

  double omega0() const { return omega0_; }
  double window() const { return window_; }
  std::size_t samples_per_window() const { return samples_; }

  /// Time of sample k in seconds.
  double time(std::size_t k) const;

  /// Highest representable harmonic; bins above it alias to negative ones.
  std::int64_t max_harmonic() const { return static_cast<std::int64_t>(samples_ / 2) - 1; }

  /// Throws unless samples_per_window >= 4 * 2^n.
  void require_qubits(int n) const;

  friend bool operator==(const SignalConfig&, const SignalConfig&) = default;

 private:
  double omega0_;
  double window_;
  std::size_t samples_;
};

class SampledSignal {
 public:
  SampledSignal() = default;
  explicit SampledSignal(SignalConfig cfg);  // all zeros
  SampledSignal(SignalConfig cfg, CVector samples);

  const SignalConfig& config() const { return cfg_; }
  const CVector& samples() const { return samples_; }
  CVector& samples() { return samples_; }
  std::size_t size() const { return samples_.size(); }
  Complex operator[](std::size_t k) const { return samples_[k]; }

  SampledSignal& operator+=(const SampledSignal& o);
  SampledSignal& operator-=(const SampledSignal& o);
  SampledSignal& operator*=(Complex c);

  friend SampledSignal operator+(SampledSignal a, const SampledSignal& b) { return a += b; }
  friend SampledSignal operator-(SampledSignal a, const SampledSignal& b) { return a -= b; }
  friend SampledSignal operator*(Complex c, SampledSignal s) { return s *= c; }
  friend SampledSignal operator*(SampledSignal s, Complex c) { return s *= c; }

  double max_abs() const;

 private:
  SignalConfig cfg_;
  CVector samples_;
};

/// Throws ConfigMismatch unless both signals share a configuration.
void require_same_config(const SampledSignal& a, const SampledSignal& b);

/// Index of one of the 2^n spectral basis signals. Bit i (weight 2^i) picks
/// the sign of the frequency 2^i w0: bit 0 -> +, bit 1 -> -.
class BasisIndex {
 public:
  BasisIndex(std::uint64_t x, int n);

  std::uint64_t value() const { return x_; }
  int qubits() const { return n_; }
  int bit(int i) const { return static_cast<int>((x_ >> i) & 1U); }

  /// Frequency of the basis signal in units of w0: sum_i (-1)^{x_i} 2^i.
  std::int64_t harmonic() const;

 private:
  std::uint64_t x_;
  int n_;
};

/// Harmonic (units of w0) of qubit i's |bit> carrier: +2^i for 0, -2^i for 1.
std::int64_t qubit_carrier_harmonic(int qubit, int bit);

/// e^{j h w0 t} sampled on the configuration's grid. Phases are reduced
/// exactly in integer arithmetic before evaluation.
SampledSignal make_tone(std::int64_t harmonic, const SignalConfig& cfg);

/// exp[sum_i (-1)^{x_i} j w_i t] with octave spacing w_i = 2^i w0.
SampledSignal make_basis_signal(const BasisIndex& x, const SignalConfig& cfg);

/// (1/T) * integral a*(t) b(t) dt, evaluated as the mean of a_k* b_k.
Complex inner_product(const SampledSignal& a, const SampledSignal& b);

/// Pointwise complex product computed the way the hardware does it: four
/// real products and two additions per sample.
SampledSignal complex_multiply(const SampledSignal& a, const SampledSignal& b);

SampledSignal real_part(const SampledSignal& s);
SampledSignal imag_part(const SampledSignal& s);

/// Fourier coefficients c_h of s(t) = sum_h c_h e^{j h w0 t}, indexed by bin;
/// use harmonic_of_bin() to map a bin to its harmonic.
CVector spectrum(const SampledSignal& s);
std::int64_t harmonic_of_bin(std::size_t bin, std::size_t samples);

/// Ideal brick-wall filter keeping exactly the listed harmonics.
SampledSignal select_harmonics(const SampledSignal& s, const std::set<std::int64_t>& keep);

/// Keeps components with |frequency| <= cutoff (inclusive).
SampledSignal lowpass(const SampledSignal& s, double cutoff);

/// Keeps components with lo <= |frequency| <= hi.
SampledSignal bandpass(const SampledSignal& s, double lo, double hi);

/// sign() of each sample, with sign(0) = +1. The input must be real: every
/// |imag| must be within `imag_tolerance * max(1, max|s|)`.
SampledSignal comparator(const SampledSignal& s, double imag_tolerance = 1e-9);

/// Square-wave mixing: s * square_ref, then a harmonic-rejection low-pass
/// that passes |frequency| < rejection_cutoff (strict), then scaled by pi/4 to
/// undo the 4/pi fundamental gain of a unit square wave.
SampledSignal mix(const SampledSignal& s, const SampledSignal& square_ref, double rejection_cutoff);

/// Multi-phase harmonic-rejection mixer assembled from comparator() and mix().
///
/// A weighted sum of `phases`/2 phase-shifted unit square waves forms a
/// `phases`-step staircase approximation of the carrier, whose only harmonics
/// are of order k*phases +- 1. phases == 2 is the plain single-comparator mixer.
class HarmonicRejectionMixer {
 public:
  explicit HarmonicRejectionMixer(int phases);

  int phases() const { return phases_; }
  std::span<const double> weights() const { return weights_; }

  /// Phase offsets (radians) of the square waves; square wave b is
  /// comparator(cos(theta - offset_b)) for carrier phase theta.
  std::span<const double> offsets() const { return offsets_; }

  /// Fundamental amplitude of the weighted square-wave sum relative to a unit
  /// sinusoid, after mix()'s pi/4 compensation has been applied, for the
  /// continuous-time staircase.
  double residual_gain() const { return gain_; }

  /// The same gain measured on the sampled staircase for carrier harmonic h:
  /// (pi/4) <e^{j h w0 t} | staircase>. Sampling the square-wave edges aliases
  /// staircase harmonics near K onto h, so this differs from residual_gain()
  /// by O(|h| / K). multiply() and multiply_fast() divide by this value.
  Complex sampled_gain(std::int64_t carrier_harmonic, const SignalConfig& cfg) const;

  /// Square references for the real (cos) or imaginary (sin) part of the
  /// carrier e^{j h w0 t}, one per phase.
  std::vector<SampledSignal> square_refs(std::int64_t carrier_harmonic, const SignalConfig& cfg,
                                         bool imaginary) const;

  /// sum_b w_b (re_ref_b + j im_ref_b): the complex staircase approximating
  /// (4/pi) * residual_gain() * e^{j h w0 t}.
  SampledSignal staircase(std::int64_t carrier_harmonic, const SignalConfig& cfg) const;

  /// Approximates complex_multiply(s, e^{j h w0 t}) with square-wave mixers.
  /// Each real product is realised as a weighted sum of mix() calls.
  SampledSignal multiply(const SampledSignal& s, std::int64_t carrier_harmonic,
                         double rejection_cutoff) const;

  /// Same result as multiply(), computed by summing the square waves into a
  /// staircase first so only one filter pass per product is needed.
  SampledSignal multiply_fast(const SampledSignal& s, std::int64_t carrier_harmonic,
                              double rejection_cutoff) const;

 private:
  int phases_;
  std::vector<double> weights_;
  std::vector<double> offsets_;
  double gain_;
};

/// CSV with header `t,re,im`, one row per sample in time order.
void write_csv(const SampledSignal& s, std::ostream& os);

/// Wide CSV `t,<name>_re,<name>_im,...` for signals sharing one configuration.
void write_wide_csv(std::span<const SampledSignal> signals, std::span<const std::string> names,
                    std::ostream& os);

}  // namespace aqed
