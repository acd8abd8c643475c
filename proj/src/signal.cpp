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

#include "aqed/signal.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "aqed/kernels.hpp"
#include "fft.hpp"

namespace aqed {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCutoffSlack = 1e-9;

std::int64_t floor_harmonic(double omega, double omega0) {
  return static_cast<std::int64_t>(std::floor(omega / omega0 + kCutoffSlack));
}

std::int64_t ceil_harmonic(double omega, double omega0) {
  return static_cast<std::int64_t>(std::ceil(omega / omega0 - kCutoffSlack));
}

// Brick-wall filter over DFT bins. If everything outside the pass set is
// already at rounding level the input is returned untouched, so filtering an
// already filtered signal is bit-identical.
template <typename Keep>
SampledSignal filter_bins(const SampledSignal& s, Keep keep) {
  const std::size_t n = s.size();
  CVector spec = s.samples();
  detail::fft_forward(spec);
  double stray = 0.0;
  for (std::size_t b = 0; b < n; ++b) {
    if (!keep(harmonic_of_bin(b, n))) {
      stray = std::max(stray, std::abs(spec[b]));
      spec[b] = 0.0;
    }
  }
  const double rounding = 16.0 * std::numeric_limits<double>::epsilon() *
                          std::log2(static_cast<double>(n) + 1.0) * static_cast<double>(n) *
                          s.max_abs();
  if (stray <= rounding) return s;
  detail::fft_backward(spec);
  const double inv = 1.0 / static_cast<double>(n);
  for (auto& v : spec) v *= inv;
  return SampledSignal(s.config(), std::move(spec));
}

}  // namespace

SignalConfig::SignalConfig(double omega0, std::size_t samples_per_window)
    : omega0_(omega0), window_(2.0 * kPi / omega0), samples_(samples_per_window) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw InvalidArgument("omega0 must be positive");
  if (samples_per_window < 4) throw InvalidArgument("need at least 4 samples per window");
}

double SignalConfig::time(std::size_t k) const {
  return (static_cast<double>(k) + 0.5) * window_ / static_cast<double>(samples_);
}

void SignalConfig::require_qubits(int n) const {
  if (n < 0 || n > 40) throw InvalidArgument("qubit count out of range");
  const std::size_t need = std::size_t{4} << n;
  if (samples_ < need) {
    throw InvalidArgument("samples_per_window " + std::to_string(samples_) + " is below " +
                          std::to_string(need) + " required for " + std::to_string(n) +
                          " spectral qubits");
  }
}

SampledSignal::SampledSignal(SignalConfig cfg)
    : cfg_(cfg), samples_(cfg.samples_per_window(), Complex{}) {}

SampledSignal::SampledSignal(SignalConfig cfg, CVector samples)
    : cfg_(cfg), samples_(std::move(samples)) {
  if (samples_.size() != cfg_.samples_per_window()) {
    throw InvalidArgument("sample count does not match the configuration");
  }
}

SampledSignal& SampledSignal::operator+=(const SampledSignal& o) {
  require_same_config(*this, o);
  for (std::size_t k = 0; k < samples_.size(); ++k) samples_[k] += o.samples_[k];
  return *this;
}

SampledSignal& SampledSignal::operator-=(const SampledSignal& o) {
  require_same_config(*this, o);
  for (std::size_t k = 0; k < samples_.size(); ++k) samples_[k] -= o.samples_[k];
  return *this;
}

SampledSignal& SampledSignal::operator*=(Complex c) {
  for (auto& v : samples_) v *= c;
  return *this;
}

double SampledSignal::max_abs() const {
  double m = 0.0;
  for (const auto& v : samples_) m = std::max(m, std::abs(v));
  return m;
}

void require_same_config(const SampledSignal& a, const SampledSignal& b) {
  if (!(a.config() == b.config()) || a.size() != b.size()) {
    throw ConfigMismatch("signals were sampled under different configurations");
  }
}

BasisIndex::BasisIndex(std::uint64_t x, int n) : x_(x), n_(n) {
  if (n < 0 || n > 62) throw InvalidArgument("qubit count out of range");
  if (x >= (std::uint64_t{1} << n)) {
    throw InvalidArgument("basis index " + std::to_string(x) + " out of range for " +
                          std::to_string(n) + " qubits");
  }
}

std::int64_t BasisIndex::harmonic() const {
  std::int64_t h = 0;
  for (int i = 0; i < n_; ++i) h += qubit_carrier_harmonic(i, bit(i));
  return h;
}

std::int64_t qubit_carrier_harmonic(int qubit, int bit) {
  const std::int64_t w = std::int64_t{1} << qubit;
  return bit == 0 ? w : -w;
}

SampledSignal make_tone(std::int64_t harmonic, const SignalConfig& cfg) {
  SampledSignal s(cfg);
  const Complex one = 1.0;
  kernels::omp::synthesize(std::span(&one, 1), std::span(&harmonic, 1),
                           detail::twiddles_for(cfg.samples_per_window()), s.samples());
  return s;
}

SampledSignal make_basis_signal(const BasisIndex& x, const SignalConfig& cfg) {
  cfg.require_qubits(x.qubits());
  return make_tone(x.harmonic(), cfg);
}

Complex inner_product(const SampledSignal& a, const SampledSignal& b) {
  require_same_config(a, b);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc / static_cast<double>(a.size());
}

SampledSignal complex_multiply(const SampledSignal& a, const SampledSignal& b) {
  require_same_config(a, b);
  SampledSignal out(a.config());
  kernels::omp::multiply(a.samples(), b.samples(), out.samples());
  return out;
}

SampledSignal real_part(const SampledSignal& s) {
  CVector v(s.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = s[k].real();
  return SampledSignal(s.config(), std::move(v));
}

SampledSignal imag_part(const SampledSignal& s) {
  CVector v(s.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = s[k].imag();
  return SampledSignal(s.config(), std::move(v));
}

std::int64_t harmonic_of_bin(std::size_t bin, std::size_t samples) {
  const auto b = static_cast<std::int64_t>(bin);
  const auto n = static_cast<std::int64_t>(samples);
  return b < n / 2 ? b : b - n;
}

CVector spectrum(const SampledSignal& s) {
  const std::size_t n = s.size();
  CVector spec = s.samples();
  detail::fft_forward(spec);
  for (std::size_t b = 0; b < n; ++b) {
    const double h = static_cast<double>(harmonic_of_bin(b, n));
    spec[b] *= std::polar(1.0 / static_cast<double>(n), -kPi * h / static_cast<double>(n));
  }
  return spec;
}

SampledSignal select_harmonics(const SampledSignal& s, const std::set<std::int64_t>& keep) {
  return filter_bins(s, [&](std::int64_t h) { return keep.contains(h); });
}

SampledSignal lowpass(const SampledSignal& s, double cutoff) {
  if (!(cutoff > 0.0)) throw InvalidArgument("low-pass cutoff must be positive");
  const std::int64_t hmax = floor_harmonic(cutoff, s.config().omega0());
  return filter_bins(s, [&](std::int64_t h) { return std::abs(h) <= hmax; });
}

SampledSignal bandpass(const SampledSignal& s, double lo, double hi) {
  if (!(lo >= 0.0) || !(lo < hi)) throw InvalidArgument("band-pass needs 0 <= lo < hi");
  const std::int64_t hlo = ceil_harmonic(lo, s.config().omega0());
  const std::int64_t hhi = floor_harmonic(hi, s.config().omega0());
  return filter_bins(s, [&](std::int64_t h) { return std::abs(h) >= hlo && std::abs(h) <= hhi; });
}

SampledSignal comparator(const SampledSignal& s, double imag_tolerance) {
  const double tol = imag_tolerance * std::max(1.0, s.max_abs());
  CVector out(s.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (std::abs(s[k].imag()) > tol) throw InvalidArgument("comparator input is not real");
    out[k] = s[k].real() >= 0.0 ? 1.0 : -1.0;
  }
  return SampledSignal(s.config(), std::move(out));
}

SampledSignal mix(const SampledSignal& s, const SampledSignal& square_ref, double rejection_cutoff) {
  require_same_config(s, square_ref);
  if (!(rejection_cutoff > 0.0)) throw InvalidArgument("rejection cutoff must be positive");
  for (const auto& v : square_ref.samples()) {
    if (v.imag() != 0.0 || (v.real() != 1.0 && v.real() != -1.0)) {
      throw InvalidArgument("mix reference must be a +-1 square wave");
    }
  }
  SampledSignal prod(s.config());
  auto& p = prod.samples();
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = square_ref[k].real() > 0.0 ? s[k] : -s[k];
  const std::int64_t hmax = ceil_harmonic(rejection_cutoff, s.config().omega0()) - 1;
  SampledSignal out = filter_bins(prod, [&](std::int64_t h) { return std::abs(h) <= hmax; });
  return out *= kPi / 4.0;
}

HarmonicRejectionMixer::HarmonicRejectionMixer(int phases) : phases_(phases) {
  if (phases < 2 || phases % 2 != 0) throw InvalidArgument("mixer phases must be even and >= 2");
  const double p = phases;
  // Square wave b has its falling edge on the staircase boundary between
  // levels cos(2 pi b / P) and cos(2 pi (b+1) / P); its weight is half the jump.
  for (int b = 0; b < phases / 2; ++b) {
    weights_.push_back(0.5 * (std::cos(2.0 * kPi * b / p) - std::cos(2.0 * kPi * (b + 1) / p)));
    offsets_.push_back((b + 0.5) * 2.0 * kPi / p - kPi / 2.0);
  }
  Complex fundamental = 0.0;
  for (int b = 0; b < phases; ++b) {
    fundamental += std::cos(2.0 * kPi * b / p) * std::polar(1.0, -2.0 * kPi * b / p);
  }
  const double staircase_gain = 2.0 / kPi * std::sin(kPi / p) * std::abs(fundamental);
  gain_ = kPi / 4.0 * staircase_gain;
}

std::vector<SampledSignal> HarmonicRejectionMixer::square_refs(std::int64_t carrier_harmonic,
                                                               const SignalConfig& cfg,
                                                               bool imaginary) const {
  const SampledSignal tone = make_tone(carrier_harmonic, cfg);
  std::vector<SampledSignal> refs;
  refs.reserve(offsets_.size());
  for (double off : offsets_) {
    const Complex rot = std::polar(1.0, -off);
    CVector part(tone.size());
    for (std::size_t k = 0; k < part.size(); ++k) {
      const Complex v = tone[k] * rot;
      part[k] = imaginary ? v.imag() : v.real();
    }
    refs.push_back(comparator(SampledSignal(cfg, std::move(part))));
  }
  return refs;
}

SampledSignal HarmonicRejectionMixer::staircase(std::int64_t carrier_harmonic,
                                                const SignalConfig& cfg) const {
  const auto re_refs = square_refs(carrier_harmonic, cfg, false);
  const auto im_refs = square_refs(carrier_harmonic, cfg, true);
  SampledSignal stair(cfg);
  auto& st = stair.samples();
  for (std::size_t b = 0; b < weights_.size(); ++b) {
    for (std::size_t k = 0; k < st.size(); ++k) {
      st[k] += weights_[b] * Complex(re_refs[b][k].real(), im_refs[b][k].real());
    }
  }
  return stair;
}

Complex HarmonicRejectionMixer::sampled_gain(std::int64_t carrier_harmonic,
                                             const SignalConfig& cfg) const {
  return kPi / 4.0 * inner_product(make_tone(carrier_harmonic, cfg), staircase(carrier_harmonic, cfg));
}

SampledSignal HarmonicRejectionMixer::multiply(const SampledSignal& s,
                                               std::int64_t carrier_harmonic,
                                               double rejection_cutoff) const {
  const auto re_refs = square_refs(carrier_harmonic, s.config(), false);
  const auto im_refs = square_refs(carrier_harmonic, s.config(), true);
  SampledSignal re(s.config()), im(s.config());
  for (std::size_t b = 0; b < weights_.size(); ++b) {
    re += weights_[b] * mix(s, re_refs[b], rejection_cutoff);
    im += weights_[b] * mix(s, im_refs[b], rejection_cutoff);
  }
  re += Complex(0.0, 1.0) * im;
  return re *= 1.0 / sampled_gain(carrier_harmonic, s.config());
}

SampledSignal HarmonicRejectionMixer::multiply_fast(const SampledSignal& s,
                                                    std::int64_t carrier_harmonic,
                                                    double rejection_cutoff) const {
  if (!(rejection_cutoff > 0.0)) throw InvalidArgument("rejection cutoff must be positive");
  const SampledSignal stair = staircase(carrier_harmonic, s.config());
  const Complex gain = kPi / 4.0 * inner_product(make_tone(carrier_harmonic, s.config()), stair);
  SampledSignal prod = complex_multiply(s, stair);
  const std::int64_t hmax = ceil_harmonic(rejection_cutoff, s.config().omega0()) - 1;
  SampledSignal out = filter_bins(prod, [&](std::int64_t h) { return std::abs(h) <= hmax; });
  return out *= kPi / 4.0 / gain;
}

void write_csv(const SampledSignal& s, std::ostream& os) {
  std::ostringstream buf;
  buf << std::setprecision(17);
  buf << "t,re,im\n";
  for (std::size_t k = 0; k < s.size(); ++k) {
    buf << s.config().time(k) << ',' << s[k].real() << ',' << s[k].imag() << '\n';
  }
  os << buf.str();
}

void write_wide_csv(std::span<const SampledSignal> signals, std::span<const std::string> names,
                    std::ostream& os) {
  if (signals.size() != names.size()) throw InvalidArgument("one name per signal required");
  for (std::size_t i = 1; i < signals.size(); ++i) require_same_config(signals[0], signals[i]);
  std::ostringstream buf;
  buf << std::setprecision(17) << 't';
  for (const auto& n : names) buf << ',' << n << "_re," << n << "_im";
  buf << '\n';
  if (!signals.empty()) {
    const SignalConfig& cfg = signals[0].config();
    for (std::size_t k = 0; k < cfg.samples_per_window(); ++k) {
      buf << cfg.time(k);
      for (const auto& s : signals) buf << ',' << s[k].real() << ',' << s[k].imag();
      buf << '\n';
    }
  }
  os << buf.str();
}

}  // namespace aqed
