#pragma once

// Signal conditioning: audio low-pass, 2-sigma outlier removal, uniform
// resampling, heart-rate range filtering, wear-state inference and the
// audio corruption check.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dyad/common.hpp"
#include "dyad/core.hpp"
#include "dyad/wav.hpp"

namespace dyad {

// ---------------------------------------------------------------------------
// Audio low-pass: linear-phase windowed-sinc FIR (Hamming, 101 taps).
// Output length equals input length; edges are padded by replication.

constexpr int kLowpassTaps = 101;

inline std::vector<double> lowpass_kernel(double cutoff_hz, double rate_hz,
                                          int taps = kLowpassTaps) {
  if (cutoff_hz <= 0.0) {
    throw std::invalid_argument("lowpass: cutoff must be positive");
  }
  const double fc = cutoff_hz / rate_hz;  // normalized
  const int m = taps - 1;
  std::vector<double> h(taps);
  double sum = 0.0;
  for (int n = 0; n < taps; ++n) {
    double k = n - m / 2.0;
    double sinc = (k == 0.0) ? 2.0 * fc
                             : std::sin(2.0 * std::numbers::pi * fc * k) /
                                   (std::numbers::pi * k);
    double w = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * n / m);
    h[n] = sinc * w;
    sum += h[n];
  }
  for (auto& x : h) x /= sum;  // unity DC gain
  return h;
}

inline std::vector<float> lowpass_audio(const std::vector<float>& audio,
                                        double cutoff_hz = 4000.0,
                                        double rate_hz = kAudioRateHz) {
  auto h = lowpass_kernel(cutoff_hz, rate_hz);
  const int taps = static_cast<int>(h.size());
  const int half = taps / 2;
  const auto n = static_cast<long>(audio.size());
  std::vector<float> out(audio.size());
  if (audio.empty()) return out;
  for (long i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < taps; ++k) {
      long j = i + half - k;
      if (j < 0) j = 0;             // replicate left edge
      if (j >= n) j = n - 1;        // replicate right edge
      acc += h[k] * audio[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = static_cast<float>(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Outlier removal: drops points strictly more than 2 population standard
// deviations from the mean. Moments are computed once, on the input.

struct OutlierResult {
  TimeSeries series;
  bool warning = false;  // set when the input was too short to filter
  std::size_t removed = 0;
};

inline OutlierResult remove_outliers(const TimeSeries& in, double n_sigma = 2.0) {
  OutlierResult out;
  if (in.size() < 2) {
    out.series = in;
    out.warning = true;
    return out;
  }
  double mean = 0.0;
  for (double x : in.v) mean += x;
  mean /= static_cast<double>(in.size());
  double var = 0.0;
  for (double x : in.v) var += (x - mean) * (x - mean);
  var /= static_cast<double>(in.size());
  const double limit = n_sigma * std::sqrt(var);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (std::abs(in.v[i] - mean) <= limit) {
      out.series.push(in.t[i], in.v[i]);
    } else {
      ++out.removed;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resampling: linear interpolation onto a uniform grid spanning
// [first, last] at the target rate.

inline TimeSeries resample(const TimeSeries& in, double target_hz) {
  if (in.size() < 2) {
    throw std::invalid_argument("resample: need at least 2 points");
  }
  if (target_hz <= 0.0) {
    throw std::invalid_argument("resample: rate must be positive");
  }
  for (std::size_t i = 1; i < in.size(); ++i) {
    if (!(in.t[i] > in.t[i - 1])) {
      throw std::invalid_argument("resample: timestamps must be strictly increasing");
    }
  }
  const double step = 1.0 / target_hz;
  const double t0 = in.t.front();
  const double t1 = in.t.back();
  const auto count = static_cast<std::size_t>(std::floor((t1 - t0) / step + 1e-9)) + 1;
  TimeSeries out;
  out.t.reserve(count);
  out.v.reserve(count);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < count; ++i) {
    double t = t0 + static_cast<double>(i) * step;
    if (t > t1) t = t1;
    while (seg + 2 < in.size() && in.t[seg + 1] < t) ++seg;
    double a = in.t[seg], b = in.t[seg + 1];
    double frac = (t - a) / (b - a);
    out.push(t, in.v[seg] + frac * (in.v[seg + 1] - in.v[seg]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Heart-rate plausibility: keep samples within [30, 200] bpm, inclusive.

constexpr double kHrMinBpm = 30.0;
constexpr double kHrMaxBpm = 200.0;

inline TimeSeries filter_hr_range(const TimeSeries& in, double lo = kHrMinBpm,
                                  double hi = kHrMaxBpm) {
  TimeSeries out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in.v[i] >= lo && in.v[i] <= hi) out.push(in.t[i], in.v[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wear state: the watch reports a 0..3 confidence. A sample is non-worn when
// at least half of its points report 0. Empty series count as non-worn.

enum class WearState { worn, non_worn };

inline WearState infer_wear_state(const TimeSeries& wear) {
  if (wear.empty()) return WearState::non_worn;
  std::size_t zeros = 0;
  for (double c : wear.v) {
    if (c == 0.0) ++zeros;
  }
  return (static_cast<double>(zeros) >=
          0.5 * static_cast<double>(wear.size()))
             ? WearState::non_worn
             : WearState::worn;
}

// ---------------------------------------------------------------------------
// Audio corruption: a file is corrupt when its size is below 95% of the
// expected size for its nominal duration.

enum class AudioStatus { ok, corrupt };

struct AudioFormat {
  int rate_hz = kAudioRateHz;
  int bytes_per_sample = kAudioBytesPerSample;
};

inline AudioStatus detect_corrupt_audio(std::uint64_t byte_size,
                                        double duration_s,
                                        const AudioFormat& fmt = {}) {
  auto expected = expected_wav_bytes(duration_s, fmt.rate_hz, fmt.bytes_per_sample);
  return static_cast<double>(byte_size) <
                 kCorruptSizeRatio * static_cast<double>(expected)
             ? AudioStatus::corrupt
             : AudioStatus::ok;
}

// ---------------------------------------------------------------------------
// Per-signal conditioning chains used by the extraction pipeline.

constexpr double kHrTargetHz = 1.0;
constexpr double kMotionTargetHz = 50.0;

struct ConditionResult {
  TimeSeries series;
  bool usable = false;
  std::string note;
};

// Heart rate: range filter -> 2-sigma outliers -> resample to 1 Hz.
inline ConditionResult condition_hr(const TimeSeries& raw) {
  ConditionResult out;
  auto ranged = filter_hr_range(raw);
  auto cleaned = remove_outliers(ranged);
  if (cleaned.series.size() < 2) {
    out.note = "hr_unusable_after_filtering";
    return out;
  }
  out.series = resample(cleaned.series, kHrTargetHz);
  out.usable = true;
  return out;
}

// Motion magnitude: 2-sigma outliers -> resample to 50 Hz. The magnitude
// itself is computed upstream (features::magnitude), in that order so the
// outlier pass sees orientation-free values.
inline ConditionResult condition_motion_magnitude(const TimeSeries& mag) {
  ConditionResult out;
  auto cleaned = remove_outliers(mag);
  if (cleaned.series.size() < 2) {
    out.note = "motion_unusable_after_filtering";
    return out;
  }
  out.series = resample(cleaned.series, kMotionTargetHz);
  out.usable = true;
  return out;
}

}  // namespace dyad
