#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "healthmon/rng.hpp"
#include "healthmon/vitals.hpp"

namespace healthmon {

// Baseline distribution of a simulated patient: each vitals field is drawn
// from Normal(mu, sigma) and clipped to the validity envelope.
struct PatientProfile {
  double spo2_mu = 97.0, spo2_sigma = 0.5;
  double hr_mu = 72.0, hr_sigma = 3.0;
  double temp_mu = 36.8, temp_sigma = 0.15;
  double activity_mu = 0.2, activity_sigma = 0.05;
};

enum class EpisodeKind { Baseline, Hypoxia, Tachycardia, Fever };

inline const char* to_string(EpisodeKind k) {
  switch (k) {
    case EpisodeKind::Baseline: return "baseline";
    case EpisodeKind::Hypoxia: return "hypoxia";
    case EpisodeKind::Tachycardia: return "tachycardia";
    case EpisodeKind::Fever: return "fever";
  }
  return "?";
}

struct Episode {
  double start_s = 0.0;
  double end_s = 0.0;
  EpisodeKind kind = EpisodeKind::Baseline;
};

// Ordered, non-overlapping segments; time not covered by any segment is
// baseline.
using EpisodeScript = std::vector<Episode>;

class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ScriptError on an empty-duration or overlapping segment. Returns
// the script sorted by start time.
inline EpisodeScript validate_script(EpisodeScript script) {
  std::sort(script.begin(), script.end(),
            [](const Episode& a, const Episode& b) { return a.start_s < b.start_s; });
  for (std::size_t i = 0; i < script.size(); ++i) {
    if (!(script[i].start_s < script[i].end_s)) {
      throw ScriptError("episode segment must satisfy start_s < end_s");
    }
    if (i > 0 && script[i].start_s < script[i - 1].end_s) {
      throw ScriptError("episode segments overlap");
    }
  }
  return script;
}

struct ReportingMode {
  enum class Kind { Raw, Event, Averaged };
  Kind kind = Kind::Raw;
  int window_s = 1;  // Averaged only; >= 1

  static ReportingMode raw() { return {Kind::Raw, 1}; }
  static ReportingMode event() { return {Kind::Event, 1}; }
  static ReportingMode averaged(int window_s) {
    if (window_s < 1) throw std::invalid_argument("averaged window_s must be >= 1");
    return {Kind::Averaged, window_s};
  }
};

// Dataset-labeling ground truth: the "accepted norms" rule. Boundary values
// are inclusive-normal; activity never changes the label.
inline constexpr double kNormSpo2Min = 90.0;
inline constexpr double kNormHrMin = 50.0, kNormHrMax = 120.0;
inline constexpr double kNormTempMin = 36.0, kNormTempMax = 38.5;

inline PatientState label_oracle(const VitalsSample& s) {
  const bool anomaly = s.spo2_pct < kNormSpo2Min || s.hr_bpm < kNormHrMin ||
                       s.hr_bpm > kNormHrMax || s.temp_c < kNormTempMin ||
                       s.temp_c > kNormTempMax;
  return anomaly ? PatientState::Anomaly : PatientState::Normal;
}

namespace detail {

// Episode targets: the forced field's distribution at full episode weight.
inline constexpr double kHypoxiaSpo2Mu = 85.0, kHypoxiaSpo2Sigma = 2.0;
inline constexpr double kTachyHrMu = 150.0, kTachyHrSigma = 10.0;
inline constexpr double kFeverTempMu = 39.5, kFeverTempSigma = 0.3;
// Activity dips during any anomalous episode (with baseline noise), so the
// fourth input correlates with the label.
inline constexpr double kEpisodeActivityMu = 0.05;
inline constexpr double kEpisodeRampS = 10.0;

inline double lerp(double a, double b, double w) { return a + (b - a) * w; }

// Linear onset/offset weight in [0,1]: ramps over the first and last
// kEpisodeRampS seconds of the segment.
inline double episode_weight(const Episode& e, double t_s) {
  const double w = std::min({(t_s - e.start_s) / kEpisodeRampS,
                             (e.end_s - t_s) / kEpisodeRampS, 1.0});
  return std::clamp(w, 0.0, 1.0);
}

}  // namespace detail

// Generates the sensor stream for the scripted scenario at 1/hz spacing,
// covering [0, max end_s). Fully deterministic in (profile, script, mode,
// hz, seed): every sample consumes exactly four gaussian draws in field
// order regardless of mode.
inline std::vector<VitalsSample> generate_stream(const PatientProfile& profile,
                                                 const EpisodeScript& script,
                                                 const ReportingMode& mode, double hz,
                                                 std::uint64_t seed) {
  if (!(hz > 0.0)) throw std::invalid_argument("sampling rate must be > 0");
  const EpisodeScript sorted = validate_script(script);

  double duration_s = 0.0;
  for (const Episode& e : sorted) duration_s = std::max(duration_s, e.end_s);
  const auto count = static_cast<std::size_t>(std::floor(duration_s * hz));

  Rng rng(seed);
  std::vector<VitalsSample> raw;
  raw.reserve(count);
  std::size_t seg = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const double t_s = static_cast<double>(k) / hz;
    while (seg < sorted.size() && t_s >= sorted[seg].end_s) ++seg;

    double spo2_mu = profile.spo2_mu, spo2_sigma = profile.spo2_sigma;
    double hr_mu = profile.hr_mu, hr_sigma = profile.hr_sigma;
    double temp_mu = profile.temp_mu, temp_sigma = profile.temp_sigma;
    double act_mu = profile.activity_mu;

    if (seg < sorted.size() && t_s >= sorted[seg].start_s &&
        sorted[seg].kind != EpisodeKind::Baseline) {
      const Episode& e = sorted[seg];
      const double w = detail::episode_weight(e, t_s);
      switch (e.kind) {
        case EpisodeKind::Hypoxia:
          spo2_mu = detail::lerp(spo2_mu, detail::kHypoxiaSpo2Mu, w);
          spo2_sigma = detail::lerp(spo2_sigma, detail::kHypoxiaSpo2Sigma, w);
          break;
        case EpisodeKind::Tachycardia:
          hr_mu = detail::lerp(hr_mu, detail::kTachyHrMu, w);
          hr_sigma = detail::lerp(hr_sigma, detail::kTachyHrSigma, w);
          break;
        case EpisodeKind::Fever:
          temp_mu = detail::lerp(temp_mu, detail::kFeverTempMu, w);
          temp_sigma = detail::lerp(temp_sigma, detail::kFeverTempSigma, w);
          break;
        case EpisodeKind::Baseline:
          break;
      }
      act_mu = detail::lerp(act_mu, detail::kEpisodeActivityMu, w);
    }

    VitalsSample s;
    s.timestamp_ms = std::llround(t_s * 1000.0);
    s.spo2_pct = std::clamp(rng.gaussian(spo2_mu, spo2_sigma), kSpo2Min, kSpo2Max);
    s.hr_bpm = std::clamp(rng.gaussian(hr_mu, hr_sigma), kHrMin, kHrMax);
    s.temp_c = std::clamp(rng.gaussian(temp_mu, temp_sigma), kTempMin, kTempMax);
    s.activity_level =
        std::clamp(rng.gaussian(act_mu, profile.activity_sigma), kActivityMin, kActivityMax);
    raw.push_back(s);
  }

  switch (mode.kind) {
    case ReportingMode::Kind::Raw:
      return raw;

    case ReportingMode::Kind::Event: {
      // Emit the opening sample, then one sample per label transition.
      std::vector<VitalsSample> out;
      PatientState prev = PatientState::Normal;
      for (std::size_t k = 0; k < raw.size(); ++k) {
        const PatientState cur = label_oracle(raw[k]);
        if (k == 0 || cur != prev) out.push_back(raw[k]);
        prev = cur;
      }
      return out;
    }

    case ReportingMode::Kind::Averaged: {
      // One sample per complete window: the arithmetic mean of every field
      // (timestamp rounded to whole milliseconds). Trailing partial windows
      // are dropped.
      const auto block = static_cast<std::size_t>(
          std::max<std::int64_t>(1, std::llround(mode.window_s * hz)));
      std::vector<VitalsSample> out;
      for (std::size_t b = 0; b + block <= raw.size(); b += block) {
        double ts = 0, spo2 = 0, hr = 0, temp = 0, act = 0;
        for (std::size_t i = b; i < b + block; ++i) {
          ts += static_cast<double>(raw[i].timestamp_ms);
          spo2 += raw[i].spo2_pct;
          hr += raw[i].hr_bpm;
          temp += raw[i].temp_c;
          act += raw[i].activity_level;
        }
        const double n = static_cast<double>(block);
        out.push_back({std::llround(ts / n), spo2 / n, hr / n, temp / n, act / n});
      }
      return out;
    }
  }
  return raw;
}

}  // namespace healthmon
