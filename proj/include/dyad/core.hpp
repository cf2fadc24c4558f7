#pragma once

// Domain model: partners, schedules, recording sessions, self-reports,
// context codes, label binarization and the sample-selection funnel.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyad/common.hpp"
#include "dyad/feature_vector.hpp"
#include "dyad/wav.hpp"

namespace dyad {

// ---------------------------------------------------------------------------
// Partners and schedules

enum class Role { patient, support_partner };
enum class Gender { male, female };
enum class TriggerKind { interaction, backup };
enum class WindowKind { weekday_morning, weekday_evening, weekend };

inline std::string to_string(Role r) {
  return r == Role::patient ? "patient" : "support";
}
inline Role role_from_string(const std::string& s) {
  if (s == "patient") return Role::patient;
  if (s == "support") return Role::support_partner;
  throw std::invalid_argument("unknown role '" + s + "'");
}
inline std::string to_string(Gender g) {
  return g == Gender::male ? "male" : "female";
}
inline Gender gender_from_string(const std::string& s) {
  if (s == "male") return Gender::male;
  if (s == "female") return Gender::female;
  throw std::invalid_argument("unknown gender '" + s + "'");
}
inline std::string to_string(TriggerKind k) {
  return k == TriggerKind::interaction ? "interaction" : "backup";
}
inline TriggerKind trigger_from_string(const std::string& s) {
  if (s == "interaction") return TriggerKind::interaction;
  if (s == "backup") return TriggerKind::backup;
  throw std::invalid_argument("unknown trigger kind '" + s + "'");
}

struct PartnerRef {
  int couple_id = 0;  // >= 1
  Role role = Role::patient;
  Gender gender = Gender::male;
};

// Days are indices into the study week, day 0 = Monday. Days 5 and 6 are
// the weekend.
inline bool is_weekend(int day) { return day % 7 >= 5; }

// Collection windows a couple agreed to. Weekday mornings must lie within
// [4, 11), weekday evenings within [16, 23); weekends run all day between
// the chosen start and end hours. All windows are half-open hour ranges.
struct CoupleSchedule {
  int weekday_morning_begin = 7, weekday_morning_end = 9;
  int weekday_evening_begin = 18, weekday_evening_end = 20;
  int weekend_begin = 8, weekend_end = 20;

  void validate() const {
    auto check = [](int b, int e, int lo, int hi, const char* what) {
      if (b < lo || e > hi || e - b < 2) {
        throw std::invalid_argument(std::string("schedule: bad ") + what +
                                    " window [" + std::to_string(b) + "," +
                                    std::to_string(e) + ")");
      }
    };
    check(weekday_morning_begin, weekday_morning_end, 4, 11, "morning");
    check(weekday_evening_begin, weekday_evening_end, 16, 23, "evening");
    check(weekend_begin, weekend_end, 0, 24, "weekend");
  }

  std::optional<WindowKind> window_kind(int day, int hour) const {
    if (is_weekend(day)) {
      if (hour >= weekend_begin && hour < weekend_end) return WindowKind::weekend;
      return std::nullopt;
    }
    if (hour >= weekday_morning_begin && hour < weekday_morning_end) {
      return WindowKind::weekday_morning;
    }
    if (hour >= weekday_evening_begin && hour < weekday_evening_end) {
      return WindowKind::weekday_evening;
    }
    return std::nullopt;
  }

  bool contains(int day, int hour) const {
    return window_kind(day, hour).has_value();
  }
};

using StudySchedule = std::map<int, CoupleSchedule>;  // couple_id -> windows

struct HourSlot {
  int day = 0;
  int hour = 0;
  WindowKind kind = WindowKind::weekend;
};

// ---------------------------------------------------------------------------
// Sessions, reports, codes

struct AudioRef {
  std::string path;          // corpus-relative; empty when audio was deleted
  std::uint64_t bytes = 0;   // on-disk size, used by the corruption check
};

// One 5-minute multimodal bundle collected by one watch.
struct RecordingSession {
  std::string session_id;
  PartnerRef partner;
  HourSlot slot;
  double start_offset_s = 0.0;  // seconds into the hour
  double duration_s = 300.0;    // <= 300 by protocol
  TriggerKind trigger_kind = TriggerKind::interaction;
  double peripheral_delay_s = 0.0;  // applies to the peripheral watch, <= 10

  std::optional<AudioRef> audio;
  bool hr_present = false, accel_present = false, gyro_present = false,
       light_present = false, wear_present = false;

  // Sensor payloads; may be empty when only metadata was loaded even though
  // the *_present flags are set.
  TimeSeries hr;     // (s, bpm)
  TriSeries accel;   // (s, m/s^2)
  TriSeries gyro;    // (s, rad/s)
  TimeSeries light;  // (s, lux)
  TimeSeries wear;   // (s, confidence 0..3)

  bool all_sensors_present() const {
    return hr_present && accel_present && gyro_present && light_present &&
           wear_present;
  }

  double start_abs_s() const {
    return (slot.day * 24.0 + slot.hour) * 3600.0 + start_offset_s;
  }
};

inline std::string make_session_id(int couple, Role role, int day, int hour,
                                   int seq) {
  return "c" + std::to_string(couple) + "_" + to_string(role) + "_" +
         std::to_string(day) + "_" + std::to_string(hour) + "_" +
         std::to_string(seq);
}

struct SelfReport {
  std::string session_id;
  double valence_raw = -1.0;  // 0..100 when completed
  double arousal_raw = -1.0;
  bool started_within_first_window = false;
  bool completed = false;
};

struct ContextCode {
  std::string session_id;
  bool speech_present = false;
  bool male_spoke = false;
  bool female_spoke = false;
  bool conversation = false;
  bool partner_conversation = false;  // implies male_spoke && female_spoke
  std::string interaction_partner;    // e.g. "romantic partner", "alone"
  std::string location;
  std::string activity;
  std::string conversation_type;
};

// ---------------------------------------------------------------------------
// Labels

enum class ValenceBin { negative, positive };
enum class ArousalBin { low, high };
enum class Quadrant {
  q1_high_positive,
  q2_high_negative,
  q3_low_negative,
  q4_low_positive
};

inline std::string to_string(ValenceBin v) {
  return v == ValenceBin::negative ? "negative" : "positive";
}
inline std::string to_string(ArousalBin a) {
  return a == ArousalBin::low ? "low" : "high";
}
inline std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::q1_high_positive: return "Q1_high_pos";
    case Quadrant::q2_high_negative: return "Q2_high_neg";
    case Quadrant::q3_low_negative: return "Q3_low_neg";
    case Quadrant::q4_low_positive: return "Q4_low_pos";
  }
  return "?";
}

inline Quadrant quadrant_of(ValenceBin v, ArousalBin a) {
  if (a == ArousalBin::high) {
    return v == ValenceBin::positive ? Quadrant::q1_high_positive
                                     : Quadrant::q2_high_negative;
  }
  return v == ValenceBin::positive ? Quadrant::q4_low_positive
                                   : Quadrant::q3_low_negative;
}

struct EmotionLabel {
  ValenceBin valence_bin = ValenceBin::negative;
  ArousalBin arousal_bin = ArousalBin::low;
  Quadrant quadrant = Quadrant::q3_low_negative;
};

// Split at the slider midpoint: <= 50 maps to low/negative, > 50 to
// high/positive, on both dimensions.
inline EmotionLabel binarize_affect(double valence_raw, double arousal_raw) {
  if (!(valence_raw >= 0.0 && valence_raw <= 100.0) ||
      !(arousal_raw >= 0.0 && arousal_raw <= 100.0)) {
    throw std::domain_error("binarize_affect: slider values must be in [0,100]");
  }
  EmotionLabel label;
  label.valence_bin =
      valence_raw > 50.0 ? ValenceBin::positive : ValenceBin::negative;
  label.arousal_bin = arousal_raw > 50.0 ? ArousalBin::high : ArousalBin::low;
  label.quadrant = quadrant_of(label.valence_bin, label.arousal_bin);
  return label;
}

// ---------------------------------------------------------------------------
// Dataset samples and the selection funnel

struct DatasetSample {
  std::string session_id;
  int couple_id = 0;
  Gender gender = Gender::male;
  std::map<Modality, FeatureVector> features;
  EmotionLabel label;
};

enum class RejectReason {
  missing_audio,
  corrupt_audio,
  missing_sensor_series,
  outside_schedule_window,
  unknown_couple_schedule,
  missing_self_report,
  incomplete_self_report,
  invalid_report_values,
  missing_context_code,
  partners_not_both_speaking
};

inline std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::missing_audio: return "missing_audio";
    case RejectReason::corrupt_audio: return "corrupt_audio";
    case RejectReason::missing_sensor_series: return "missing_sensor_series";
    case RejectReason::outside_schedule_window: return "outside_schedule_window";
    case RejectReason::unknown_couple_schedule: return "unknown_couple_schedule";
    case RejectReason::missing_self_report: return "missing_self_report";
    case RejectReason::incomplete_self_report: return "incomplete_self_report";
    case RejectReason::invalid_report_values: return "invalid_report_values";
    case RejectReason::missing_context_code: return "missing_context_code";
    case RejectReason::partners_not_both_speaking:
      return "partners_not_both_speaking";
  }
  return "?";
}

struct Rejection {
  std::string session_id;
  RejectReason reason;
};

struct SelectionResult {
  std::vector<DatasetSample> samples;
  std::vector<Rejection> rejections;
};

// Audio files smaller than this fraction of the nominal size are corrupt.
constexpr double kCorruptSizeRatio = 0.95;

inline bool audio_ok(const RecordingSession& s) {
  if (!s.audio) return false;
  auto expected = expected_wav_bytes(s.duration_s);
  return static_cast<double>(s.audio->bytes) >=
         kCorruptSizeRatio * static_cast<double>(expected);
}

// The selection funnel. A session survives iff, in order:
//   1. it has non-corrupt audio and all five sensor series,
//   2. it lies within its couple's declared collection hours,
//   3. its self-report was completed,
//   4. the context code says both partners spoke.
// Every failing session is recorded with the first reason that rejected it.
inline SelectionResult select_samples(
    const std::vector<RecordingSession>& sessions,
    const std::vector<SelfReport>& reports,
    const std::vector<ContextCode>& codes, const StudySchedule& schedule) {
  std::map<std::string, const SelfReport*> report_by_id;
  for (const auto& r : reports) report_by_id[r.session_id] = &r;
  std::map<std::string, const ContextCode*> code_by_id;
  for (const auto& c : codes) code_by_id[c.session_id] = &c;

  SelectionResult out;
  for (const auto& s : sessions) {
    auto reject = [&](RejectReason why) {
      out.rejections.push_back({s.session_id, why});
    };
    if (!s.audio) {
      reject(RejectReason::missing_audio);
      continue;
    }
    if (!audio_ok(s)) {
      reject(RejectReason::corrupt_audio);
      continue;
    }
    if (!s.all_sensors_present()) {
      reject(RejectReason::missing_sensor_series);
      continue;
    }
    auto sched = schedule.find(s.partner.couple_id);
    if (sched == schedule.end()) {
      reject(RejectReason::unknown_couple_schedule);
      continue;
    }
    if (!sched->second.contains(s.slot.day, s.slot.hour)) {
      reject(RejectReason::outside_schedule_window);
      continue;
    }
    auto rep = report_by_id.find(s.session_id);
    if (rep == report_by_id.end()) {
      reject(RejectReason::missing_self_report);
      continue;
    }
    if (!rep->second->completed) {
      reject(RejectReason::incomplete_self_report);
      continue;
    }
    const auto& r = *rep->second;
    if (!(r.valence_raw >= 0 && r.valence_raw <= 100 && r.arousal_raw >= 0 &&
          r.arousal_raw <= 100)) {
      reject(RejectReason::invalid_report_values);
      continue;
    }
    auto code = code_by_id.find(s.session_id);
    if (code == code_by_id.end()) {
      reject(RejectReason::missing_context_code);
      continue;
    }
    if (!(code->second->male_spoke && code->second->female_spoke)) {
      reject(RejectReason::partners_not_both_speaking);
      continue;
    }
    DatasetSample d;
    d.session_id = s.session_id;
    d.couple_id = s.partner.couple_id;
    d.gender = s.partner.gender;
    d.label = binarize_affect(r.valence_raw, r.arousal_raw);
    out.samples.push_back(std::move(d));
  }
  return out;
}

inline std::pair<std::vector<DatasetSample>, std::vector<DatasetSample>>
split_by_gender(const std::vector<DatasetSample>& samples) {
  std::pair<std::vector<DatasetSample>, std::vector<DatasetSample>> out;
  for (const auto& s : samples) {
    (s.gender == Gender::male ? out.first : out.second).push_back(s);
  }
  return out;
}

}  // namespace dyad
