#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace healthmon {

// One timestamped physiological reading. activity_level is a normalized
// [0,1] scalar carried as the fourth classifier input; the simulator makes
// it dip during anomalous episodes so it carries label-relevant signal.
struct VitalsSample {
  std::int64_t timestamp_ms = 0;
  double spo2_pct = 0.0;
  double hr_bpm = 0.0;
  double temp_c = 0.0;
  double activity_level = 0.0;

  friend bool operator==(const VitalsSample&, const VitalsSample&) = default;
};

// Validity envelope. Generous physiological bounds: wide enough for
// extreme-but-real vitals, tight enough to reject codec corruption.
inline constexpr double kSpo2Min = 0.0, kSpo2Max = 100.0;
inline constexpr double kHrMin = 0.0, kHrMax = 300.0;
inline constexpr double kTempMin = 25.0, kTempMax = 45.0;
inline constexpr double kActivityMin = 0.0, kActivityMax = 1.0;

// Names every violated field; an empty result means the sample is valid.
// NaN fails every range check.
inline std::vector<std::string> validate_sample(const VitalsSample& s) {
  std::vector<std::string> violations;
  if (s.timestamp_ms < 0) violations.emplace_back("timestamp_ms");
  if (!(s.spo2_pct >= kSpo2Min && s.spo2_pct <= kSpo2Max)) violations.emplace_back("spo2_pct");
  if (!(s.hr_bpm >= kHrMin && s.hr_bpm <= kHrMax)) violations.emplace_back("hr_bpm");
  if (!(s.temp_c >= kTempMin && s.temp_c <= kTempMax)) violations.emplace_back("temp_c");
  if (!(s.activity_level >= kActivityMin && s.activity_level <= kActivityMax)) {
    violations.emplace_back("activity_level");
  }
  return violations;
}

inline bool sample_valid(const VitalsSample& s) { return validate_sample(s).empty(); }

// Binary patient state. On the wire and in files it is always 0 (Normal) or
// 1 (Anomaly).
enum class PatientState : int { Normal = 0, Anomaly = 1 };

inline int to_int(PatientState st) { return static_cast<int>(st); }

inline std::optional<PatientState> patient_state_from_int(int v) {
  if (v == 0) return PatientState::Normal;
  if (v == 1) return PatientState::Anomaly;
  return std::nullopt;
}

inline const char* to_string(PatientState st) {
  return st == PatientState::Normal ? "Normal" : "Anomaly";
}

// GSM-style cell identity used for coarse geolocation when GPS is absent.
struct CellIdentity {
  int mcc = 0;           // 0..999
  int mnc = 0;           // 0..999
  int lac = 0;           // 0..65535
  std::int64_t ci = 0;   // 0..2^28-1

  friend auto operator<=>(const CellIdentity&, const CellIdentity&) = default;
};

inline constexpr std::int64_t kCellCiMax = (std::int64_t{1} << 28) - 1;

inline bool cell_valid(const CellIdentity& c) {
  return c.mcc >= 0 && c.mcc <= 999 && c.mnc >= 0 && c.mnc <= 999 &&
         c.lac >= 0 && c.lac <= 65535 && c.ci >= 0 && c.ci <= kCellCiMax;
}

// Packs a valid identity into one integer key: 10+10+16+28 bits.
inline std::uint64_t cell_key(const CellIdentity& c) {
  return (static_cast<std::uint64_t>(c.mcc) << 54) |
         (static_cast<std::uint64_t>(c.mnc) << 44) |
         (static_cast<std::uint64_t>(c.lac) << 28) |
         static_cast<std::uint64_t>(c.ci);
}

enum class FixSource { Gps, Cell };

inline const char* to_string(FixSource s) { return s == FixSource::Gps ? "GPS" : "CELL"; }

inline std::optional<FixSource> fix_source_from_string(const std::string& s) {
  if (s == "GPS") return FixSource::Gps;
  if (s == "CELL") return FixSource::Cell;
  return std::nullopt;
}

// Cell fixes are never reported as more precise than a GPS fix.
inline constexpr double kGpsDefaultAccuracyM = 5.0;

struct LocationFix {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
  FixSource source = FixSource::Cell;
  double accuracy_m = kGpsDefaultAccuracyM;

  friend bool operator==(const LocationFix&, const LocationFix&) = default;
};

inline std::vector<std::string> validate_fix(const LocationFix& f) {
  std::vector<std::string> violations;
  if (!(f.lat_deg >= -90.0 && f.lat_deg <= 90.0)) violations.emplace_back("lat_deg");
  if (!(f.lon_deg >= -180.0 && f.lon_deg <= 180.0)) violations.emplace_back("lon_deg");
  if (!(f.accuracy_m > 0.0)) violations.emplace_back("accuracy_m");
  if (f.source == FixSource::Cell && !(f.accuracy_m >= kGpsDefaultAccuracyM)) {
    violations.emplace_back("accuracy_m");
  }
  return violations;
}

inline bool fix_valid(const LocationFix& f) { return validate_fix(f).empty(); }

// Placeholder fix emitted when neither GPS nor the cell database can place
// the patient: zero coordinates with a whole-earth uncertainty radius.
inline constexpr double kUnlocatedAccuracyM = 2.0e7;

inline LocationFix unlocated_fix() {
  return LocationFix{0.0, 0.0, FixSource::Cell, kUnlocatedAccuracyM};
}

// Anomaly decision joined with patient identity and location, as dispatched
// to caregivers.
struct AlertEvent {
  std::string patient_id;
  std::int64_t created_ms = 0;
  PatientState state = PatientState::Anomaly;
  VitalsSample triggering_sample;
  LocationFix location;

  friend bool operator==(const AlertEvent&, const AlertEvent&) = default;
};

inline bool alert_valid(const AlertEvent& a) {
  return a.state == PatientState::Anomaly &&
         a.triggering_sample.timestamp_ms <= a.created_ms &&
         sample_valid(a.triggering_sample) && fix_valid(a.location);
}

}  // namespace healthmon
