#include "healthmon/vitals.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace healthmon {
namespace {

VitalsSample mid_range_sample() {
  return {0, 97.0, 72.0, 36.8, 0.2};
}

TEST(ValidateSample, AcceptsMidRange) {
  EXPECT_TRUE(validate_sample(mid_range_sample()).empty());
}

TEST(ValidateSample, NamesSingleViolation) {
  VitalsSample s = mid_range_sample();
  s.spo2_pct = 101.0;
  const auto v = validate_sample(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], "spo2_pct");
}

TEST(ValidateSample, ReportsMultipleViolationsTogether) {
  VitalsSample s = mid_range_sample();
  s.spo2_pct = -1.0;
  s.hr_bpm = 999.0;
  const auto v = validate_sample(s);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_NE(std::find(v.begin(), v.end(), "spo2_pct"), v.end());
  EXPECT_NE(std::find(v.begin(), v.end(), "hr_bpm"), v.end());
}

TEST(ValidateSample, BoundarySweep) {
  const double eps = 1e-9;
  struct Field {
    double VitalsSample::* member;
    double lo, hi;
  };
  const Field fields[] = {
      {&VitalsSample::spo2_pct, kSpo2Min, kSpo2Max},
      {&VitalsSample::hr_bpm, kHrMin, kHrMax},
      {&VitalsSample::temp_c, kTempMin, kTempMax},
      {&VitalsSample::activity_level, kActivityMin, kActivityMax},
  };
  for (const Field& f : fields) {
    for (double edge : {f.lo, f.hi}) {
      VitalsSample s = mid_range_sample();
      s.*f.member = edge;
      EXPECT_TRUE(sample_valid(s));
      s.*f.member = f.lo - eps;
      EXPECT_FALSE(sample_valid(s));
      s.*f.member = f.hi + eps;
      EXPECT_FALSE(sample_valid(s));
    }
  }
  VitalsSample s = mid_range_sample();
  s.timestamp_ms = -1;
  EXPECT_FALSE(sample_valid(s));
  s.timestamp_ms = 0;
  EXPECT_TRUE(sample_valid(s));
}

TEST(ValidateSample, RejectsNan) {
  VitalsSample s = mid_range_sample();
  s.temp_c = std::numeric_limits<double>::quiet_NaN();
  const auto v = validate_sample(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], "temp_c");
}

TEST(PatientState, SerializationRoundTrips) {
  for (PatientState st : {PatientState::Normal, PatientState::Anomaly}) {
    const auto decoded = patient_state_from_int(to_int(st));
    ASSERT_TRUE(decoded.has_value());
    EXPECT_EQ(*decoded, st);
  }
  EXPECT_EQ(to_int(PatientState::Normal), 0);
  EXPECT_EQ(to_int(PatientState::Anomaly), 1);
  EXPECT_FALSE(patient_state_from_int(2).has_value());
  EXPECT_FALSE(patient_state_from_int(-1).has_value());
}

TEST(CellIdentity, RangeValidation) {
  EXPECT_TRUE(cell_valid({603, 1, 1000, 42}));
  EXPECT_TRUE(cell_valid({0, 0, 0, 0}));
  EXPECT_TRUE(cell_valid({999, 999, 65535, kCellCiMax}));
  EXPECT_FALSE(cell_valid({1000, 0, 0, 0}));
  EXPECT_FALSE(cell_valid({0, -1, 0, 0}));
  EXPECT_FALSE(cell_valid({0, 0, 65536, 0}));
  EXPECT_FALSE(cell_valid({0, 0, 0, kCellCiMax + 1}));
}

TEST(CellIdentity, KeyIsInjectiveOnDistinctFields) {
  const CellIdentity a{603, 1, 1000, 42};
  EXPECT_NE(cell_key(a), cell_key({603, 1, 1000, 43}));
  EXPECT_NE(cell_key(a), cell_key({603, 1, 1001, 42}));
  EXPECT_NE(cell_key(a), cell_key({603, 2, 1000, 42}));
  EXPECT_NE(cell_key(a), cell_key({604, 1, 1000, 42}));
}

TEST(LocationFix, CellFixNeverMorePreciseThanGps) {
  LocationFix f{34.8828, -1.3167, FixSource::Cell, 800.0};
  EXPECT_TRUE(fix_valid(f));
  f.accuracy_m = 1.0;  // below the GPS default
  EXPECT_FALSE(fix_valid(f));
  f.source = FixSource::Gps;
  EXPECT_TRUE(fix_valid(f));
}

TEST(LocationFix, CoordinateRanges) {
  EXPECT_FALSE(fix_valid({91.0, 0.0, FixSource::Gps, 5.0}));
  EXPECT_FALSE(fix_valid({0.0, -181.0, FixSource::Gps, 5.0}));
  EXPECT_FALSE(fix_valid({0.0, 0.0, FixSource::Gps, 0.0}));
  EXPECT_TRUE(fix_valid(unlocated_fix()));
}

TEST(AlertEvent, InvariantCheck) {
  AlertEvent a{"p1", 1000, PatientState::Anomaly, {500, 85, 72, 36.8, 0.2},
               {34.0, -1.0, FixSource::Gps, 5.0}};
  EXPECT_TRUE(alert_valid(a));
  a.state = PatientState::Normal;
  EXPECT_FALSE(alert_valid(a));
  a.state = PatientState::Anomaly;
  a.triggering_sample.timestamp_ms = 2000;  // after created_ms
  EXPECT_FALSE(alert_valid(a));
}

}  // namespace
}  // namespace healthmon
