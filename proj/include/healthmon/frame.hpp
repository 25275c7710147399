#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "healthmon/vitals.hpp"

namespace healthmon {

// Sensor-to-gateway wire frame, 23 bytes, little-endian multi-byte fields:
//
//   byte  0      0x7E sync marker
//   byte  1      message type (0x01 = vitals)
//   bytes 2-9    timestamp_ms, unsigned 64-bit
//   bytes 10-11  spo2_pct x10, unsigned 16-bit
//   bytes 12-13  hr_bpm x10, unsigned 16-bit
//   bytes 14-15  temp_c x100, unsigned 16-bit
//   bytes 16-17  activity_level x1000, unsigned 16-bit
//   bytes 18-21  reserved, zero
//   byte  22     XOR checksum of bytes 0-21
//
// Frames are self-delimiting by fixed length after the sync byte.

inline constexpr std::size_t kFrameSize = 23;
inline constexpr std::uint8_t kFrameSync = 0x7E;
inline constexpr std::uint8_t kFrameTypeVitals = 0x01;

inline constexpr double kSpo2Scale = 10.0;
inline constexpr double kHrScale = 10.0;
inline constexpr double kTempScale = 100.0;
inline constexpr double kActivityScale = 1000.0;

using FrameBytes = std::array<std::uint8_t, kFrameSize>;

// A field does not fit its fixed-point word.
class FrameRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

namespace detail {

inline std::uint16_t to_word(double value, double scale, const char* field) {
  const double scaled = std::llround(value * scale);
  if (!(scaled >= 0.0 && scaled <= 65535.0)) {
    throw FrameRangeError(std::string(field) + " exceeds fixed-point capacity");
  }
  return static_cast<std::uint16_t>(scaled);
}

inline void put_u16(FrameBytes& f, std::size_t at, std::uint16_t v) {
  f[at] = static_cast<std::uint8_t>(v & 0xFF);
  f[at + 1] = static_cast<std::uint8_t>(v >> 8);
}

inline std::uint16_t get_u16(std::span<const std::uint8_t> f, std::size_t at) {
  return static_cast<std::uint16_t>(f[at] | (f[at + 1] << 8));
}

inline std::uint8_t xor_checksum(std::span<const std::uint8_t> bytes) {
  std::uint8_t x = 0;
  for (std::size_t i = 0; i + 1 < kFrameSize; ++i) x ^= bytes[i];
  return x;
}

}  // namespace detail

// Requires a valid sample; values are rounded to the nearest fixed-point
// lattice point.
inline FrameBytes encode_frame(const VitalsSample& s) {
  if (!sample_valid(s)) throw std::invalid_argument("encode_frame: invalid sample");
  FrameBytes f{};
  f[0] = kFrameSync;
  f[1] = kFrameTypeVitals;
  auto ts = static_cast<std::uint64_t>(s.timestamp_ms);
  for (std::size_t i = 0; i < 8; ++i) {
    f[2 + i] = static_cast<std::uint8_t>(ts & 0xFF);
    ts >>= 8;
  }
  detail::put_u16(f, 10, detail::to_word(s.spo2_pct, kSpo2Scale, "spo2_pct"));
  detail::put_u16(f, 12, detail::to_word(s.hr_bpm, kHrScale, "hr_bpm"));
  detail::put_u16(f, 14, detail::to_word(s.temp_c, kTempScale, "temp_c"));
  detail::put_u16(f, 16, detail::to_word(s.activity_level, kActivityScale, "activity_level"));
  f[22] = detail::xor_checksum(f);
  return f;
}

enum class DecodeStatus {
  Ok,
  BadLength,
  BadSync,
  BadType,
  BadChecksum,
  InvalidSample,
};

inline const char* to_string(DecodeStatus st) {
  switch (st) {
    case DecodeStatus::Ok: return "Ok";
    case DecodeStatus::BadLength: return "BadLength";
    case DecodeStatus::BadSync: return "BadSync";
    case DecodeStatus::BadType: return "BadType";
    case DecodeStatus::BadChecksum: return "BadChecksum";
    case DecodeStatus::InvalidSample: return "InvalidSample";
  }
  return "?";
}

struct DecodeResult {
  DecodeStatus status = DecodeStatus::BadLength;
  VitalsSample sample;  // meaningful only when status == Ok

  bool ok() const { return status == DecodeStatus::Ok; }
};

inline DecodeResult decode_frame(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kFrameSize) return {DecodeStatus::BadLength, {}};
  if (bytes[0] != kFrameSync) return {DecodeStatus::BadSync, {}};
  std::uint8_t x = 0;
  for (std::size_t i = 0; i + 1 < kFrameSize; ++i) x ^= bytes[i];
  if (x != bytes[22]) return {DecodeStatus::BadChecksum, {}};
  if (bytes[1] != kFrameTypeVitals) return {DecodeStatus::BadType, {}};

  std::uint64_t ts = 0;
  for (std::size_t i = 8; i-- > 0;) ts = (ts << 8) | bytes[2 + i];

  VitalsSample s;
  s.timestamp_ms = static_cast<std::int64_t>(ts);
  s.spo2_pct = detail::get_u16(bytes, 10) / kSpo2Scale;
  s.hr_bpm = detail::get_u16(bytes, 12) / kHrScale;
  s.temp_c = detail::get_u16(bytes, 14) / kTempScale;
  s.activity_level = detail::get_u16(bytes, 16) / kActivityScale;
  if (ts > static_cast<std::uint64_t>(INT64_MAX) || !sample_valid(s)) {
    return {DecodeStatus::InvalidSample, {}};
  }
  return {DecodeStatus::Ok, s};
}

// Incremental parser for a byte stream carrying back-to-back frames.
// A frame attempt consumes exactly kFrameSize bytes after a sync byte;
// garbage between frames is skipped and reported as a single BadSync result
// per contiguous run.
class FrameReader {
 public:
  std::vector<DecodeResult> feed(std::span<const std::uint8_t> bytes) {
    buf_.insert(buf_.end(), bytes.begin(), bytes.end());
    std::vector<DecodeResult> results;
    std::size_t pos = 0;
    while (pos < buf_.size()) {
      if (buf_[pos] != kFrameSync) {
        if (!in_garbage_) {
          results.push_back({DecodeStatus::BadSync, {}});
          in_garbage_ = true;
        }
        ++pos;
        continue;
      }
      in_garbage_ = false;
      if (buf_.size() - pos < kFrameSize) break;
      results.push_back(decode_frame(std::span(buf_).subspan(pos, kFrameSize)));
      pos += kFrameSize;
    }
    buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(pos));
    return results;
  }

  std::size_t pending_bytes() const { return buf_.size(); }

 private:
  std::vector<std::uint8_t> buf_;
  bool in_garbage_ = false;
};

}  // namespace healthmon
