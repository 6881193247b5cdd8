#pragma once

#include "qcbt/event.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcbt::io {

// Binary event file: 16-byte header (magic "QCBTEVT1", version u16 LE,
// camera id u16, reserved u32) followed by fixed 16-byte records
// (t u64, px u16, py u16, plane u8, arm u8, reserved u16), little-endian.
inline constexpr char kMagic[8] = {'Q', 'C', 'B', 'T', 'E', 'V', 'T', '1'};
inline constexpr uint16_t kFormatVersion = 1;

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, uint64_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    uint64_t byte_offset;
};

void write_events(std::span<const PhotonEvent> events, const std::string& path,
                  uint16_t camera_id = 0);

std::vector<PhotonEvent> read_events(const std::string& path);

// CSV mirror of the binary fields, with a header row.
void write_events_csv(std::span<const PhotonEvent> events, const std::string& path);

} // namespace qcbt::io
