#pragma once

#include <cstdint>

namespace qcbt {

enum class Plane : uint8_t { Position = 0, Momentum = 1 };
enum class Arm : uint8_t { Signal = 0, Idler = 1, Unknown = 2 };

inline const char* to_string(Plane p) { return p == Plane::Position ? "position" : "momentum"; }
inline const char* to_string(Arm a) {
    switch (a) {
    case Arm::Signal: return "signal";
    case Arm::Idler: return "idler";
    default: return "unknown";
    }
}

// Provenance tags carried in memory for validation; never serialized.
inline constexpr int64_t kTruthNone = -1;
inline constexpr int64_t kTruthBackground = -2;

// One time-tagged camera detection. px/py are global pixel indices on the
// camera; physical coordinates are recovered through the camera geometry.
struct PhotonEvent {
    uint64_t t_ns = 0;
    uint16_t px = 0;
    uint16_t py = 0;
    Plane plane = Plane::Position;
    Arm arm = Arm::Unknown;
    int64_t truth_tag = kTruthNone; // pair id >= 0, or kTruth* sentinel

    bool operator==(const PhotonEvent& o) const {
        return t_ns == o.t_ns && px == o.px && py == o.py && plane == o.plane && arm == o.arm;
    }
};

} // namespace qcbt
