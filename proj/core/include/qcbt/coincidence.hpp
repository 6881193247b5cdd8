#pragma once

#include "qcbt/camera.hpp"
#include "qcbt/event.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qcbt::coincidence {

struct CoincidenceConfig {
    double window_ns = 20.0; // half-width tau
    // Spatial post-selection radii; required only when gating that plane.
    std::optional<double> gate_rho_r_um;
    std::optional<double> gate_rho_k_per_um;
};

struct CoincidencePair {
    PhotonEvent signal;
    PhotonEvent idler;
    int64_t dt_ns = 0; // t_signal - t_idler
    Plane plane = Plane::Position;
};

struct MatchCounters {
    uint64_t pairs = 0;
    uint64_t signal_singles = 0;
    uint64_t idler_singles = 0;
    uint64_t ambiguous = 0;    // signals that saw more than one candidate
    size_t peak_buffered = 0;  // matcher state high-water mark
};

struct MatchResult {
    std::vector<CoincidencePair> pairs; // sorted by signal timestamp
    MatchCounters counters;
};

// Streaming one-to-one greedy matcher. Signal events are processed in time
// order; each takes the unmatched idler within +-window minimizing |dt|,
// earlier idler winning ties. State is bounded by the events inside one
// window span. Throws on unsorted input or mixed planes.
MatchResult match_coincidences(std::span<const PhotonEvent> signal,
                               std::span<const PhotonEvent> idler,
                               const CoincidenceConfig& cfg);

struct GateResult {
    std::vector<CoincidencePair> pairs;
    uint64_t rejected = 0;
};

// Keep position-plane pairs with |r_s - r_i| <= rho_r and momentum-plane
// pairs with |k_s + k_i| <= rho_k (Euclidean over both axes, pixel-centre
// coordinates). Throws if the needed radius is not configured.
GateResult spatial_gate(std::span<const CoincidencePair> pairs, const CoincidenceConfig& cfg,
                        const camera::CameraParams& cam);

struct ThroughputReport {
    uint64_t events = 0;
    uint64_t pairs = 0;
    double seconds = 0.0;
    double events_per_sec = 0.0;
};

// Sustained single-pass matcher throughput on synthetic Poisson streams
// (half the events per arm, a fraction of planted true pairs).
ThroughputReport throughput_bench(uint64_t n_events, const CoincidenceConfig& cfg,
                                  uint64_t seed = 1);

} // namespace qcbt::coincidence
