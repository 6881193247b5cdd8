#pragma once

#include "qcbt/event.hpp"
#include "qcbt/random.hpp"
#include "qcbt/source.hpp"
#include "qcbt/vec2.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qcbt::camera {

// Pixel rectangle [x0, x0+w) x [y0, y0+h) on the camera.
struct Region {
    uint16_t x0 = 0, y0 = 0;
    uint16_t w = 0, h = 0;

    bool contains(uint16_t px, uint16_t py) const {
        return px >= x0 && px < x0 + w && py >= y0 && py < y0 + h;
    }
};

// Time-tagging camera model. The sensor is split into one region per
// (plane, arm); physical coordinates are region-local with the origin on
// the optical axis at the region centre, so momentum coordinates read
// directly as transverse wavenumber offsets.
struct CameraParams {
    uint16_t pixels_x = 256;
    uint16_t pixels_y = 256;
    double pitch_um = 55.0;
    double k_per_pixel = 1.43e-3; // um^-1 per pixel in momentum regions
    double jitter_sigma_ns = 7.0;
    double efficiency_signal = 1.0;
    double efficiency_idler = 1.0;

    // region(plane, arm); defaults to the four quadrants.
    std::array<std::array<Region, 2>, 2> regions = default_quadrants();

    static std::array<std::array<Region, 2>, 2> default_quadrants();

    void validate() const;

    const Region& region(Plane p, Arm a) const {
        return regions[static_cast<size_t>(p)][static_cast<size_t>(a)];
    }
    double scale(Plane p) const { return p == Plane::Position ? pitch_um : k_per_pixel; }

    double efficiency(Arm a) const {
        return a == Arm::Idler ? efficiency_idler : efficiency_signal;
    }

    // Physical coordinate of a pixel centre (region-local, axis at centre).
    Vec2 pixel_center(Plane p, Arm a, uint16_t px, uint16_t py) const;

    // Inverse of pixel_center up to quantization; nullopt when the
    // coordinate falls outside the region.
    std::optional<std::pair<uint16_t, uint16_t>> to_pixel(Plane p, Arm a, const Vec2& coord) const;
};

struct DetectStats {
    uint64_t generated = 0;
    uint64_t detected = 0;
    uint64_t lost_efficiency = 0;
    uint64_t clipped = 0; // coordinate fell outside the region
};

// Bernoulli efficiency thinning, pixel quantization, Gaussian time jitter
// rounded to integer ns. Returns nothing for lost photons.
std::optional<PhotonEvent> detect(Plane plane, Arm arm, const Vec2& coord, double t_ns,
                                  int64_t truth_tag, const CameraParams& cam, Rng& rng,
                                  DetectStats& stats);

std::optional<PhotonEvent> detect(const source::TruthPhoton& ph, const CameraParams& cam, Rng& rng,
                                  DetectStats& stats);

enum class BackgroundKind { FlatDark, DisruptiveBeam };

struct BackgroundSpec {
    BackgroundKind kind = BackgroundKind::FlatDark;
    // FlatDark: photons per second per pixel. DisruptiveBeam: photons per
    // second total in each listed region.
    double rate_hz = 0.0;
    std::vector<std::pair<Plane, Arm>> targets;
    // DisruptiveBeam spatial profile, region-local physical units.
    Vec2 beam_center;
    double beam_sigma = 80.0;
    // Per-target centre override (e.g. different spot per arm).
    std::vector<Vec2> target_centers;
};

// Poisson background stream over [t0, t0 + duration), sorted by timestamp.
std::vector<PhotonEvent> inject_background(const BackgroundSpec& spec, const CameraParams& cam,
                                           double duration_s, double t0_ns, Rng& rng);

// Stable k-way merge of timestamp-sorted streams; ties broken by
// (plane, arm, px, py). Throws if an input stream is unsorted.
std::vector<PhotonEvent> merge_streams(std::vector<std::vector<PhotonEvent>> streams);

void sort_events(std::vector<PhotonEvent>& events);

} // namespace qcbt::camera
