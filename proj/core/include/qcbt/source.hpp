#pragma once

#include "qcbt/event.hpp"
#include "qcbt/random.hpp"
#include "qcbt/vec2.hpp"

namespace qcbt::source {

// Nonlinear-crystal and pump parameters used to predict correlation widths.
struct CrystalParams {
    double length_mm = 1.0;
    double pump_wavelength_nm = 405.0;
    double pump_sigma_mm = 0.12;
    double alpha = 0.455; // Gaussian approximation of the phase-matching sinc
    double magnification = 5.0;

    void validate() const;
};

struct CorrelationWidths {
    double delta_r_um = 0.0;     // position-difference RMS width at the camera
    double delta_k_per_um = 0.0; // momentum-sum RMS width at the camera
};

// delta_k ~ 1/(2 sigma_p), delta_r ~ sqrt(2 alpha L lambda_p / pi), scaled
// from the crystal plane to the camera by the imaging magnification.
CorrelationWidths correlation_widths_from_crystal(const CrystalParams& c);

// Beam displacement applied to the signal arm only, in the units of the
// plane the signal photon is detected in.
struct Displacement {
    double dx_um = 0.0;
    double dy_um = 0.0;
    double du_per_um = 0.0;
    double dv_per_um = 0.0;
};

// Mirror-stage geometry: stage translation (um) to beam displacement.
struct MirrorGains {
    double gx_um_per_um = 1.0;      // position plane
    double gu_per_um_per_um = 1e-4; // momentum plane
};

Displacement mirror_to_displacement(double stage_um, const MirrorGains& g);

// Widths are the RMS widths of the measured difference/sum histograms.
struct SpdcSourceParams {
    double delta_r_um = 42.0;
    double delta_k_per_um = 1.06e-3;
    double sigma_r_um = 52.7;      // singles marginal width, position plane
    double sigma_k_per_um = 0.02;  // singles marginal width, momentum plane
    double pair_rate_hz = 1e5;
    Vec2 center_r;                 // nominal centroid, position plane (um)
    Vec2 center_k;                 // nominal centroid, momentum plane (um^-1)

    void validate() const;
    bool hul_beating() const { return delta_r_um * delta_k_per_um < 0.5; }
};

struct LaserSourceParams {
    double sigma_r_um = 52.7;
    double sigma_k_per_um = 1.41e-2;
    double photon_rate_hz = 1e5;
    Vec2 center_r;
    Vec2 center_k;

    void validate() const;
};

// Ground-truth pair before detection. Coordinates are in the units of the
// plane each photon was assigned to.
struct BiphotonPair {
    double t_ns = 0.0;
    Plane signal_plane = Plane::Position;
    Plane idler_plane = Plane::Position;
    Vec2 signal_coord;
    Vec2 idler_coord;
};

struct TruthPhoton {
    double t_ns = 0.0;
    Plane plane = Plane::Position;
    Arm arm = Arm::Signal;
    Vec2 coord;
};

// Signal/idler coordinates of one same-plane pair.
struct PairCoord {
    Vec2 signal;
    Vec2 idler;
};

// Same-plane pair samplers (both photons conditioned on the given plane).
// These carry the double-Gaussian construction: position pairs draw the
// difference at width delta_r and the sum at sqrt(4 sigma_r^2 - delta_r^2);
// momentum pairs draw the sum at width delta_k and the difference at
// sqrt(4 sigma_k^2 - delta_k^2). Marginals come out at sigma by construction.
PairCoord sample_position_pair(const SpdcSourceParams& p, const Displacement& disp, Rng& rng);
PairCoord sample_momentum_pair(const SpdcSourceParams& p, const Displacement& disp, Rng& rng);

// Full biphoton draw: independent fair-coin plane assignment per photon,
// mixed-plane pairs sample independent marginals. Emission time is advanced
// by the caller (Poisson clock).
BiphotonPair sample_biphoton(const SpdcSourceParams& p, const Displacement& disp, double t_ns,
                             Rng& rng);

TruthPhoton sample_laser_photon(const LaserSourceParams& p, const Displacement& disp, double t_ns,
                                Rng& rng);

// Poisson arrival clock; next() returns strictly increasing times in ns.
class PoissonClock {
  public:
    explicit PoissonClock(double rate_hz, double t0_ns = 0.0) : rate_hz_(rate_hz), t_ns_(t0_ns) {}

    double next(Rng& rng) {
        t_ns_ += rng.exponential(rate_hz_) * 1e9;
        return t_ns_;
    }
    double now_ns() const { return t_ns_; }

  private:
    double rate_hz_;
    double t_ns_;
};

} // namespace qcbt::source
