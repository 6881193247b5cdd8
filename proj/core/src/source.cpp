#include "qcbt/source.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcbt::source {

void CrystalParams::validate() const {
    if (length_mm <= 0 || pump_wavelength_nm <= 0 || pump_sigma_mm <= 0 || magnification <= 0)
        throw std::invalid_argument("CrystalParams: all parameters must be positive");
    if (alpha <= 0 || alpha > 1)
        throw std::invalid_argument("CrystalParams: alpha must be in (0, 1]");
}

CorrelationWidths correlation_widths_from_crystal(const CrystalParams& c) {
    c.validate();
    const double length_um = c.length_mm * 1e3;
    const double lambda_um = c.pump_wavelength_nm * 1e-3;
    const double sigma_p_um = c.pump_sigma_mm * 1e3;
    const double delta_r_crystal = std::sqrt(2.0 * c.alpha * length_um * lambda_um / std::numbers::pi);
    const double delta_k_crystal = 1.0 / (2.0 * sigma_p_um);
    return {delta_r_crystal * c.magnification, delta_k_crystal / c.magnification};
}

Displacement mirror_to_displacement(double stage_um, const MirrorGains& g) {
    if (!std::isfinite(stage_um))
        throw std::invalid_argument("mirror_to_displacement: stage position must be finite");
    // The stage translates the beam horizontally: x and u only.
    return {g.gx_um_per_um * stage_um, 0.0, g.gu_per_um_per_um * stage_um, 0.0};
}

void SpdcSourceParams::validate() const {
    if (delta_r_um <= 0 || delta_k_per_um <= 0 || sigma_r_um <= 0 || sigma_k_per_um <= 0)
        throw std::invalid_argument("SpdcSourceParams: widths must be positive");
    if (pair_rate_hz <= 0)
        throw std::invalid_argument("SpdcSourceParams: pair_rate must be positive");
    if (delta_r_um >= 2.0 * sigma_r_um)
        throw std::invalid_argument("SpdcSourceParams: require delta_r < 2*sigma_r");
    if (delta_k_per_um >= 2.0 * sigma_k_per_um)
        throw std::invalid_argument("SpdcSourceParams: require delta_k < 2*sigma_k");
}

void LaserSourceParams::validate() const {
    if (sigma_r_um <= 0 || sigma_k_per_um <= 0 || photon_rate_hz <= 0)
        throw std::invalid_argument("LaserSourceParams: parameters must be positive");
    if (sigma_r_um * sigma_k_per_um < 0.5)
        throw std::invalid_argument("LaserSourceParams: sigma_r*sigma_k must be >= 1/2");
}

namespace {

// One axis of a position-plane pair: difference ~ N(shift, delta), sum ~
// N(2c + shift, wide); photon coordinates are half-sum +- half-difference.
inline void correlated_axis(double center, double narrow_width, double wide_width, double shift,
                            bool narrow_is_difference, Rng& rng, double& sig, double& idl) {
    double diff, sum;
    if (narrow_is_difference) {
        diff = rng.gaussian(shift, narrow_width);
        sum = rng.gaussian(2.0 * center + shift, wide_width);
    } else {
        sum = rng.gaussian(2.0 * center + shift, narrow_width);
        diff = rng.gaussian(shift, wide_width);
    }
    sig = 0.5 * (sum + diff);
    idl = 0.5 * (sum - diff);
}

} // namespace

PairCoord sample_position_pair(const SpdcSourceParams& p, const Displacement& disp, Rng& rng) {
    const double wide = std::sqrt(4.0 * p.sigma_r_um * p.sigma_r_um - p.delta_r_um * p.delta_r_um);
    PairCoord out;
    correlated_axis(p.center_r.x, p.delta_r_um, wide, disp.dx_um, true, rng, out.signal.x,
                    out.idler.x);
    correlated_axis(p.center_r.y, p.delta_r_um, wide, disp.dy_um, true, rng, out.signal.y,
                    out.idler.y);
    return out;
}

PairCoord sample_momentum_pair(const SpdcSourceParams& p, const Displacement& disp, Rng& rng) {
    const double wide =
        std::sqrt(4.0 * p.sigma_k_per_um * p.sigma_k_per_um - p.delta_k_per_um * p.delta_k_per_um);
    PairCoord out;
    correlated_axis(p.center_k.x, p.delta_k_per_um, wide, disp.du_per_um, false, rng, out.signal.x,
                    out.idler.x);
    correlated_axis(p.center_k.y, p.delta_k_per_um, wide, disp.dv_per_um, false, rng, out.signal.y,
                    out.idler.y);
    return out;
}

BiphotonPair sample_biphoton(const SpdcSourceParams& p, const Displacement& disp, double t_ns,
                             Rng& rng) {
    BiphotonPair pair;
    pair.t_ns = t_ns;
    pair.signal_plane = rng.bernoulli(0.5) ? Plane::Position : Plane::Momentum;
    pair.idler_plane = rng.bernoulli(0.5) ? Plane::Position : Plane::Momentum;

    if (pair.signal_plane == pair.idler_plane) {
        const PairCoord pc = pair.signal_plane == Plane::Position
                                 ? sample_position_pair(p, disp, rng)
                                 : sample_momentum_pair(p, disp, rng);
        pair.signal_coord = pc.signal;
        pair.idler_coord = pc.idler;
        return pair;
    }

    // Mixed planes: these never form same-plane coincidences, so each photon
    // draws from its singles marginal.
    auto marginal = [&](Plane plane, bool is_signal) {
        Vec2 c;
        if (plane == Plane::Position) {
            c.x = rng.gaussian(p.center_r.x, p.sigma_r_um);
            c.y = rng.gaussian(p.center_r.y, p.sigma_r_um);
            if (is_signal) {
                c.x += disp.dx_um;
                c.y += disp.dy_um;
            }
        } else {
            c.x = rng.gaussian(p.center_k.x, p.sigma_k_per_um);
            c.y = rng.gaussian(p.center_k.y, p.sigma_k_per_um);
            if (is_signal) {
                c.x += disp.du_per_um;
                c.y += disp.dv_per_um;
            }
        }
        return c;
    };
    pair.signal_coord = marginal(pair.signal_plane, true);
    pair.idler_coord = marginal(pair.idler_plane, false);
    return pair;
}

TruthPhoton sample_laser_photon(const LaserSourceParams& p, const Displacement& disp, double t_ns,
                                Rng& rng) {
    TruthPhoton ph;
    ph.t_ns = t_ns;
    ph.arm = Arm::Signal;
    ph.plane = rng.bernoulli(0.5) ? Plane::Position : Plane::Momentum;
    if (ph.plane == Plane::Position) {
        ph.coord.x = rng.gaussian(p.center_r.x + disp.dx_um, p.sigma_r_um);
        ph.coord.y = rng.gaussian(p.center_r.y + disp.dy_um, p.sigma_r_um);
    } else {
        ph.coord.x = rng.gaussian(p.center_k.x + disp.du_per_um, p.sigma_k_per_um);
        ph.coord.y = rng.gaussian(p.center_k.y + disp.dv_per_um, p.sigma_k_per_um);
    }
    return ph;
}

} // namespace qcbt::source
