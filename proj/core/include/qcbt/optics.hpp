#pragma once

#include <span>
#include <vector>

namespace qcbt::optics {

// One transverse axis: position in um, angle in rad.
struct Ray {
    double r = 0.0;
    double theta = 0.0;
};

// 2x2 ray-transfer matrix. b is um/rad, c is rad/um; lossless elements
// have unit determinant.
struct AbcdMatrix {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }

    Ray apply(const Ray& in) const { return {a * in.r + b * in.theta, c * in.r + d * in.theta}; }

    // Standard matrix product: (*this) * rhs, i.e. rhs acts first.
    AbcdMatrix operator*(const AbcdMatrix& rhs) const {
        return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
    }
};

AbcdMatrix mat_propagation(double distance_um);
AbcdMatrix mat_thin_lens(double focal_um);

// Right-to-left product: the last listed element acts on the ray first
// (optical convention; a chain reads in propagation order when listed
// from output to input).
AbcdMatrix compose(std::span<const AbcdMatrix> elements);
AbcdMatrix compose(std::initializer_list<AbcdMatrix> elements);

struct TrajectoryChange {
    double delta_r = 0.0;     // um
    double delta_theta = 0.0; // rad
};

// Output-ray change of the lens-channel-lens relay (focal length f, both
// outer propagations f) when the nominal channel prop(d) is replaced by
// `channel`. Computed by composing both chains and subtracting; the
// closed form quoted in the literature for the angular component fails
// the identity-channel check, so it is not used here.
TrajectoryChange trajectory_change(const AbcdMatrix& channel, double f_um, double d_um,
                                   const Ray& input);

// Two overlapped classical beams, one per "plane"; n photons per beam per plane.
struct OverlapConfig {
    double sigma_x1 = 0.0, sigma_x2 = 0.0; // um
    double sigma_k1 = 0.0, sigma_k2 = 0.0; // um^-1
    long long n = 1;
};

// Uncertainty product for a trajectory change measured with two overlapped
// beams: (2/n) * sqrt(sx1^2 sk1^2 + sx2^2 sk2^2 + sx1^2 sk2^2 + sx2^2 sk1^2).
// Bounded below by 2/n for any pair of physical beams.
double overlap_uncertainty_product(const OverlapConfig& cfg);

} // namespace qcbt::optics
