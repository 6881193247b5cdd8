#include "qcbt/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace qcbt::optics {

AbcdMatrix mat_propagation(double distance_um) {
    if (!std::isfinite(distance_um))
        throw std::invalid_argument("mat_propagation: distance must be finite");
    return {1.0, distance_um, 0.0, 1.0};
}

AbcdMatrix mat_thin_lens(double focal_um) {
    if (focal_um == 0.0 || !std::isfinite(focal_um))
        throw std::invalid_argument("mat_thin_lens: focal length must be finite and nonzero");
    return {1.0, 0.0, -1.0 / focal_um, 1.0};
}

AbcdMatrix compose(std::span<const AbcdMatrix> elements) {
    if (elements.empty())
        throw std::invalid_argument("compose: element list is empty");
    AbcdMatrix acc = elements[0];
    for (size_t i = 1; i < elements.size(); ++i)
        acc = acc * elements[i];
    return acc;
}

AbcdMatrix compose(std::initializer_list<AbcdMatrix> elements) {
    return compose(std::span<const AbcdMatrix>(elements.begin(), elements.size()));
}

TrajectoryChange trajectory_change(const AbcdMatrix& channel, double f_um, double d_um,
                                   const Ray& input) {
    if (f_um == 0.0 || !std::isfinite(f_um))
        throw std::invalid_argument("trajectory_change: focal length must be finite and nonzero");

    const AbcdMatrix prop_f = mat_propagation(f_um);
    const AbcdMatrix lens = mat_thin_lens(f_um);

    const AbcdMatrix nominal = compose({prop_f, lens, mat_propagation(d_um), lens, prop_f});
    const AbcdMatrix perturbed = compose({prop_f, lens, channel, lens, prop_f});

    const Ray out_nominal = nominal.apply(input);
    const Ray out_perturbed = perturbed.apply(input);
    return {out_perturbed.r - out_nominal.r, out_perturbed.theta - out_nominal.theta};
}

double overlap_uncertainty_product(const OverlapConfig& cfg) {
    if (cfg.sigma_x1 <= 0 || cfg.sigma_x2 <= 0 || cfg.sigma_k1 <= 0 || cfg.sigma_k2 <= 0)
        throw std::invalid_argument("overlap_uncertainty_product: widths must be positive");
    if (cfg.n < 1)
        throw std::invalid_argument("overlap_uncertainty_product: n must be >= 1");
    if (cfg.sigma_x1 * cfg.sigma_k1 < 0.5 || cfg.sigma_x2 * cfg.sigma_k2 < 0.5)
        throw std::invalid_argument(
            "overlap_uncertainty_product: each beam must satisfy sigma_x*sigma_k >= 1/2");

    const double x1 = cfg.sigma_x1 * cfg.sigma_x1;
    const double x2 = cfg.sigma_x2 * cfg.sigma_x2;
    const double k1 = cfg.sigma_k1 * cfg.sigma_k1;
    const double k2 = cfg.sigma_k2 * cfg.sigma_k2;
    return 2.0 / static_cast<double>(cfg.n) * std::sqrt(x1 * k1 + x2 * k2 + x1 * k2 + x2 * k1);
}

} // namespace qcbt::optics
