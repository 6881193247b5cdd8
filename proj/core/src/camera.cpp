#include "qcbt/camera.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcbt::camera {

std::array<std::array<Region, 2>, 2> CameraParams::default_quadrants() {
    // position/signal | position/idler on the top half, momentum below.
    std::array<std::array<Region, 2>, 2> r{};
    r[0][0] = {0, 0, 128, 128};
    r[0][1] = {128, 0, 128, 128};
    r[1][0] = {0, 128, 128, 128};
    r[1][1] = {128, 128, 128, 128};
    return r;
}

void CameraParams::validate() const {
    if (pitch_um <= 0 || k_per_pixel <= 0)
        throw std::invalid_argument("CameraParams: pixel scales must be positive");
    if (jitter_sigma_ns < 0)
        throw std::invalid_argument("CameraParams: jitter must be non-negative");
    if (efficiency_signal < 0 || efficiency_signal > 1 || efficiency_idler < 0 ||
        efficiency_idler > 1)
        throw std::invalid_argument("CameraParams: efficiencies must be in [0, 1]");
    for (int p = 0; p < 2; ++p)
        for (int a = 0; a < 2; ++a) {
            const Region& r = regions[p][a];
            if (r.w == 0 || r.h == 0 || r.x0 + r.w > pixels_x || r.y0 + r.h > pixels_y)
                throw std::invalid_argument("CameraParams: region outside sensor");
        }
    // regions must be pairwise disjoint
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const Region& a = regions[i / 2][i % 2];
            const Region& b = regions[j / 2][j % 2];
            const bool overlap = a.x0 < b.x0 + b.w && b.x0 < a.x0 + a.w && a.y0 < b.y0 + b.h &&
                                 b.y0 < a.y0 + a.h;
            if (overlap)
                throw std::invalid_argument("CameraParams: regions overlap");
        }
}

Vec2 CameraParams::pixel_center(Plane p, Arm a, uint16_t px, uint16_t py) const {
    const Region& reg = region(p, a);
    const double s = scale(p);
    return {(static_cast<double>(px) - reg.x0 - reg.w / 2.0 + 0.5) * s,
            (static_cast<double>(py) - reg.y0 - reg.h / 2.0 + 0.5) * s};
}

std::optional<std::pair<uint16_t, uint16_t>> CameraParams::to_pixel(Plane p, Arm a,
                                                                    const Vec2& coord) const {
    const Region& reg = region(p, a);
    const double s = scale(p);
    const double fx = std::floor(coord.x / s + reg.w / 2.0);
    const double fy = std::floor(coord.y / s + reg.h / 2.0);
    if (fx < 0 || fx >= reg.w || fy < 0 || fy >= reg.h)
        return std::nullopt;
    return std::make_pair(static_cast<uint16_t>(reg.x0 + fx), static_cast<uint16_t>(reg.y0 + fy));
}

std::optional<PhotonEvent> detect(Plane plane, Arm arm, const Vec2& coord, double t_ns,
                                  int64_t truth_tag, const CameraParams& cam, Rng& rng,
                                  DetectStats& stats) {
    ++stats.generated;
    if (!rng.bernoulli(cam.efficiency(arm))) {
        ++stats.lost_efficiency;
        return std::nullopt;
    }
    const auto pix = cam.to_pixel(plane, arm, coord);
    if (!pix) {
        ++stats.clipped;
        return std::nullopt;
    }
    double t = t_ns;
    if (cam.jitter_sigma_ns > 0)
        t += rng.gaussian(0.0, cam.jitter_sigma_ns);
    t = std::max(0.0, std::round(t));

    PhotonEvent ev;
    ev.t_ns = static_cast<uint64_t>(t);
    ev.px = pix->first;
    ev.py = pix->second;
    ev.plane = plane;
    ev.arm = arm;
    ev.truth_tag = truth_tag;
    ++stats.detected;
    return ev;
}

std::optional<PhotonEvent> detect(const source::TruthPhoton& ph, const CameraParams& cam, Rng& rng,
                                  DetectStats& stats) {
    return detect(ph.plane, ph.arm, ph.coord, ph.t_ns, kTruthNone, cam, rng, stats);
}

namespace {

std::vector<PhotonEvent> flat_dark_stream(const BackgroundSpec& spec, const CameraParams& cam,
                                          double duration_s, double t0_ns, Rng& rng) {
    std::vector<PhotonEvent> out;
    for (size_t ti = 0; ti < spec.targets.size(); ++ti) {
        const auto [plane, arm] = spec.targets[ti];
        const Region& reg = cam.region(plane, arm);
        const double total_rate = spec.rate_hz * reg.w * reg.h;
        if (total_rate <= 0)
            continue;
        source::PoissonClock clock(total_rate, t0_ns);
        const double t_end = t0_ns + duration_s * 1e9;
        for (double t = clock.next(rng); t < t_end; t = clock.next(rng)) {
            PhotonEvent ev;
            ev.t_ns = static_cast<uint64_t>(std::round(t));
            ev.px = static_cast<uint16_t>(reg.x0 + std::min<uint32_t>(
                        static_cast<uint32_t>(rng.uniform01() * reg.w), reg.w - 1));
            ev.py = static_cast<uint16_t>(reg.y0 + std::min<uint32_t>(
                        static_cast<uint32_t>(rng.uniform01() * reg.h), reg.h - 1));
            ev.plane = plane;
            ev.arm = arm;
            ev.truth_tag = kTruthBackground;
            out.push_back(ev);
        }
    }
    return out;
}

std::vector<PhotonEvent> disruptive_stream(const BackgroundSpec& spec, const CameraParams& cam,
                                           double duration_s, double t0_ns, Rng& rng) {
    std::vector<PhotonEvent> out;
    for (size_t ti = 0; ti < spec.targets.size(); ++ti) {
        const auto [plane, arm] = spec.targets[ti];
        const Vec2 center = ti < spec.target_centers.size() ? spec.target_centers[ti]
                                                            : spec.beam_center;
        if (spec.rate_hz <= 0)
            continue;
        source::PoissonClock clock(spec.rate_hz, t0_ns);
        const double t_end = t0_ns + duration_s * 1e9;
        for (double t = clock.next(rng); t < t_end; t = clock.next(rng)) {
            Vec2 c{rng.gaussian(center.x, spec.beam_sigma), rng.gaussian(center.y, spec.beam_sigma)};
            const auto pix = cam.to_pixel(plane, arm, c);
            if (!pix)
                continue; // spot tail outside the region
            PhotonEvent ev;
            ev.t_ns = static_cast<uint64_t>(std::round(t));
            ev.px = pix->first;
            ev.py = pix->second;
            ev.plane = plane;
            ev.arm = arm;
            ev.truth_tag = kTruthBackground;
            out.push_back(ev);
        }
    }
    return out;
}

} // namespace

std::vector<PhotonEvent> inject_background(const BackgroundSpec& spec, const CameraParams& cam,
                                           double duration_s, double t0_ns, Rng& rng) {
    if (duration_s <= 0)
        throw std::invalid_argument("inject_background: duration must be positive");
    if (spec.rate_hz < 0)
        throw std::invalid_argument("inject_background: rate must be non-negative");
    std::vector<PhotonEvent> out = spec.kind == BackgroundKind::FlatDark
                                       ? flat_dark_stream(spec, cam, duration_s, t0_ns, rng)
                                       : disruptive_stream(spec, cam, duration_s, t0_ns, rng);
    sort_events(out);
    return out;
}

namespace {

inline bool event_less(const PhotonEvent& a, const PhotonEvent& b) {
    if (a.t_ns != b.t_ns)
        return a.t_ns < b.t_ns;
    if (a.plane != b.plane)
        return a.plane < b.plane;
    if (a.arm != b.arm)
        return a.arm < b.arm;
    if (a.px != b.px)
        return a.px < b.px;
    return a.py < b.py;
}

} // namespace

void sort_events(std::vector<PhotonEvent>& events) {
    std::stable_sort(events.begin(), events.end(), event_less);
}

std::vector<PhotonEvent> merge_streams(std::vector<std::vector<PhotonEvent>> streams) {
    for (size_t s = 0; s < streams.size(); ++s)
        for (size_t i = 1; i < streams[s].size(); ++i)
            if (streams[s][i].t_ns < streams[s][i - 1].t_ns)
                throw std::invalid_argument("merge_streams: stream " + std::to_string(s) +
                                            " unsorted at index " + std::to_string(i));

    std::vector<PhotonEvent> out;
    size_t total = 0;
    for (const auto& s : streams)
        total += s.size();
    out.reserve(total);

    std::vector<size_t> cursor(streams.size(), 0);
    while (out.size() < total) {
        size_t best = streams.size();
        for (size_t s = 0; s < streams.size(); ++s) {
            if (cursor[s] >= streams[s].size())
                continue;
            if (best == streams.size() || event_less(streams[s][cursor[s]], streams[best][cursor[best]]))
                best = s;
        }
        out.push_back(streams[best][cursor[best]++]);
    }
    return out;
}

} // namespace qcbt::camera
