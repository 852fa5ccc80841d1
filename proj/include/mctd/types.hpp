#pragma once

#include <cmath>
#include <vector>

namespace mctd {

// Planar position in maze cell units. Cell (i, j) spans [i, i+1) x [j, j+1)
// and has its center at (i + 0.5, j + 0.5).
struct State {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const State& a, const State& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double squared_distance(const State& a, const State& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// A trajectory is an ordered state sequence; index 0 is the current state.
using Trajectory = std::vector<State>;

// One block of a trajectory, denoised as a unit. noise_level 0 means fully
// denoised; the surrogate sampler always returns 0.
struct Subplan {
    std::vector<State> states;
    double noise_level = 0.0;
};

// Discrete control mode for one subplan: the weight of the goal-distance
// guidance applied while sampling it.
struct MetaAction {
    double guidance_scale = 0.0;
};

inline bool operator==(const MetaAction& a, const MetaAction& b) {
    return a.guidance_scale == b.guidance_scale;
}

// Per-subplan meta-actions along a tree path.
using GuidanceSchedule = std::vector<MetaAction>;

}  // namespace mctd
