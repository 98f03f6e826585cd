#pragma once

#include <functional>
#include <vector>

#include "lefschetz/polycore.hpp"

namespace lefschetz {

constexpr int kLoopPolygonVertices = 64;
constexpr int kNewtonIterations = 3;

struct Loop {
  cplx base;
  std::vector<cplx> waypoints;  // closed polyline, first == last == base
};

struct FiberPermutation {
  std::vector<int> perm;  // point k is carried to point perm[k]
  double maxStepResidual = 0;
};

struct TrackOptions {
  double initialStep = 1.0 / 16;
  double minStep = 1e-13;
  double guardFactor = 0.1;
  // Optional factorization poly = stages.back() o ... o stages.front(), evaluated stage by stage.
  std::vector<UniPoly> stages;
  // Called with (t, root index, x) after every accepted step.
  std::function<void(cplx, int, cplx)> recorder;
};

struct TrackResult {
  std::vector<cplx> roots;
  double maxStepResidual = 0;
  long steps = 0;
};

// Height of the detour point b + i*sigma*H used by all distinguished paths.
double detourHeight(cplx base, const std::vector<cplx>& criticalValues);

// b -> b + i*sigma*H -> value, truncated at distance `stop` from the value.
std::vector<cplx> distinguished_path(cplx base, cplx value, int sigma, double height, double stop);

Loop simple_loop(cplx criticalValue, cplx base, double radius,
                 const std::vector<cplx>& criticalValues, int sigma = 1, double clearance = -1);

// Continue every start root of poly(x) = t along the polyline.
TrackResult track_path(const UniPoly& poly, const std::vector<cplx>& waypoints,
                       std::vector<cplx> start, const TrackOptions& options = {});

FiberPermutation track(const UniPoly& poly, const Loop& loop, const std::vector<cplx>& fiber,
                       const TrackOptions& options = {});

// Winding number of a closed polyline around a point.
int winding_number(const std::vector<cplx>& polyline, cplx point);

}  // namespace lefschetz
