#include "lefschetz/oracle0.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

double segmentDistance(cplx a, cplx b, cplx p) {
  cplx d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0) return std::abs(p - a);
  double s = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(a + s * d - p);
}

double minPairDistance(const std::vector<cplx>& xs) {
  double m = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) m = std::min(m, std::abs(xs[i] - xs[j]));
  return m;
}

struct Stage {
  std::vector<cplx> c, dc;
  explicit Stage(const UniPoly& p) {
    for (const auto& v : p.coeffs()) c.emplace_back(v.get_d(), 0.0);
    for (size_t k = 1; k < c.size(); ++k) dc.push_back(c[k] * static_cast<double>(k));
  }
  cplx value(cplx x) const {
    cplx acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  cplx deriv(cplx x) const {
    cplx acc = 0;
    for (auto it = dc.rbegin(); it != dc.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  double scale(cplx x) const {
    double s = 0, pw = 1;
    for (const auto& a : c) {
      s += std::abs(a) * pw;
      pw *= std::abs(x);
    }
    return s;
  }
};

struct Evaluator {
  std::vector<Stage> stages;
  Evaluator(const UniPoly& p, const std::vector<UniPoly>& factors) {
    if (factors.empty())
      stages.emplace_back(p);
    else
      for (const auto& f : factors) stages.emplace_back(f);
  }
  cplx value(cplx x, cplx t) const {
    for (const auto& s : stages) x = s.value(x);
    return x - t;
  }
  cplx deriv(cplx x) const {
    cplx d = 1;
    for (const auto& s : stages) {
      d *= s.deriv(x);
      x = s.value(x);
    }
    return d;
  }
  // Rounding error bound of value(), propagated through the stages.
  double scale(cplx x, cplx t) const {
    double err = 0;
    for (const auto& s : stages) {
      err = s.scale(x) + std::abs(s.deriv(x)) * err;
      x = s.value(x);
    }
    return err + std::abs(t);
  }
};

}  // namespace

double detourHeight(cplx base, const std::vector<cplx>& criticalValues) {
  double m = 1.0;
  for (const auto& v : criticalValues) m = std::max(m, std::abs(v - base));
  return 2.0 * m;
}

std::vector<cplx> distinguished_path(cplx base, cplx value, int sigma, double height, double stop) {
  cplx detour = base + cplx(0, sigma * height);
  cplx u = (detour - value) / std::abs(detour - value);
  return {base, detour, value + stop * u};
}

Loop simple_loop(cplx criticalValue, cplx base, double radius, const std::vector<cplx>& criticalValues,
                 int sigma, double clearance) {
  if (clearance < 0) clearance = radius;
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& v : criticalValues)
    if (std::abs(v - criticalValue) > 0) nearest = std::min(nearest, std::abs(v - criticalValue));
  if (!(radius > 0) || radius >= nearest / 2)
    throw Error(ErrorKind::ClearanceViolation, "loop radius exceeds half the gap to the next critical value",
                {{"radius", radius}, {"gap", nearest}});
  double H = detourHeight(base, criticalValues);
  auto path = distinguished_path(base, criticalValue, sigma, H, radius);
  Loop loop;
  loop.base = base;
  loop.waypoints = path;
  cplx u = (path.back() - criticalValue) / radius;
  double theta0 = std::arg(u);
  for (int k = 1; k <= kLoopPolygonVertices; ++k) {
    double th = theta0 + 2 * std::numbers::pi * k / kLoopPolygonVertices;
    loop.waypoints.push_back(criticalValue + std::polar(radius, th));
  }
  loop.waypoints.back() = path.back();
  for (auto it = path.rbegin() + 1; it != path.rend(); ++it) loop.waypoints.push_back(*it);

  for (const auto& v : criticalValues) {
    if (std::abs(v - criticalValue) == 0) continue;
    for (size_t k = 0; k + 1 < loop.waypoints.size(); ++k)
      if (segmentDistance(loop.waypoints[k], loop.waypoints[k + 1], v) <= clearance)
        throw Error(ErrorKind::ClearanceViolation, "loop passes too close to another critical value",
                    {{"value", {v.real(), v.imag()}}, {"clearance", clearance}});
  }
  return loop;
}

int winding_number(const std::vector<cplx>& polyline, cplx point) {
  double total = 0;
  for (size_t k = 0; k + 1 < polyline.size(); ++k)
    total += std::arg((polyline[k + 1] - point) / (polyline[k] - point));
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

TrackResult track_path(const UniPoly& poly, const std::vector<cplx>& waypoints, std::vector<cplx> x,
                       const TrackOptions& options) {
  Evaluator ev(poly, options.stages);
  TrackResult result;
  const int n = static_cast<int>(x.size());
  const double guard = options.guardFactor * minPairDistance(x);
  auto record = [&](cplx t) {
    if (!options.recorder) return;
    for (int k = 0; k < n; ++k) options.recorder(t, k, x[k]);
  };
  if (!waypoints.empty()) record(waypoints.front());
  for (size_t w = 0; w + 1 < waypoints.size(); ++w) {
    cplx t0 = waypoints[w], t1 = waypoints[w + 1];
    double s = 0, h = options.initialStep;
    while (s < 1) {
      double hs = std::min(h, 1 - s);
      cplx ta = t0 + s * (t1 - t0), tb = t0 + (s + hs) * (t1 - t0);
      std::vector<double> room(n, std::numeric_limits<double>::infinity());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) room[i] = std::min(room[i], std::abs(x[i] - x[j]));
      std::vector<cplx> y(n);
      bool ok = true;
      double stepResidual = 0;
      for (int k = 0; k < n && ok; ++k) {
        cplx d = ev.deriv(x[k]);
        if (d == cplx(0)) {
          ok = false;
          break;
        }
        cplx z = x[k] + (tb - ta) / d;
        double last = 0;
        for (int it = 0; it < kNewtonIterations; ++it) {
          cplx dz = ev.deriv(z);
          if (dz == cplx(0)) {
            ok = false;
            break;
          }
          cplx delta = ev.value(z, tb) / dz;
          z -= delta;
          last = std::abs(delta);
        }
        double res = std::abs(ev.value(z, tb)) / ev.scale(z, tb);
        if (!ok || last > 0.02 * room[k] || res > 1e-11 ||
            std::abs(z - x[k]) > 0.3 * room[k])
          ok = false;
        stepResidual = std::max(stepResidual, res);
        y[k] = z;
      }
      if (ok && minPairDistance(y) < 1e-12 * std::max(1.0, std::abs(y[0])))
        throw Error(ErrorKind::RootCollision, "two tracked roots collided",
                    {{"t", {tb.real(), tb.imag()}}});
      if (!ok) {
        h /= 2;
        if (h < options.minStep)
          throw Error(ErrorKind::TrackingLoss, "continuation step underflow",
                      {{"t", {ta.real(), ta.imag()}}});
        continue;
      }
      x = std::move(y);
      s += hs;
      ++result.steps;
      result.maxStepResidual = std::max(result.maxStepResidual, stepResidual);
      record(tb);
      if (minPairDistance(x) < guard)
        h = hs;
      else
        h = std::min(hs * 1.5, 0.25);
    }
  }
  result.roots = std::move(x);
  return result;
}

FiberPermutation track(const UniPoly& poly, const Loop& loop, const std::vector<cplx>& fiber,
                       const TrackOptions& options) {
  auto res = track_path(poly, loop.waypoints, fiber, options);
  FiberPermutation fp;
  fp.maxStepResidual = res.maxStepResidual;
  const int n = static_cast<int>(fiber.size());
  double tol = 1e-3 * minPairDistance(fiber);
  std::vector<bool> used(n, false);
  for (int k = 0; k < n; ++k) {
    int best = -1;
    double bestDist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double d = std::abs(res.roots[k] - fiber[j]);
      if (d < bestDist) bestDist = d, best = j;
    }
    if (bestDist > tol || used[best])
      throw Error(ErrorKind::TrackingLoss, "tracked root did not return to the base fiber",
                  {{"root", k}, {"distance", bestDist}});
    used[best] = true;
    fp.perm.push_back(best);
  }
  return fp;
}

}  // namespace lefschetz
