#include "sphedra/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <thread>
#include <utility>

#include "sphedra/errors.hpp"

namespace sphedra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double kFdStep = 1e-6;       // central-difference half step
constexpr double kInitialStep = 0.1;   // rad, in the free-parameter chart
constexpr double kStepFloor = 1e-10;
constexpr int kMaxIterations = 10000;
constexpr double kGradientTol = 1e-7;  // multi-start default
// Restarts finishing this close to the best are counted as converged.
constexpr double kConvergenceWindow = 1e-6;
// Decorrelates per-restart generators (splitmix64 increment).
constexpr uint64_t kSeedStride = 0x9E3779B97F4A7C15ull;

double wrap_azimuth(double phi) {
  phi = std::fmod(phi, kTwoPi);
  return phi < 0.0 ? phi + kTwoPi : phi;
}

// Runs body(0..n-1) with results keyed by index; the caller reduces in
// index order afterwards, so thread scheduling cannot change any output.
void parallel_for_index(int n, const std::function<void(int)>& body) {
  const int workers =
      std::min<int>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::mt19937_64 restart_rng(uint64_t seed, int restart) {
  return std::mt19937_64(seed +
                         kSeedStride * static_cast<uint64_t>(restart + 1));
}

SphericalConfig random_config(int v, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec3> pts(v);
  for (auto& p : pts) {
    do {
      p = {gauss(rng), gauss(rng), gauss(rng)};
    } while (norm(p) < 1e-6);
  }
  return SphericalConfig::from_points(pts);
}

}  // namespace

std::vector<UnitPoint> SphericalConfig::to_points() const {
  std::vector<UnitPoint> pts;
  pts.reserve(angles.size());
  for (const auto& a : angles) pts.push_back(UnitPoint::from_polar(a[0], a[1]));
  return pts;
}

SphericalConfig SphericalConfig::from_points(std::span<const Vec3> points) {
  if (points.size() < 2) {
    throw DomainError("need at least 2 points to fix the gauge");
  }
  // Orthonormal frame with the first point as +z; mapping p to frame
  // coordinates is the rotation that sends it to the pole.
  const Vec3 w = normalized(points[0]);
  const Vec3 pick = std::abs(w.x) < 0.9 ? kUnitX : kUnitY;
  const Vec3 u = normalized(cross(pick, w));
  const Vec3 s = cross(w, u);
  auto frame = [&](const Vec3& p) {
    const Vec3 q = normalized(p);
    return Vec3{dot(u, q), dot(s, q), dot(w, q)};
  };
  const Vec3 second = frame(points[1]);
  const double spin = std::atan2(second.y, second.x);

  SphericalConfig c;
  c.angles.reserve(points.size());
  for (const auto& p : points) {
    const Vec3 q = frame(p);
    const double theta = std::acos(std::clamp(q.z, -1.0, 1.0));
    c.angles.push_back({theta, wrap_azimuth(std::atan2(q.y, q.x) - spin)});
  }
  c.angles[0] = {0.0, 0.0};
  c.angles[1][1] = 0.0;
  return c;
}

std::vector<double> to_free_parameters(const SphericalConfig& c) {
  std::vector<double> p;
  p.reserve(2 * c.angles.size() - 3);
  p.push_back(c.angles[1][0]);
  for (size_t i = 2; i < c.angles.size(); ++i) {
    p.push_back(c.angles[i][0]);
    p.push_back(c.angles[i][1]);
  }
  return p;
}

SphericalConfig from_free_parameters(int v, std::span<const double> params) {
  SphericalConfig c;
  c.angles.assign(v, {0.0, 0.0});
  c.angles[1] = {params[0], 0.0};
  for (int i = 2; i < v; ++i) {
    c.angles[i] = {params[2 * i - 3], params[2 * i - 2]};
  }
  return c;
}

double objective(const SphericalConfig& c, Objective kind) {
  try {
    const auto pts = c.to_points();
    const Polyhedron hull = convex_hull(std::span<const UnitPoint>(pts));
    return kind == Objective::kArea ? surface_area(hull) : volume(hull);
  } catch (const DegenerateInput&) {
    return 0.0;
  }
}

LocalOptimizeResult local_optimize(const SphericalConfig& start,
                                   Objective kind, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const int v = static_cast<int>(start.angles.size());

  std::vector<double> x = to_free_parameters(start);
  const auto eval = [&](std::span<const double> p) {
    return objective(from_free_parameters(v, p), kind);
  };

  LocalOptimizeResult out;
  double f = eval(x);
  out.accepted_values.push_back(f);

  double step = kInitialStep;
  bool settled = false;  // gradient below tol or step floor reached
  int iter = 0;
  std::vector<double> g(x.size());
  std::vector<double> trial(x.size());
  for (; iter < kMaxIterations; ++iter) {
    double gn2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      const double keep = x[i];
      x[i] = keep + kFdStep;
      const double fp = eval(x);
      x[i] = keep - kFdStep;
      const double fm = eval(x);
      x[i] = keep;
      g[i] = (fp - fm) / (2.0 * kFdStep);
      gn2 += g[i] * g[i];
    }
    const double gn = std::sqrt(gn2);
    if (gn < tol) {
      settled = true;
      break;
    }

    bool accepted = false;
    while (step >= kStepFloor) {
      for (size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * g[i] / gn;
      const double ft = eval(trial);
      if (ft > f) {
        x = trial;
        f = ft;
        out.accepted_values.push_back(f);
        step = std::min(2.0 * step, kInitialStep);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      settled = true;  // no uphill move of at least the floor length
      break;
    }
  }

  out.config = from_free_parameters(v, x);
  out.value = f;
  out.iterations = iter;
  // A run parked at the degenerate floor has a zero gradient but proved
  // nothing; only a positive objective counts as converged.
  out.converged = settled && f > 0.0;
  return out;
}

SearchResult multi_start(int v, Objective kind, int restarts, uint64_t seed) {
  if (v < 4) throw DomainError("need at least 4 points");
  if (restarts < 1) throw DomainError("need at least one restart");

  std::vector<LocalOptimizeResult> runs(restarts);
  parallel_for_index(restarts, [&](int i) {
    auto rng = restart_rng(seed, i);
    runs[i] = local_optimize(random_config(v, rng), kind, kGradientTol);
  });

  SearchResult out;
  out.objective = kind;
  out.restarts_used = restarts;
  out.trace.reserve(restarts);
  int best = 0;
  for (int i = 0; i < restarts; ++i) {
    out.trace.push_back(runs[i].value);
    if (runs[i].value > runs[best].value) best = i;
  }
  out.best_config = std::move(runs[best].config);
  out.best_value = runs[best].value;
  int hits = 0;
  for (const double value : out.trace) {
    if (out.best_value - value <= kConvergenceWindow) ++hits;
  }
  out.converged_fraction = static_cast<double>(hits) / restarts;
  return out;
}

namespace {

// Cap-search parameter layout (2v entries for v-1 base vertices + apex):
//   [0 .. v-3]      azimuths of base vertices 1..v-2 (vertex 0 pinned at 0)
//   [v-2 .. 2v-4]   base radii
//   [2v-3, 2v-2]    apex x, y
//   [2v-1]          apex height t above the base plane
struct CapChart {
  int v;
  double h;
  double R;
  double z0;  // base plane height 1 - h

  double base_azimuth(std::span<const double> p, int j) const {
    return j == 0 ? 0.0 : p[j - 1];
  }
  double base_radius(std::span<const double> p, int j) const {
    return p[v - 2 + j];
  }
  Vec3 apex(std::span<const double> p) const {
    return {p[2 * v - 3], p[2 * v - 2], z0 + p[2 * v - 1]};
  }

  // Lateral area of the fan over the base polygon read in azimuth order.
  double lateral_area(std::span<const double> p) const {
    const int nb = v - 1;
    std::vector<std::pair<double, int>> order(nb);
    for (int j = 0; j < nb; ++j) {
      order[j] = {wrap_azimuth(base_azimuth(p, j)), j};
    }
    std::sort(order.begin(), order.end());

    std::vector<Vec3> base(nb);
    for (int j = 0; j < nb; ++j) {
      const double az = base_azimuth(p, j);
      const double r = base_radius(p, j);
      base[j] = {r * std::cos(az), r * std::sin(az), z0};
    }
    const Vec3 a = apex(p);
    double area = 0.0;
    for (int k = 0; k < nb; ++k) {
      const Vec3& b1 = base[order[k].second];
      const Vec3& b2 = base[order[(k + 1) % nb].second];
      area += 0.5 * norm(cross(b1 - a, b2 - a));
    }
    return area;
  }

  // Clamp radii to the base disk, the apex height to (0, h], and the apex
  // offset into the ball slice at its height.
  void project(std::vector<double>& p) const {
    for (int j = 0; j < v - 1; ++j) {
      p[v - 2 + j] = std::clamp(p[v - 2 + j], 0.0, R);
    }
    double& t = p[2 * v - 1];
    t = std::clamp(t, 1e-9, h);
    const double z = z0 + t;
    const double max_r2 = std::max(0.0, 1.0 - z * z);
    double& ax = p[2 * v - 3];
    double& ay = p[2 * v - 2];
    const double r2 = ax * ax + ay * ay;
    if (r2 > max_r2) {
      const double scale = r2 > 0.0 ? std::sqrt(max_r2 / r2) : 0.0;
      ax *= scale;
      ay *= scale;
    }
  }

  std::vector<double> random_params(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> p(2 * v);
    for (int j = 1; j < v - 1; ++j) p[j - 1] = kTwoPi * uni(rng);
    for (int j = 0; j < v - 1; ++j) {
      p[v - 2 + j] = R * (0.3 + 0.7 * uni(rng));
    }
    const double t = h * (0.3 + 0.7 * uni(rng));
    const double z = z0 + t;
    const double rho = 0.5 * std::sqrt(std::max(0.0, 1.0 - z * z)) * uni(rng);
    const double aphi = kTwoPi * uni(rng);
    p[2 * v - 3] = rho * std::cos(aphi);
    p[2 * v - 2] = rho * std::sin(aphi);
    p[2 * v - 1] = t;
    return p;
  }
};

struct CapRun {
  std::vector<double> params;
  double value = 0.0;
};

// Projected-gradient ascent sibling of local_optimize: the gradient is
// taken on the raw chart, trial points are projected back into the cap,
// and a step is accepted only if the projected point improves.
CapRun cap_local_optimize(const CapChart& chart, std::vector<double> x) {
  chart.project(x);
  double f = chart.lateral_area(x);
  double step = kInitialStep;
  std::vector<double> g(x.size());
  std::vector<double> trial(x.size());
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    double gn2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      const double keep = x[i];
      x[i] = keep + kFdStep;
      const double fp = chart.lateral_area(x);
      x[i] = keep - kFdStep;
      const double fm = chart.lateral_area(x);
      x[i] = keep;
      g[i] = (fp - fm) / (2.0 * kFdStep);
      gn2 += g[i] * g[i];
    }
    const double gn = std::sqrt(gn2);
    if (gn < kGradientTol) break;

    bool accepted = false;
    while (step >= kStepFloor) {
      for (size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * g[i] / gn;
      chart.project(trial);
      const double ft = chart.lateral_area(trial);
      if (ft > f) {
        x = trial;
        f = ft;
        step = std::min(2.0 * step, kInitialStep);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return {std::move(x), f};
}

}  // namespace

CapSearchResult constrained_cap_search(int v, double h, int restarts,
                                       uint64_t seed) {
  if (v < 4) throw DomainError("need at least 4 points");
  if (restarts < 1) throw DomainError("need at least one restart");
  if (!(h > 0.0 && h < 2.0)) throw DomainError("cap height outside (0, 2)");

  const CapChart chart{v, h, std::sqrt(2.0 * h - h * h), 1.0 - h};

  std::vector<CapRun> runs(restarts);
  parallel_for_index(restarts, [&](int i) {
    auto rng = restart_rng(seed, i);
    runs[i] = cap_local_optimize(chart, chart.random_params(rng));
  });

  CapSearchResult out;
  out.bound = pyramid_lateral_bound(v, h);
  out.restarts_used = restarts;
  out.trace.reserve(restarts);
  int best = 0;
  for (int i = 0; i < restarts; ++i) {
    out.trace.push_back(runs[i].value);
    if (runs[i].value > runs[best].value) best = i;
  }
  out.best_value = runs[best].value;
  int hits = 0;
  for (const double value : out.trace) {
    if (out.best_value - value <= kConvergenceWindow) ++hits;
  }
  out.converged_fraction = static_cast<double>(hits) / restarts;

  const auto& p = runs[best].params;
  out.cap = make_cap_geometry(h, p[2 * v - 1]);
  out.apex = chart.apex(p);
  std::vector<std::pair<double, int>> order(v - 1);
  for (int j = 0; j < v - 1; ++j) {
    order[j] = {wrap_azimuth(chart.base_azimuth(p, j)), j};
  }
  std::sort(order.begin(), order.end());
  for (const auto& [az, j] : order) {
    const double r = chart.base_radius(p, j);
    out.base.push_back({r * std::cos(az), r * std::sin(az), chart.z0});
  }
  return out;
}

}  // namespace sphedra
