#include "poolsim/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace poolsim {

namespace {

constexpr int kCoarsePoints = 33;
constexpr int kDensePoints = 129;

int count_local_maxima(const std::vector<double>& v) {
  int maxima = 0;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || v[i] > v[i - 1];
    const bool right_ok = i == n - 1 || v[i] > v[i + 1];
    if (left_ok && right_ok) ++maxima;
  }
  return maxima;
}

}  // namespace

const char* to_string(OptimMethod m) {
  switch (m) {
    case OptimMethod::kGrid: return "grid";
    case OptimMethod::kGoldenRefined: return "golden-section";
    case OptimMethod::kDenseGrid: return "dense-grid";
  }
  return "?";
}

OptimizationResult optimal_tau(Strategy s, double alpha, double beta,
                               const SystemParams& sys, double tol) {
  if (!(tol > 0.0 && tol <= 0.1)) throw ValidationError("tol outside (0, 0.1]");
  sys.validate();

  OptimizationResult out;
  if (s == Strategy::kHonest) {
    out.tau_star = 0.0;
    out.reward_star = alpha;
    out.method = OptimMethod::kGrid;
    out.evaluations = 1;
    return out;
  }

  auto reward_at = [&](double tau) {
    return analytic_reward(s, PowerProfile(alpha, beta, tau), sys);
  };

  std::vector<double> xs(kCoarsePoints), vs(kCoarsePoints);
  for (int i = 0; i < kCoarsePoints; ++i) {
    xs[i] = static_cast<double>(i) / (kCoarsePoints - 1);
    vs[i] = reward_at(xs[i]);
  }
  out.evaluations = kCoarsePoints;
  int best = static_cast<int>(std::max_element(vs.begin(), vs.end()) - vs.begin());

  if (count_local_maxima(vs) > 1) {
    out.method = OptimMethod::kDenseGrid;
    double best_x = xs[best], best_v = vs[best];
    for (int i = 0; i < kDensePoints; ++i) {
      const double x = static_cast<double>(i) / (kDensePoints - 1);
      const double v = reward_at(x);
      ++out.evaluations;
      if (v > best_v) {
        best_v = v;
        best_x = x;
      }
    }
    out.tau_star = best_x;
    out.reward_star = best_v;
    return out;
  }

  // Golden-section refinement on the bracket around the grid best.
  double lo = xs[std::max(0, best - 1)];
  double hi = xs[std::min(kCoarsePoints - 1, best + 1)];
  constexpr double kInvPhi = 0.6180339887498949;
  double c1 = hi - kInvPhi * (hi - lo);
  double c2 = lo + kInvPhi * (hi - lo);
  double f1 = reward_at(c1), f2 = reward_at(c2);
  out.evaluations += 2;
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = c1;
      c1 = c2;
      f1 = f2;
      c2 = lo + kInvPhi * (hi - lo);
      f2 = reward_at(c2);
    } else {
      hi = c2;
      c2 = c1;
      f2 = f1;
      c1 = hi - kInvPhi * (hi - lo);
      f1 = reward_at(c1);
    }
    ++out.evaluations;
  }
  const double mid = 0.5 * (lo + hi);
  const double vmid = reward_at(mid);
  ++out.evaluations;

  out.method = OptimMethod::kGoldenRefined;
  if (vmid >= vs[best]) {
    out.tau_star = mid;
    out.reward_star = vmid;
  } else {
    out.tau_star = xs[best];
    out.reward_star = vs[best];
  }
  return out;
}

std::vector<StrategyScore> best_strategy(double alpha, double beta,
                                         const SystemParams& sys) {
  std::vector<StrategyScore> table;
  for (Strategy s : kAllStrategies)
    table.push_back({s, optimal_tau(s, alpha, beta, sys)});
  std::stable_sort(table.begin(), table.end(),
                   [](const StrategyScore& a, const StrategyScore& b) {
                     if (a.result.reward_star != b.result.reward_star)
                       return a.result.reward_star > b.result.reward_star;
                     return a.strategy < b.strategy;
                   });
  return table;
}

CrossoverResult crossover_cprime(Strategy a, Strategy b, double alpha, double beta,
                                 const SystemParams& sys_without_cprime, double tol,
                                 std::optional<double> fixed_tau) {
  if (!(tol > 0.0)) throw ValidationError("tol must be > 0");
  CrossoverResult res;
  res.a = a;
  res.b = b;

  auto reward = [&](Strategy s, double c_prime) {
    SystemParams sys = sys_without_cprime;
    sys.c_prime = c_prime;
    if (s == Strategy::kHonest) return alpha;
    if (fixed_tau)
      return analytic_reward(s, PowerProfile(alpha, beta, *fixed_tau), sys);
    return optimal_tau(s, alpha, beta, sys).reward_star;
  };
  auto g = [&](double c_prime) { return reward(a, c_prime) - reward(b, c_prime); };

  // Coarse scan for the first interval where g turns strictly positive.
  // A tau-optimized difference can sit at exactly zero below the crossover
  // (tau = 0 degenerates to honest), so "sign change" means g <= 0 < g.
  constexpr int kScan = 16;
  constexpr double kPositive = 1e-12;
  double lo = 0.0, g_lo = g(0.0);
  if (g_lo > kPositive) return res;  // already crossed at c' = 0
  bool bracketed = false;
  double hi = 1.0, g_hi = 0.0;
  for (int i = 1; i <= kScan; ++i) {
    const double x = static_cast<double>(i) / kScan;
    const double gx = g(x);
    if (gx > kPositive) {
      hi = x;
      g_hi = gx;
      bracketed = true;
      break;
    }
    lo = x;
    g_lo = gx;
  }
  if (!bracketed) return res;  // no crossover on [0, 1]

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm > kPositive) {
      hi = mid;
      g_hi = gm;
    } else {
      lo = mid;
      g_lo = gm;
    }
  }
  res.found = true;
  res.c_prime_star = 0.5 * (lo + hi);
  res.bracket = hi - lo;
  res.g_low = g_lo;
  res.g_high = g_hi;
  return res;
}

}  // namespace poolsim
