#pragma once

#include <optional>
#include <vector>

#include "poolsim/analytic.hpp"

namespace poolsim {

enum class OptimMethod : std::uint8_t { kGrid, kGoldenRefined, kDenseGrid };

const char* to_string(OptimMethod m);

struct OptimizationResult {
  double tau_star = 0.0;
  double reward_star = 0.0;
  OptimMethod method = OptimMethod::kGrid;
  int evaluations = 0;
};

/// Best infiltration fraction for a strategy on the analytic reward: 33-point
/// coarse grid, then golden-section refinement of the best bracket down to a
/// tau width of `tol`. A multimodal grid falls back to a 129-point dense-grid
/// argmax. Honest mining is tau-free and reports tau = 0.
OptimizationResult optimal_tau(Strategy s, double alpha, double beta,
                               const SystemParams& sys, double tol = 1e-4);

struct StrategyScore {
  Strategy strategy;
  OptimizationResult result;
};

/// Every strategy at its optimal tau, sorted by reward descending; ties break
/// toward the strategy requiring less infrastructure (enum order).
std::vector<StrategyScore> best_strategy(double alpha, double beta,
                                         const SystemParams& sys);

struct CrossoverResult {
  bool found = false;
  double c_prime_star = 0.0;
  Strategy a = Strategy::kHonest;
  Strategy b = Strategy::kHonest;
  double bracket = 1.0;   // final bisection interval width
  double g_low = 0.0;     // reward difference at the bracket ends
  double g_high = 0.0;
};

/// Smallest c' in [0, 1] where strategy a's reward strictly exceeds strategy
/// b's, located by bisection on g(c') = reward_a(c') - reward_b(c'). Each
/// side is tau-optimized unless `fixed_tau` pins the infiltration (the
/// figure-reproduction protocol uses fixed_tau = 1). When g never becomes
/// positive, or is already positive at c' = 0, the result reports not-found
/// rather than throwing.
CrossoverResult crossover_cprime(Strategy a, Strategy b, double alpha, double beta,
                                 const SystemParams& sys_without_cprime,
                                 double tol = 1e-3,
                                 std::optional<double> fixed_tau = std::nullopt);

}  // namespace poolsim
