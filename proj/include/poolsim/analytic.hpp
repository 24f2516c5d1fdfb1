#pragma once

#include <optional>
#include <string>

#include "poolsim/types.hpp"

namespace poolsim {

/// Attacker strategies, ordered by infrastructure required (used as the
/// ranking tie-break: earlier wins ties).
enum class Strategy : std::uint8_t { kHonest, kBwh, kFaw, kUba, kSwhFaw, kSwhUba };

inline constexpr Strategy kAllStrategies[] = {
    Strategy::kHonest, Strategy::kBwh, Strategy::kFaw,
    Strategy::kUba,    Strategy::kSwhFaw, Strategy::kSwhUba};

std::string to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& name);

/// True for the share-withholding variants (they require a decaying-payout
/// victim pool).
bool is_swh(Strategy s);

/// Controls where the outer geometric sum of the Theorem-3 double sum is cut:
/// the dropped tail mass (1 - 1/gamma)^Y_max stays below tail_epsilon.
struct TruncationPolicy {
  double tail_epsilon = 1e-9;
};

/// Expected reward of honest mining: alpha.
double r_honest(const PowerProfile& p);

/// Expected reward of the block-withholding attack.
double r_bwh(const PowerProfile& p);

/// Expected reward of fork-after-withholding; c is the fork-race win
/// probability. Reduces to r_bwh at c = 0.
double r_faw(const PowerProfile& p, double c);

/// Single-uncle lower bound on the uncle-block-attack reward; kappa is the
/// uncle reward fraction. Reduces to r_bwh at kappa = 0.
double r_uba_lb(const PowerProfile& p, double kappa);

/// Honest in-pool payout fraction alpha' / (alpha' + beta).
double gamma_honest(double alpha_prime, double beta);

/// Theorem-3 lower bound on the share-withholding payout: truncated double
/// sum over the geometric round length and binomial share ownership, with
/// log-space binomial terms and compensated summation.
double gamma_swh_lb(double alpha_prime, double beta, double gamma, double d,
                    const TruncationPolicy& trunc = {});

/// Corollary-1 approximation alpha'·d / (alpha'·d + beta).
double gamma_swh_approx(double alpha_prime, double beta, double d);

/// Expected reward of SWH combined with FAW.
double r_swh_faw(const PowerProfile& p, const SystemParams& sys);

/// Expected reward of SWH combined with UBA: the UBA event bracket paid at
/// the SWH payout, with the event-B channel gated by c' and the event-C
/// coefficient taking the larger of the fork-win (c) and uncle (kappa)
/// channels. Reduces to r_swh_faw at kappa = 0.
double r_swh_uba(const PowerProfile& p, const SystemParams& sys);

/// Dispatch on strategy. SWH variants require sys.d > 0.
double analytic_reward(Strategy s, const PowerProfile& p, const SystemParams& sys);

}  // namespace poolsim
