#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poolsim/types.hpp"

namespace poolsim {

enum class SchemeKind : std::uint8_t { kPps, kProportional, kPplns, kScoreDecay };

/// A named intra-pool payout function f.
///
/// PPS and Proportional attribute rewards by share count; within one round's
/// normalized split the two coincide (operator-side PPS accounting is out of
/// scope). PPLNS(N) counts only the last N shares. ScoreDecay(d) weights each
/// share by exp(-d * (t_B - t_i)).
class PayoutScheme {
 public:
  static PayoutScheme pps() { return PayoutScheme(SchemeKind::kPps, 0, 0.0); }
  static PayoutScheme proportional() {
    return PayoutScheme(SchemeKind::kProportional, 0, 0.0);
  }
  static PayoutScheme pplns(std::uint32_t window);
  static PayoutScheme score_decay(double decay);

  SchemeKind kind() const { return kind_; }
  std::uint32_t window() const { return window_; }
  double decay() const { return decay_; }
  std::string name() const;

 private:
  PayoutScheme(SchemeKind kind, std::uint32_t window, double decay)
      : kind_(kind), window_(window), decay_(decay) {}

  SchemeKind kind_;
  std::uint32_t window_;  // PPLNS only
  double decay_;          // ScoreDecay only
};

enum class PayoutClass : std::uint8_t { kFixedPayout, kDecayingPayout };

/// Fixed vs decaying classification (Definitions 2 and 3 made executable).
PayoutClass classify(const PayoutScheme& scheme);

/// Round-end context the payout function is evaluated against.
struct RoundContext {
  double block_time = 0.0;
  bool pool_won = false;
};

/// f: (s, ctx) -> R. All-zero when the pool lost; otherwise a split summing
/// to 1. Throws DegenerateRoundError for a won round with an empty ledger and
/// ValidationError when block_time precedes the ledger tail.
PayoutVector payout(const PayoutScheme& scheme, const ShareLedger& ledger,
                    const RoundContext& ctx);

/// Per-share weights of the normalized split, in ledger order (not yet
/// normalized). Shared by payout() and the round simulator.
std::vector<double> share_weights(const PayoutScheme& scheme,
                                  const ShareLedger& ledger, double block_time);

/// The named miner's fraction of a won round's reward; 0 for an empty ledger.
double miner_fraction(const PayoutScheme& scheme, const ShareLedger& ledger,
                      double block_time, std::uint32_t miner);

/// Definition-1 probe: does appending (miner, t) leave the miner's payout
/// no worse? Evaluated under a won round with block time max(t, ledger tail).
bool check_unilateral_increase(const PayoutScheme& scheme, const ShareLedger& ledger,
                               std::uint32_t miner, double t);

/// Payout difference from delaying a fresh share by delta_t:
///   f_m(s || (m, t + delta_t)) - f_m(s || (m, t))
/// evaluated under a won round ending at ctx.block_time. Exactly 0 for fixed
/// schemes, strictly positive for ScoreDecay whenever delta_t > 0 and another
/// miner holds score. Throws StaleShareError when t + delta_t > block_time.
double check_delay_gain(const PayoutScheme& scheme, const ShareLedger& ledger,
                        std::uint32_t miner, double t, double delta_t,
                        const RoundContext& ctx);

}  // namespace poolsim
