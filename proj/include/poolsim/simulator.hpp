#pragma once

#include <array>
#include <cstdint>

#include "poolsim/analytic.hpp"
#include "poolsim/payout.hpp"
#include "poolsim/types.hpp"

namespace poolsim {

/// Which entity ended the round, from the attacker's point of view.
/// kNone covers the attacker's own victim-pool block under honest play
/// (the withholding strategies never end a round that way).
enum class EventClass : std::uint8_t { kMainPool, kVictimOther, kThirdParty, kNone };

const char* to_string(EventClass ev);

/// One simulated round. The exposed ledger aggregates the victim pool into
/// two indices: miner 0 is the attacker, miner 1 the rest of the pool.
struct RoundOutcome {
  EventClass event_class = EventClass::kNone;
  bool victim_pool_won = false;
  bool attacker_had_block = false;
  double attacker_reward = 0.0;
  double block_time = 0.0;
  ShareLedger ledger{2};
};

struct SimConfig {
  PowerProfile profile{0.1, 0.24, 1.0};
  SystemParams sys{};
  Strategy strategy = Strategy::kHonest;
  PayoutScheme scheme = PayoutScheme::score_decay(32.0);
  std::uint64_t n_rounds = 100000;
  std::uint64_t seed = 1;

  /// Throws ValidationError; SWH strategies require a decaying scheme.
  void validate() const;
};

/// Convenience: scheme derived from sys.d for decaying pools.
SimConfig make_config(const PowerProfile& profile, const SystemParams& sys,
                      Strategy strategy, std::uint64_t n_rounds, std::uint64_t seed);

/// Aggregate counters for distribution-level checks. All integers, so the
/// fold over blocks is exact and worker-count independent.
struct SimStats {
  static constexpr std::size_t kHistMax = 512;  // larger counts land in the last bin

  std::uint64_t ev_main = 0;
  std::uint64_t ev_victim_other = 0;
  std::uint64_t ev_third = 0;
  std::uint64_t ev_none = 0;
  std::uint64_t won_rounds = 0;
  std::uint64_t won_shares = 0;
  std::uint64_t won_attacker_shares = 0;
  std::array<std::uint64_t, kHistMax + 1> won_share_hist{};

  void merge(const SimStats& o);
};

enum class ExecMode : std::uint8_t { kSerial, kParallel };

/// Simulates round `round_index` deterministically from (cfg.seed,
/// round_index), with the full share ledger materialized.
RoundOutcome simulate_round(const SimConfig& cfg, std::uint64_t round_index);

/// Mean attacker reward per round with its standard error. Bit-identical for
/// a fixed cfg regardless of ExecMode or OpenMP worker count: rounds draw from
/// counter-based streams and block partial sums are folded in block order.
RewardEstimate estimate_reward(const SimConfig& cfg,
                               ExecMode mode = ExecMode::kParallel,
                               SimStats* stats = nullptr);

/// In-pool payout study (victim-pool-only view, tau = 1 semantics): every
/// round is a victim-pool round; returns the mean attacker payout fraction.
/// Throws InsufficientSampleError when no usable round can be produced.
RewardEstimate estimate_payout(const SimConfig& cfg,
                               ExecMode mode = ExecMode::kParallel);

}  // namespace poolsim
