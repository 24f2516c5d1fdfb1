#pragma once

#include <cstdint>
#include <vector>

#include "poolsim/errors.hpp"

namespace poolsim {

/// Hash-power split between the attacker, the victim pool, and the rest of
/// the network, normalized so the whole network has power 1.
///
/// alpha  - attacker's total power, in [0, 0.5] (51%-attack cutoff)
/// beta   - victim pool's power excluding the attacker, alpha + beta <= 1
/// tau    - fraction of the attacker's power infiltrating the victim pool
///
/// All instances are validated at construction and immutable afterwards.
class PowerProfile {
 public:
  PowerProfile(double alpha, double beta, double tau);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double tau() const { return tau_; }

  /// Attacker power inside the victim pool.
  double alpha_prime() const { return tau_ * alpha_; }
  /// Total power mining for the victim pool.
  double victim_power() const { return alpha_prime() + beta_; }

 private:
  double alpha_;
  double beta_;
  double tau_;
};

/// Constructs a validated PowerProfile; throws ValidationError naming the
/// offending field on a range violation.
PowerProfile new_power_profile(double alpha, double beta, double tau);

/// Blockchain / pool knobs and networking environment.
///
/// gamma   - block-to-share difficulty ratio; expected shares per pool block
/// d       - decay constant of the share score, per normalized time unit
/// kappa   - uncle-block partial reward fraction, in [0, 1)
/// c       - probability the attacker wins a fork race
/// c_prime - fraction of a withheld share's payout salvaged when another
///           victim-pool miner ends the round
struct SystemParams {
  double gamma = 32.0;
  double d = 32.0;
  double kappa = kDefaultKappa;
  double c = 0.0;
  double c_prime = 1.0;

  // Calibrated so the closed-form strategy family reproduces the reference
  // crossover figures; Ethereum's nearest-uncle 7/8 is a common alternative.
  static constexpr double kDefaultKappa = 0.95;

  SystemParams() = default;
  SystemParams(double gamma, double d, double kappa, double c, double c_prime);

  /// Throws ValidationError naming the offending field.
  void validate() const;
};

/// One share submission: (miner index, submission time). Time is measured in
/// normalized round-time units; one unit is one expected block interval.
struct ShareEvent {
  std::uint32_t miner = 0;
  double time = 0.0;
};

/// The ordered share list s of one round. Value type: append() returns a new
/// ledger and never mutates the receiver, so ledgers can be shared freely.
class ShareLedger {
 public:
  explicit ShareLedger(std::uint32_t pool_size);
  /// Bulk construction; validates ordering, times and miner indices.
  ShareLedger(std::uint32_t pool_size, std::vector<ShareEvent> events);

  std::uint32_t pool_size() const { return pool_size_; }
  const std::vector<ShareEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  /// Time of the most recent share; 0 for an empty ledger.
  double last_time() const { return events_.empty() ? 0.0 : events_.back().time; }

  /// New ledger with `event` at the tail. Throws OrderingError if the event
  /// predates the tail, IndexError if the miner index is out of range,
  /// ValidationError for a negative time.
  ShareLedger append(const ShareEvent& event) const;

 private:
  void check_event(const ShareEvent& event, double min_time) const;

  std::uint32_t pool_size_;
  std::vector<ShareEvent> events_;
};

/// Spec-named alias for ShareLedger::append.
ShareLedger append_share(const ShareLedger& ledger, const ShareEvent& event);

/// Per-miner reward split R produced by a payout function. Either all zero
/// (the pool lost the round) or the entries sum to 1 within 1e-12.
struct PayoutVector {
  std::vector<double> shares_of_reward;

  double sum() const;
  bool all_zero() const;
  /// True when the vector satisfies the all-zero-or-sums-to-one contract.
  bool well_formed(double eps = 1e-12) const;
};

/// Monte Carlo mean with its standard error, sample count and root seed.
struct RewardEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  std::uint64_t n_rounds = 0;
  std::uint64_t seed = 0;
};

}  // namespace poolsim
