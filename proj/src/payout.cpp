#include "poolsim/payout.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace poolsim {

PayoutScheme PayoutScheme::pplns(std::uint32_t window) {
  if (window < 1) throw ValidationError("pplns window = 0, must be >= 1");
  return PayoutScheme(SchemeKind::kPplns, window, 0.0);
}

PayoutScheme PayoutScheme::score_decay(double decay) {
  if (!(decay > 0.0)) {
    std::ostringstream os;
    os << "score decay d = " << decay << ", must be > 0";
    throw ValidationError(os.str());
  }
  return PayoutScheme(SchemeKind::kScoreDecay, 0, decay);
}

std::string PayoutScheme::name() const {
  switch (kind_) {
    case SchemeKind::kPps:
      return "pps";
    case SchemeKind::kProportional:
      return "proportional";
    case SchemeKind::kPplns:
      return "pplns:" + std::to_string(window_);
    case SchemeKind::kScoreDecay: {
      std::ostringstream os;
      os << "score-decay:" << decay_;
      return os.str();
    }
  }
  return "?";
}

PayoutClass classify(const PayoutScheme& scheme) {
  return scheme.kind() == SchemeKind::kScoreDecay ? PayoutClass::kDecayingPayout
                                                  : PayoutClass::kFixedPayout;
}

std::vector<double> share_weights(const PayoutScheme& scheme,
                                  const ShareLedger& ledger, double block_time) {
  const auto& events = ledger.events();
  std::vector<double> w(events.size(), 0.0);
  switch (scheme.kind()) {
    case SchemeKind::kPps:
    case SchemeKind::kProportional:
      std::fill(w.begin(), w.end(), 1.0);
      break;
    case SchemeKind::kPplns: {
      const std::size_t n = events.size();
      const std::size_t in_window = std::min<std::size_t>(scheme.window(), n);
      for (std::size_t i = n - in_window; i < n; ++i) w[i] = 1.0;
      break;
    }
    case SchemeKind::kScoreDecay:
      if (!ledger.empty() && block_time < ledger.last_time()) {
        std::ostringstream os;
        os << "block_time " << block_time << " precedes last share at "
           << ledger.last_time();
        throw ValidationError(os.str());
      }
      for (std::size_t i = 0; i < events.size(); ++i)
        w[i] = std::exp(-scheme.decay() * (block_time - events[i].time));
      break;
  }
  return w;
}

PayoutVector payout(const PayoutScheme& scheme, const ShareLedger& ledger,
                    const RoundContext& ctx) {
  PayoutVector out;
  out.shares_of_reward.assign(ledger.pool_size(), 0.0);
  if (!ctx.pool_won) return out;
  if (ledger.empty())
    throw DegenerateRoundError("won round with an empty share ledger");

  const std::vector<double> w = share_weights(scheme, ledger, ctx.block_time);
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.shares_of_reward[ledger.events()[i].miner] += w[i];
    total += w[i];
  }
  if (!(total > 0.0))
    throw DegenerateRoundError("won round with zero total share weight");
  for (double& v : out.shares_of_reward) v /= total;
  return out;
}

double miner_fraction(const PayoutScheme& scheme, const ShareLedger& ledger,
                      double block_time, std::uint32_t miner) {
  if (ledger.empty()) return 0.0;
  const std::vector<double> w = share_weights(scheme, ledger, block_time);
  double mine = 0.0, total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    total += w[i];
    if (ledger.events()[i].miner == miner) mine += w[i];
  }
  return total > 0.0 ? mine / total : 0.0;
}

bool check_unilateral_increase(const PayoutScheme& scheme, const ShareLedger& ledger,
                               std::uint32_t miner, double t) {
  const double t_b = std::max(t, ledger.last_time());
  const double before = miner_fraction(scheme, ledger, t_b, miner);
  const double after =
      miner_fraction(scheme, ledger.append({miner, t}), t_b, miner);
  return after - before >= 0.0;
}

double check_delay_gain(const PayoutScheme& scheme, const ShareLedger& ledger,
                        std::uint32_t miner, double t, double delta_t,
                        const RoundContext& ctx) {
  if (delta_t < 0.0) throw ValidationError("delta_t must be >= 0");
  if (t + delta_t > ctx.block_time) {
    std::ostringstream os;
    os << "share delayed to " << t + delta_t << " past block at " << ctx.block_time
       << " becomes stale";
    throw StaleShareError(os.str());
  }
  const double prompt =
      miner_fraction(scheme, ledger.append({miner, t}), ctx.block_time, miner);
  const double delayed = miner_fraction(scheme, ledger.append({miner, t + delta_t}),
                                        ctx.block_time, miner);
  return delayed - prompt;
}

}  // namespace poolsim
