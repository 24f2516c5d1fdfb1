#include "poolsim/types.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace poolsim {

namespace {

[[noreturn]] void fail_range(const char* field, double value, const char* range) {
  std::ostringstream os;
  os << field << " = " << value << " outside " << range;
  throw ValidationError(os.str());
}

}  // namespace

PowerProfile::PowerProfile(double alpha, double beta, double tau)
    : alpha_(alpha), beta_(beta), tau_(tau) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) fail_range("alpha", alpha, "[0, 0.5]");
  if (!(beta >= 0.0)) fail_range("beta", beta, "[0, 1 - alpha]");
  if (!(alpha + beta <= 1.0 + 1e-15)) fail_range("beta", beta, "[0, 1 - alpha]");
  if (!(tau >= 0.0 && tau <= 1.0)) fail_range("tau", tau, "[0, 1]");
}

PowerProfile new_power_profile(double alpha, double beta, double tau) {
  return PowerProfile(alpha, beta, tau);
}

SystemParams::SystemParams(double gamma_, double d_, double kappa_, double c_,
                           double c_prime_) {
  gamma = gamma_;
  d = d_;
  kappa = kappa_;
  c = c_;
  c_prime = c_prime_;
  validate();
}

void SystemParams::validate() const {
  if (!(gamma >= 1.0)) fail_range("gamma", gamma, "[1, inf)");
  if (!(d > 0.0)) fail_range("d", d, "(0, inf)");
  if (!(kappa >= 0.0 && kappa < 1.0)) fail_range("kappa", kappa, "[0, 1)");
  if (!(c >= 0.0 && c <= 1.0)) fail_range("c", c, "[0, 1]");
  if (!(c_prime >= 0.0 && c_prime <= 1.0)) fail_range("c_prime", c_prime, "[0, 1]");
}

ShareLedger::ShareLedger(std::uint32_t pool_size) : pool_size_(pool_size) {
  if (pool_size == 0) throw ValidationError("pool_size = 0, must be positive");
}

ShareLedger::ShareLedger(std::uint32_t pool_size, std::vector<ShareEvent> events)
    : pool_size_(pool_size), events_(std::move(events)) {
  if (pool_size == 0) throw ValidationError("pool_size = 0, must be positive");
  double min_time = 0.0;
  for (const ShareEvent& ev : events_) {
    check_event(ev, min_time);
    min_time = ev.time;
  }
}

void ShareLedger::check_event(const ShareEvent& event, double min_time) const {
  if (event.miner >= pool_size_) {
    std::ostringstream os;
    os << "miner index " << event.miner << " >= pool size " << pool_size_;
    throw IndexError(os.str());
  }
  if (!(event.time >= 0.0)) {
    std::ostringstream os;
    os << "share time " << event.time << " is negative";
    throw ValidationError(os.str());
  }
  if (event.time < min_time) {
    std::ostringstream os;
    os << "share time " << event.time << " precedes ledger tail at " << min_time;
    throw OrderingError(os.str());
  }
}

ShareLedger ShareLedger::append(const ShareEvent& event) const {
  check_event(event, last_time());
  ShareLedger next(*this);
  next.events_.push_back(event);
  return next;
}

ShareLedger append_share(const ShareLedger& ledger, const ShareEvent& event) {
  return ledger.append(event);
}

double PayoutVector::sum() const {
  return std::accumulate(shares_of_reward.begin(), shares_of_reward.end(), 0.0);
}

bool PayoutVector::all_zero() const {
  for (double v : shares_of_reward)
    if (v != 0.0) return false;
  return true;
}

bool PayoutVector::well_formed(double eps) const {
  for (double v : shares_of_reward)
    if (!(v >= 0.0) || !std::isfinite(v)) return false;
  return all_zero() || std::abs(sum() - 1.0) <= eps;
}

}  // namespace poolsim
