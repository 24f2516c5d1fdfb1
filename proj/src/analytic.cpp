#include "poolsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace poolsim {

namespace {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kHonest: return "honest";
    case Strategy::kBwh: return "bwh";
    case Strategy::kFaw: return "faw";
    case Strategy::kUba: return "uba";
    case Strategy::kSwhFaw: return "swh-faw";
    case Strategy::kSwhUba: return "swh-uba";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
  for (Strategy s : kAllStrategies)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

bool is_swh(Strategy s) {
  return s == Strategy::kSwhFaw || s == Strategy::kSwhUba;
}

double r_honest(const PowerProfile& p) { return p.alpha(); }

double r_bwh(const PowerProfile& p) {
  const double ta = p.alpha_prime();
  const double first = (1.0 - p.tau()) * p.alpha() / (1.0 - ta);
  if (ta == 0.0) return first;
  return first + ta / (p.beta() + ta) * (p.beta() / (1.0 - ta));
}

double r_faw(const PowerProfile& p, double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("c outside [0, 1]");
  const double ta = p.alpha_prime();
  const double first = (1.0 - p.tau()) * p.alpha() / (1.0 - ta);
  if (ta == 0.0) return first;
  const double bracket = p.beta() / (1.0 - ta) +
                         c * ta * (1.0 - p.alpha() - p.beta()) / (1.0 - ta);
  return first + ta / (p.beta() + ta) * bracket;
}

double r_uba_lb(const PowerProfile& p, double kappa) {
  if (!(kappa >= 0.0 && kappa < 1.0)) throw ValidationError("kappa outside [0, 1)");
  const double ta = p.alpha_prime();
  const double first = (1.0 - p.tau()) * p.alpha() / (1.0 - ta);
  if (ta == 0.0) return first;
  const double bracket = kappa * ta * ta / (p.beta() + ta) * first +
                         (1.0 + kappa * ta) * p.beta() / (1.0 - ta) +
                         kappa * ta * (1.0 - p.alpha() - p.beta()) / (1.0 - ta);
  return first + ta / (p.beta() + ta) * bracket;
}

double gamma_honest(double alpha_prime, double beta) {
  if (alpha_prime == 0.0 && beta > 0.0) return 0.0;
  if (!(alpha_prime + beta > 0.0))
    throw ValidationError("alpha_prime + beta = 0: pool has no power");
  return alpha_prime / (alpha_prime + beta);
}

double gamma_swh_lb(double alpha_prime, double beta, double gamma, double d,
                    const TruncationPolicy& trunc) {
  if (!(gamma >= 1.0)) throw ValidationError("gamma outside [1, inf)");
  if (!(d > 0.0)) throw ValidationError("d outside (0, inf)");
  if (!(alpha_prime >= 0.0) || !(beta >= 0.0))
    throw ValidationError("alpha_prime and beta must be >= 0");
  if (!(trunc.tail_epsilon > 0.0 && trunc.tail_epsilon <= 1e-6))
    throw ValidationError("tail_epsilon outside (0, 1e-6]");
  if (alpha_prime <= 0.0) return 0.0;

  const double p = alpha_prime / (alpha_prime + beta);
  const double q = beta / (alpha_prime + beta);
  const double log_p = std::log(p);
  const double log_q = q > 0.0 ? std::log(q) : 0.0;  // only used when y > x
  const double log_fail = gamma > 1.0 ? std::log1p(-1.0 / gamma)
                                      : -std::numeric_limits<double>::infinity();
  const double log_gamma = std::log(gamma);

  long y_max = 1;
  if (gamma > 1.0)
    y_max = std::max<long>(
        1, static_cast<long>(std::ceil(std::log(trunc.tail_epsilon) / log_fail)));

  std::vector<double> lg(static_cast<std::size_t>(y_max) + 2);
  for (std::size_t k = 0; k < lg.size(); ++k)
    lg[k] = std::lgamma(static_cast<double>(k) + 1.0);

  KahanSum acc;
  for (long y = 1; y <= y_max; ++y) {
    const double log_geo = (y > 1 ? (y - 1) * log_fail : 0.0) - log_gamma;
    if (log_geo == -std::numeric_limits<double>::infinity()) break;
    for (long x = 1; x <= y; ++x) {
      if (x < y && q == 0.0) continue;  // beta = 0: only the x = y term survives
      const double log_binom = lg[y] - lg[x] - lg[y - x];
      const double log_term = log_binom + x * log_p +
                              (y > x ? (y - x) * log_q : 0.0) + log_geo;
      const double weight =
          static_cast<double>(x) / (static_cast<double>(x) + (y - x) / d);
      acc.add(weight * std::exp(log_term));
    }
  }
  return acc.sum;
}

double gamma_swh_approx(double alpha_prime, double beta, double d) {
  if (!(d > 0.0)) throw ValidationError("d outside (0, inf)");
  if (alpha_prime == 0.0 && beta > 0.0) return 0.0;
  if (!(alpha_prime * d + beta > 0.0))
    throw ValidationError("alpha_prime*d + beta = 0: pool has no power");
  return alpha_prime * d / (alpha_prime * d + beta);
}

double r_swh_faw(const PowerProfile& p, const SystemParams& sys) {
  sys.validate();
  const double ta = p.alpha_prime();
  const double first = (1.0 - p.tau()) * p.alpha() / (1.0 - ta);
  if (ta == 0.0) return first;
  const double g = gamma_swh_lb(ta, p.beta(), sys.gamma, sys.d);
  const double bracket =
      sys.c_prime * p.beta() / (1.0 - ta) +
      sys.c * ta * (1.0 - p.alpha() - p.beta()) / (1.0 - ta);
  return first + g * bracket;
}

double r_swh_uba(const PowerProfile& p, const SystemParams& sys) {
  sys.validate();
  const double ta = p.alpha_prime();
  const double first = (1.0 - p.tau()) * p.alpha() / (1.0 - ta);
  if (ta == 0.0) return first;
  const double g = gamma_swh_lb(ta, p.beta(), sys.gamma, sys.d);
  const double bracket =
      sys.kappa * ta * ta / (p.beta() + ta) * first +
      sys.c_prime * (1.0 + sys.kappa * ta) * p.beta() / (1.0 - ta) +
      std::max(sys.c, sys.kappa) * ta * (1.0 - p.alpha() - p.beta()) / (1.0 - ta);
  return first + g * bracket;
}

double analytic_reward(Strategy s, const PowerProfile& p, const SystemParams& sys) {
  switch (s) {
    case Strategy::kHonest: return r_honest(p);
    case Strategy::kBwh: return r_bwh(p);
    case Strategy::kFaw: return r_faw(p, sys.c);
    case Strategy::kUba: return r_uba_lb(p, sys.kappa);
    case Strategy::kSwhFaw: return r_swh_faw(p, sys);
    case Strategy::kSwhUba: return r_swh_uba(p, sys);
  }
  throw ValidationError("unknown strategy");
}

}  // namespace poolsim
