#include "poolsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "poolsim/rng.hpp"

namespace poolsim {

namespace {

// Rounds are accumulated in fixed-size blocks; block partial sums are folded
// serially in block order, so the result does not depend on the worker count.
constexpr std::uint64_t kBlockSize = 4096;

struct Shares {
  std::vector<std::uint8_t> owner;  // 1 = attacker
  std::vector<double> age;          // age at round end
  std::vector<double> time;         // submission time, filled on demand
  std::vector<std::uint32_t> idx;   // scratch for PPLNS selection
  std::uint32_t n = 0;
  std::uint32_t attacker = 0;

  void clear() {
    owner.clear();
    age.clear();
    time.clear();
    n = 0;
    attacker = 0;
  }
  void push(bool att, double share_age) {
    owner.push_back(att ? 1 : 0);
    age.push_back(share_age);
    n += 1;
    attacker += att ? 1 : 0;
  }
};

struct RoundResult {
  double reward = 0.0;
  EventClass ev = EventClass::kNone;
  bool won = false;
  bool had_block = false;
  double block_time = 0.0;
};

// Attacker's normalized-split fraction with honestly submitted shares.
double honest_fraction(const PayoutScheme& scheme, Shares& s) {
  if (s.n == 0) return 0.0;
  switch (scheme.kind()) {
    case SchemeKind::kPps:
    case SchemeKind::kProportional:
      return static_cast<double>(s.attacker) / s.n;
    case SchemeKind::kPplns: {
      const std::uint32_t w = std::min<std::uint32_t>(scheme.window(), s.n);
      s.idx.resize(s.n);
      std::iota(s.idx.begin(), s.idx.end(), 0u);
      // The w most recent shares are the w smallest ages; ties resolve the
      // same way as the time-sorted ledger tail.
      std::nth_element(s.idx.begin(), s.idx.begin() + w, s.idx.end(),
                       [&](std::uint32_t i, std::uint32_t j) {
                         if (s.age[i] != s.age[j]) return s.age[i] < s.age[j];
                         return i > j;
                       });
      std::uint32_t att = 0;
      for (std::uint32_t k = 0; k < w; ++k) att += s.owner[s.idx[k]];
      return static_cast<double>(att) / w;
    }
    case SchemeKind::kScoreDecay: {
      double mine = 0.0, total = 0.0;
      for (std::uint32_t i = 0; i < s.n; ++i) {
        const double score = std::exp(-scheme.decay() * s.age[i]);
        total += score;
        if (s.owner[i]) mine += score;
      }
      return total > 0.0 ? mine / total : 0.0;
    }
  }
  return 0.0;
}

// Attacker's fraction when its withheld shares land at the round end with
// weight one each, against the other members' decayed scores. The withheld
// shares stay in the normalization.
double swh_fraction(double decay, const Shares& s) {
  if (s.attacker == 0) return 0.0;
  double others = 0.0;
  for (std::uint32_t i = 0; i < s.n; ++i)
    if (!s.owner[i]) others += std::exp(-decay * s.age[i]);
  const double mine = static_cast<double>(s.attacker);
  return mine / (mine + others);
}

// One full-game round. Draw order is fixed per config:
// entity, duration, withheld-block indicator, fork coin, ledger.
RoundResult run_round(const SimConfig& cfg, std::uint64_t round_index, Shares& s,
                      bool want_times) {
  RoundRng rng(cfg.seed, round_index);
  const double alpha = cfg.profile.alpha();
  const double beta = cfg.profile.beta();
  const double tau = cfg.profile.tau();
  const double ta = cfg.profile.alpha_prime();
  const Strategy st = cfg.strategy;
  const bool withhold = st != Strategy::kHonest;
  const bool faw_like = st == Strategy::kFaw || st == Strategy::kUba ||
                        st == Strategy::kSwhFaw || st == Strategy::kSwhUba;
  const bool uba_like = st == Strategy::kUba || st == Strategy::kSwhUba;
  const bool swh = is_swh(st);
  const double eff = withhold ? 1.0 - ta : 1.0;  // power that can end the round
  const double p_att = ta + beta > 0.0 ? ta / (ta + beta) : 0.0;

  RoundResult r;
  const double u = rng.next_unit();
  const double duration = rng.next_exp();

  const double p_main = (1.0 - tau) * alpha / eff;
  const double p_vatt = withhold ? 0.0 : ta;
  const double p_vother = beta / eff;
  if (u < p_main)
    r.ev = EventClass::kMainPool;
  else if (u < p_main + p_vatt)
    r.ev = EventClass::kNone;  // attacker's own victim-pool block, honest play
  else if (u < p_main + p_vatt + p_vother)
    r.ev = EventClass::kVictimOther;
  else
    r.ev = EventClass::kThirdParty;

  // P(at least one withheld block | duration); marginally exactly tau*alpha.
  if (withhold && ta > 0.0)
    r.had_block = rng.next_unit() < -std::expm1(-(ta / eff) * duration);

  bool fork_win = false;
  if (r.ev == EventClass::kThirdParty && r.had_block && faw_like &&
      cfg.sys.c > 0.0)
    fork_win = rng.next_bernoulli(cfg.sys.c);

  const bool uncle =
      uba_like && r.had_block &&
      (r.ev == EventClass::kMainPool || r.ev == EventClass::kVictimOther ||
       (r.ev == EventClass::kThirdParty && !fork_win));
  r.won = r.ev == EventClass::kVictimOther || r.ev == EventClass::kNone || fork_win;

  s.clear();
  if (r.won || uncle) {
    // Pool-block-terminated ledger: geometric share count, binomial
    // ownership, memoryless ages. Matches the analytic event terms exactly.
    const std::uint64_t n = rng.next_geometric(1.0 / cfg.sys.gamma);
    double max_age = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const bool att = rng.next_bernoulli(p_att);
      const double age = rng.next_exp();
      s.push(att, age);
      max_age = std::max(max_age, age);
    }
    r.block_time = max_age;
    if (want_times) {
      s.time.resize(s.n);
      for (std::uint32_t i = 0; i < s.n; ++i) s.time[i] = max_age - s.age[i];
    }
  } else {
    // No payout this round; shares exposed for arrival statistics only.
    r.block_time = duration;
    const double rate = (ta + beta) * cfg.sys.gamma / eff;
    if (rate > 0.0) {
      double t = rng.next_exp() / rate;
      while (t <= duration) {
        const bool att = rng.next_bernoulli(p_att);
        s.push(att, duration - t);
        if (want_times) s.time.push_back(t);
        t += rng.next_exp() / rate;
      }
    }
  }

  switch (r.ev) {
    case EventClass::kMainPool:
      r.reward = 1.0;
      if (uncle) {
        const double frac = swh ? swh_fraction(cfg.scheme.decay(), s)
                                : honest_fraction(cfg.scheme, s);
        r.reward += cfg.sys.kappa * frac;
      }
      break;
    case EventClass::kNone:
      r.reward = honest_fraction(cfg.scheme, s);
      break;
    case EventClass::kVictimOther: {
      const double pool_reward = 1.0 + (uncle ? cfg.sys.kappa : 0.0);
      if (swh)
        r.reward = cfg.sys.c_prime * swh_fraction(cfg.scheme.decay(), s) * pool_reward;
      else
        r.reward = honest_fraction(cfg.scheme, s) * pool_reward;
      break;
    }
    case EventClass::kThirdParty:
      if (fork_win)
        r.reward = swh ? swh_fraction(cfg.scheme.decay(), s)
                       : honest_fraction(cfg.scheme, s);
      else if (uncle)
        r.reward = cfg.sys.kappa * (swh ? swh_fraction(cfg.scheme.decay(), s)
                                        : honest_fraction(cfg.scheme, s));
      break;
  }
  return r;
}

// One pool-local payout round (victim pool always ends its own round).
double run_payout_round(const SimConfig& cfg, std::uint64_t round_index, Shares& s) {
  RoundRng rng(cfg.seed, round_index);
  const double ap = cfg.profile.alpha_prime();
  const double beta = cfg.profile.beta();
  const double p_att = ap / (ap + beta);

  s.clear();
  const std::uint64_t n = rng.next_geometric(1.0 / cfg.sys.gamma);
  for (std::uint64_t i = 0; i < n; ++i)
    s.push(rng.next_bernoulli(p_att), rng.next_exp());
  const bool attacker_ends = rng.next_bernoulli(p_att);

  if (is_swh(cfg.strategy)) {
    const double g = swh_fraction(cfg.scheme.decay(), s);
    return attacker_ends ? g : cfg.sys.c_prime * g;
  }
  return honest_fraction(cfg.scheme, s);
}

void tally(SimStats& st, const RoundResult& r, const Shares& s) {
  switch (r.ev) {
    case EventClass::kMainPool: st.ev_main += 1; break;
    case EventClass::kVictimOther: st.ev_victim_other += 1; break;
    case EventClass::kThirdParty: st.ev_third += 1; break;
    case EventClass::kNone: st.ev_none += 1; break;
  }
  if (r.won) {
    st.won_rounds += 1;
    st.won_shares += s.n;
    st.won_attacker_shares += s.attacker;
    st.won_share_hist[std::min<std::size_t>(s.n, SimStats::kHistMax)] += 1;
  }
}

template <typename Core>
RewardEstimate run_blocks(const SimConfig& cfg, ExecMode mode, SimStats* stats_out,
                          Core core) {
  const std::uint64_t n = cfg.n_rounds;
  const std::uint64_t nblocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<double> bsum(nblocks, 0.0), bsumsq(nblocks, 0.0);
  std::vector<SimStats> bstats(stats_out ? nblocks : 0);

  auto do_block = [&](std::int64_t bi, Shares& scratch) {
    const std::uint64_t lo = static_cast<std::uint64_t>(bi) * kBlockSize;
    const std::uint64_t hi = std::min(n, lo + kBlockSize);
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t r = lo; r < hi; ++r) {
      const double v = core(r, scratch, stats_out ? &bstats[bi] : nullptr);
      sum += v;
      sumsq += v * v;
    }
    bsum[bi] = sum;
    bsumsq[bi] = sumsq;
  };

  if (mode == ExecMode::kParallel) {
#pragma omp parallel
    {
      Shares scratch;
#pragma omp for schedule(dynamic)
      for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(nblocks); ++bi)
        do_block(bi, scratch);
    }
  } else {
    Shares scratch;
    for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(nblocks); ++bi)
      do_block(bi, scratch);
  }

  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t bi = 0; bi < nblocks; ++bi) {
    sum += bsum[bi];
    sumsq += bsumsq[bi];
  }
  if (stats_out)
    for (const SimStats& b : bstats) stats_out->merge(b);

  RewardEstimate est;
  est.n_rounds = n;
  est.seed = cfg.seed;
  est.mean = sum / static_cast<double>(n);
  if (n > 1) {
    const double var =
        std::max(0.0, sumsq - static_cast<double>(n) * est.mean * est.mean) /
        static_cast<double>(n - 1);
    est.std_err = std::sqrt(var / static_cast<double>(n));
  }
  return est;
}

}  // namespace

const char* to_string(EventClass ev) {
  switch (ev) {
    case EventClass::kMainPool: return "main-pool";
    case EventClass::kVictimOther: return "victim-other";
    case EventClass::kThirdParty: return "third-party";
    case EventClass::kNone: return "none";
  }
  return "?";
}

void SimConfig::validate() const {
  sys.validate();
  if (n_rounds < 1) throw ValidationError("n_rounds = 0, must be >= 1");
  if (is_swh(strategy) && classify(scheme) != PayoutClass::kDecayingPayout)
    throw ValidationError("SWH strategies require a decaying payout scheme");
}

SimConfig make_config(const PowerProfile& profile, const SystemParams& sys,
                      Strategy strategy, std::uint64_t n_rounds,
                      std::uint64_t seed) {
  SimConfig cfg;
  cfg.profile = profile;
  cfg.sys = sys;
  cfg.strategy = strategy;
  cfg.scheme = PayoutScheme::score_decay(sys.d);
  cfg.n_rounds = n_rounds;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

void SimStats::merge(const SimStats& o) {
  ev_main += o.ev_main;
  ev_victim_other += o.ev_victim_other;
  ev_third += o.ev_third;
  ev_none += o.ev_none;
  won_rounds += o.won_rounds;
  won_shares += o.won_shares;
  won_attacker_shares += o.won_attacker_shares;
  for (std::size_t i = 0; i < won_share_hist.size(); ++i)
    won_share_hist[i] += o.won_share_hist[i];
}

RoundOutcome simulate_round(const SimConfig& cfg, std::uint64_t round_index) {
  cfg.validate();
  Shares s;
  const RoundResult r = run_round(cfg, round_index, s, /*want_times=*/true);

  std::vector<std::uint32_t> order(s.n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
    if (s.time[i] != s.time[j]) return s.time[i] < s.time[j];
    return i < j;
  });
  std::vector<ShareEvent> events;
  events.reserve(s.n);
  for (std::uint32_t i : order)
    events.push_back({s.owner[i] ? 0u : 1u, s.time[i]});

  RoundOutcome out;
  out.event_class = r.ev;
  out.victim_pool_won = r.won;
  out.attacker_had_block = r.had_block;
  out.attacker_reward = r.reward;
  out.block_time = r.block_time;
  out.ledger = ShareLedger(2, std::move(events));
  return out;
}

RewardEstimate estimate_reward(const SimConfig& cfg, ExecMode mode,
                               SimStats* stats) {
  cfg.validate();
  return run_blocks(cfg, mode, stats,
                    [&cfg](std::uint64_t r, Shares& scratch, SimStats* st) {
                      Shares& s = scratch;
                      const RoundResult res = run_round(cfg, r, s, false);
                      if (st) tally(*st, res, s);
                      return res.reward;
                    });
}

RewardEstimate estimate_payout(const SimConfig& cfg, ExecMode mode) {
  cfg.validate();
  if (!(cfg.profile.alpha_prime() + cfg.profile.beta() > 0.0))
    throw InsufficientSampleError(
        "victim pool has no power: no victim-won rounds can be sampled");
  return run_blocks(cfg, mode, nullptr,
                    [&cfg](std::uint64_t r, Shares& scratch, SimStats*) {
                      return run_payout_round(cfg, r, scratch);
                    });
}

}  // namespace poolsim
