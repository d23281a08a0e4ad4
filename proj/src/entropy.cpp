#include "ising/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ising/norms.hpp"
#include "ising/rng.hpp"

namespace ising {

namespace {

inline double xlogx(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

void require_cap(int n, int cap, const char* who) {
  if (n > cap)
    throw capacity_error(std::string(who) + ": n=" + std::to_string(n) +
                         " exceeds the enumeration cap " + std::to_string(cap));
}

}  // namespace

std::vector<double> influence_matrix(const IsingModel& model) {
  const int n = model.n;
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        a[static_cast<std::size_t>(i) * n + j] = std::abs(model.coupling(i, j));
  return a;
}

double beta_exact(const IsingModel& model, int cap, Exec mode) {
  require_cap(model.n, cap, "beta_exact");
  const std::size_t count = std::size_t(1) << model.n;
  // Minimum over all (configuration, site) of the conditional probability of
  // the configuration's own spin; both p and 1-p occur across configurations.
  const double neg_min = block_max(
      count,
      [&](std::size_t m) {
        double worst = -1.0;
        for (int i = 0; i < model.n; ++i) {
          const double p =
              conditional_plus_prob(model, i, static_cast<SpinMask>(m));
          const double own = spin(static_cast<SpinMask>(m), i) > 0 ? p : 1.0 - p;
          worst = std::max(worst, -own);
        }
        return worst;
      },
      mode);
  return -neg_min;
}

double beta_bound(const IsingModel& model) {
  const DobrushinReport r = dobrushin_margin(model);
  return 1.0 / (1.0 + std::exp(2.0 * ((1.0 - r.rho) + r.alpha)));
}

ATReport at_report(const IsingModel& model, int cap) {
  ATReport rep;
  const DobrushinReport dr = dobrushin_margin(model);
  rep.rho = dr.rho;
  rep.alpha = dr.alpha;
  rep.dobrushin_holds = dr.holds;
  if (model.n <= cap) {
    rep.beta = beta_exact(model, cap);
    rep.beta_exact = true;
  } else {
    rep.beta = beta_bound(model);
    rep.beta_exact = false;
  }
  rep.influence_opnorm = opnorm_nonneg_sym(influence_matrix(model), model.n);
  if (rep.influence_opnorm < 1.0 && rep.beta > 0.0) {
    const double gap = 1.0 - rep.influence_opnorm;
    rep.at_constant = 2.0 / (rep.beta * gap * gap);
  } else {
    rep.at_constant = std::numeric_limits<double>::infinity();
  }
  return rep;
}

double entropy_functional(const std::vector<double>& f, const ExactLaw& law,
                          Exec mode) {
  if (f.size() != law.probs.size())
    throw std::invalid_argument("entropy_functional: table size mismatch");
  for (double v : f)
    if (!(v >= 0.0))
      throw std::invalid_argument("entropy_functional: f must be nonnegative");
  const double mean = expectation(f, law, mode);
  const double eflogf = block_sum(
      f.size(), [&](std::size_t m) { return law.probs[m] * xlogx(f[m]); },
      mode);
  return eflogf - xlogx(mean);
}

std::vector<double> conditional_table(const IsingModel& model, Exec mode) {
  const std::size_t count = std::size_t(1) << model.n;
  const int n = model.n;
  std::vector<double> tab(count * static_cast<std::size_t>(n));
  parallel_for(
      count,
      [&](std::size_t m) {
        for (int i = 0; i < n; ++i)
          tab[m * n + i] =
              conditional_plus_prob(model, i, static_cast<SpinMask>(m));
      },
      mode);
  return tab;
}

double at_rhs(const std::vector<double>& f, const IsingModel& model,
              const ExactLaw& law, const std::vector<double>* cond_plus,
              Exec mode) {
  const std::size_t count = law.probs.size();
  if (f.size() != count)
    throw std::invalid_argument("at_rhs: table size mismatch");
  const int n = model.n;
  std::vector<double> local;
  if (!cond_plus) {
    local = conditional_table(model, mode);
    cond_plus = &local;
  }
  // Each configuration contributes mu(x) * sum_i Ent over the two-point
  // conditional at site i; the conditional entropy depends on x only
  // through the coordinates other than i.
  return block_sum(
      count,
      [&](std::size_t m) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
          const double pp = (*cond_plus)[m * n + i];
          const double fp = f[m | (std::size_t(1) << i)];
          const double fm = f[m & ~(std::size_t(1) << i)];
          const double mean = pp * fp + (1.0 - pp) * fm;
          s += pp * xlogx(fp) + (1.0 - pp) * xlogx(fm) - xlogx(mean);
        }
        return law.probs[m] * s;
      },
      mode);
}

ATVerification verify_at(const IsingModel& model, int trials,
                         std::uint64_t seed, double constant_override, int cap,
                         Exec mode) {
  require_cap(model.n, cap, "verify_at");
  if (trials < 1) throw std::invalid_argument("verify_at: trials must be >= 1");
  const ExactLaw law = exact_law(model, cap, mode);
  const std::vector<double> cond = conditional_table(model, mode);
  const double C =
      constant_override > 0.0 ? constant_override : at_report(model, cap).at_constant;
  const std::size_t count = law.probs.size();

  ATVerification rep;
  rep.trials = trials;
  rep.constant_used = C;
  rep.rows.resize(trials);
  parallel_for(
      static_cast<std::size_t>(trials),
      [&](std::size_t t) {
        Rng rng(mix_seed(seed, t));
        std::vector<double> f(count);
        for (auto& v : f) v = std::exp(rng.normal());
        ATTrialRow row;
        row.ent = entropy_functional(f, law, Exec::Serial);
        const double rhs = at_rhs(f, model, law, &cond, Exec::Serial);
        row.bound = C * rhs;
        row.ratio = row.bound > 0.0 ? row.ent / row.bound : 0.0;
        rep.rows[t] = row;
      },
      mode);
  for (const auto& row : rep.rows) {
    rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    // Tolerance absorbs floating-point noise in the two entropy sums.
    if (row.ent > row.bound * (1.0 + 1e-10) + 1e-12) ++rep.violations;
  }
  return rep;
}

DiscreteGradient discrete_gradient(const std::vector<double>& f,
                                   const IsingModel& model, int cap,
                                   Exec mode) {
  require_cap(model.n, cap, "discrete_gradient");
  const std::size_t count = std::size_t(1) << model.n;
  if (f.size() != count)
    throw std::invalid_argument("discrete_gradient: table size mismatch");
  const int n = model.n;
  DiscreteGradient g;
  g.n = n;
  g.values.resize(count * static_cast<std::size_t>(n));
  parallel_for(
      count,
      [&](std::size_t m) {
        for (int i = 0; i < n; ++i) {
          const double pp =
              conditional_plus_prob(model, i, static_cast<SpinMask>(m));
          const double flip = f[m ^ (std::size_t(1) << i)];
          const double q_flip =
              spin(static_cast<SpinMask>(m), i) > 0 ? 1.0 - pp : pp;
          const double diff = f[m] - flip;
          g.values[m * n + i] = std::abs(diff) * std::sqrt(0.5 * q_flip);
        }
      },
      mode);
  return g;
}

}  // namespace ising
