#pragma once

#include <cstdint>
#include <vector>

#include "ising/model.hpp"

namespace ising {

/// Approximate-tensorization diagnostics for a model.
struct ATReport {
  double beta = 0.0;            // min conditional single-site probability
  bool beta_exact = false;      // enumeration (true) or analytic bound (false)
  double influence_opnorm = 0.0;  // l2->l2 norm of the |J_ij| bound matrix
  double at_constant = 0.0;     // 2 / (beta (1 - opnorm)^2), +inf otherwise
  bool dobrushin_holds = false;
  double rho = 0.0;
  double alpha = 0.0;
};

/// The certified influence bound matrix: |J_ij| off the diagonal, 0 on it.
std::vector<double> influence_matrix(const IsingModel& model);

/// Exact beta: min over sites and configurations of the conditional
/// probability of the current spin. O(n 2^n); capacity-limited.
double beta_exact(const IsingModel& model, int cap = kDefaultEnumCap,
                  Exec mode = Exec::Parallel);

/// Analytic lower bound 1 / (1 + exp(2((1 - rho) + alpha))) from the
/// conditional-field bound |m_i| <= (1 - rho) + alpha.
double beta_bound(const IsingModel& model);

/// Full diagnostics; beta is exact when n <= cap, the bound otherwise.
ATReport at_report(const IsingModel& model, int cap = kDefaultEnumCap);

/// Ent_mu(f) = E f log f - E f log E f, with 0 log 0 = 0. f must be
/// entrywise nonnegative; nonnegative by Jensen.
double entropy_functional(const std::vector<double>& f, const ExactLaw& law,
                          Exec mode = Exec::Parallel);

/// sum_i E_mu Ent_{mu_i(.|rest)}(f): the right-hand side of the approximate
/// tensorization inequality before the constant. `cond_plus` optionally
/// supplies the precomputed table cond_plus[m * n + i].
double at_rhs(const std::vector<double>& f, const IsingModel& model,
              const ExactLaw& law,
              const std::vector<double>* cond_plus = nullptr,
              Exec mode = Exec::Parallel);

/// Precomputes conditional_plus_prob for every (configuration, site) pair.
std::vector<double> conditional_table(const IsingModel& model,
                                      Exec mode = Exec::Parallel);

struct ATTrialRow {
  double ent = 0.0;    // Ent_mu(f)
  double bound = 0.0;  // C * sum_i E Ent_i(f)
  double ratio = 0.0;
};

struct ATVerification {
  int trials = 0;
  int violations = 0;
  double max_ratio = 0.0;
  double constant_used = 0.0;
  std::vector<ATTrialRow> rows;
};

/// Draws `trials` random positive functions f = exp(standard normal table)
/// and checks Ent_mu(f) <= C sum_i E Ent_i(f). C defaults to the Marton /
/// Goetze-Sambale-Sinulis constant from at_report; pass `constant_override`
/// > 0 to test another value (e.g. 1 for product measures).
ATVerification verify_at(const IsingModel& model, int trials,
                         std::uint64_t seed, double constant_override = 0.0,
                         int cap = 8, Exec mode = Exec::Parallel);

/// Per-site discrete gradients d_i f(x) over the conditional single-site
/// resampling measure, for every configuration.
struct DiscreteGradient {
  int n = 0;
  std::vector<double> values;  // values[m * n + i]

  double at(SpinMask m, int i) const {
    return values[static_cast<std::size_t>(m) * n + i];
  }
  /// |d f(x)|^2 for one configuration.
  double sq_norm(SpinMask m) const {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += at(m, i) * at(m, i);
    return s;
  }
};

DiscreteGradient discrete_gradient(const std::vector<double>& f,
                                   const IsingModel& model,
                                   int cap = kDefaultEnumCap,
                                   Exec mode = Exec::Parallel);

}  // namespace ising
