"""Re-running the classification under alternative weight vectors or caution parameters."""
import collections
import logging
import pandas as pd
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.mcdm.famcdm as fa
import fzaura.utils.multiprocessing as mp


class SensitivityReport(object):
  """Classifications of one problem under several scenarios.

  Parameters
  ----------
  kind : 'weights' or 'alpha'
    What varies between scenarios.
  names : list of str
    The scenario names.
  values : list
    The weight vector or alpha value of each scenario.
  scores : OrderedDict
    Scenario name to its score table.
  classifications : OrderedDict
    Scenario name to its classify() table.

  Attributes
  ----------
  table : pd.DataFrame
    Alternatives by scenarios, holding the assigned classes.
  changed : list of str
    The alternatives whose class is not the same in every scenario.

  """

  def __init__(self, kind, names, values, scores, classifications):
    self.kind = kind
    self.names = list(names)
    self.values = list(values)
    self.scores = scores
    self.classifications = classifications
    self.table = pd.DataFrame(
      collections.OrderedDict((n, classifications[n]['class']) for n in self.names)
    )
    self.changed = [a for a, row in self.table.iterrows() if len(set(row.values)) > 1]

  def __repr__(self):
    return 'SensitivityReport({!r}, scenarios={}, changed={})'.format(self.kind, self.names, self.changed)

  def is_stable(self, alternative):
    return alternative not in self.changed

  def alternative_scores(self, alternative):
    """Scenarios by classes table of one alternative's scores."""
    rows = collections.OrderedDict((n, self.scores[n].loc[alternative]) for n in self.names)
    return pd.DataFrame(rows).T

  def to_dict(self):
    return {
      'kind': self.kind,
      'scenarios': [
        {
          'name': n,
          'value': v,
          'scores': self.scores[n].values.tolist(),
          'classification': self.classifications[n]['class'].tolist()
        }
        for n, v in zip(self.names, self.values)
      ],
      'alternatives': list(self.table.index),
      'classes': list(next(iter(self.scores.values())).columns),
      'changed': self.changed
    }


def _scenario_names(scenarios, prefix):
  if isinstance(scenarios, dict):
    return [str(n) for n in scenarios], list(scenarios.values())
  scenarios = list(scenarios)
  return ['{}{}'.format(prefix, k + 1) for k in range(len(scenarios))], scenarios


def weight_sensitivity(problem, scenarios, alpha=gl.DEFAULT_ALPHA, num_threads=1):
  """Classify under every weight vector in scenarios.

  Parameters
  ----------
  problem : DecisionProblem
    The problem. Its own weights are ignored.
  scenarios : dict or list
    Scenario name to weight vector, or a list of weight vectors named S1, S2, ...
  alpha : float
    The caution parameter used in every scenario.
  num_threads : int
    Number of pathos workers the scenarios are spread over.

  Returns
  -------
  SensitivityReport

  """
  names, vectors = _scenario_names(scenarios, 'S')
  if not names:
    raise er.WeightError("weight_sensitivity needs at least one scenario")
  vectors = [
    fa.check_weights(v, len(problem.criteria), problem.eps, label="Weights of scenario '{}'".format(n)).tolist()
    for n, v in zip(names, vectors)
  ]
  if not 0.0 <= float(alpha) <= 1.0:
    raise er.ProblemError("alpha must lie in [0, 1]. Got {}".format(alpha))

  # Normalization does not depend on the weights.
  normalized = fa.normalize(problem)

  def run_scenario(weights):
    aura = fa.build_aura_matrix(normalized, weights, problem.alternatives, problem.eps)
    scores = fa.score(fa.approximate_classes(problem, aura), alpha)
    return scores, fa.classify(scores, problem.eps)

  results = mp.multi_map(run_scenario, vectors, num_threads)
  for name in names:
    logging.info("Weight scenario %s done", name)
  scores = collections.OrderedDict((n, r[0]) for n, r in zip(names, results))
  classifications = collections.OrderedDict((n, r[1]) for n, r in zip(names, results))
  return SensitivityReport('weights', names, vectors, scores, classifications)


def alpha_sweep(problem, alphas, num_threads=1):
  """Classify at every caution parameter in alphas, with the problem's own weights.

  The class approximations are computed once. Scenarios are named after their alpha.
  """
  alphas = [float(a) for a in alphas]
  if not alphas:
    raise er.ProblemError("alpha_sweep needs at least one alpha")
  for alpha in alphas:
    if not 0.0 <= alpha <= 1.0:
      raise er.ProblemError("alpha must lie in [0, 1]. Got {}".format(alpha))
  names = ['{:g}'.format(a) for a in alphas]
  if len(set(names)) != len(names):
    raise er.ProblemError("alpha values must be distinct. Got {}".format(names))

  normalized = fa.normalize(problem)
  aura = fa.build_aura_matrix(normalized, problem.weights, problem.alternatives, problem.eps)
  pairs = fa.approximate_classes(problem, aura)

  def run_scenario(alpha):
    scores = fa.score(pairs, alpha)
    return scores, fa.classify(scores, problem.eps)

  results = mp.multi_map(run_scenario, alphas, num_threads)
  logging.info("Alpha sweep over %s done", names)
  scores = collections.OrderedDict((n, r[0]) for n, r in zip(names, results))
  classifications = collections.OrderedDict((n, r[1]) for n, r in zip(names, results))
  return SensitivityReport('alpha', names, alphas, scores, classifications)
