"""The aura based multi criteria classification pipeline.

Criteria are min-max normalized, the alternatives' pairwise weighted L1 similarity becomes a scope function, every decision class is approximated from below and above with it, and the two approximations are blended into a score whose argmax is the assigned class.
"""
import collections
import logging
import numpy as np
import pandas as pd
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.utils.array_functions as af
import fzaura.spaces.lattice as la
import fzaura.spaces.topology as to
import fzaura.spaces.aura as au
import fzaura.rough.approximation as ra
import fzaura.mcdm.norm_transform as nt


class CriterionSpec(object):
  """A decision criterion.

  Parameters
  ----------
  name : str
    The criterion name.
  kind : 'benefit' or 'cost'
    Whether larger raw values are better or worse.
  weight : float
    The weight in [0, 1].

  """

  def __init__(self, name, kind='benefit', weight=0.0):
    if kind not in nt.CRITERION_KINDS:
      raise er.ProblemError(
        "{} is an invalid criterion kind for '{}'. Accepted kinds are {}".format(kind, name, nt.CRITERION_KINDS)
      )
    weight = af.as_floats(weight, "The weight of '{}'".format(name), er.WeightError)
    if weight.ndim:
      raise er.WeightError("The weight of '{}' must be a single number. Got {}".format(name, weight.tolist()))
    weight = float(weight)
    if not 0.0 <= weight <= 1.0:
      raise er.WeightError("The weight of '{}' must lie in [0, 1]. Got {}".format(name, weight))
    self.name = str(name)
    self.kind = kind
    self.weight = weight

  def __repr__(self):
    return 'CriterionSpec({!r}, {!r}, {})'.format(self.name, self.kind, self.weight)

  def to_dict(self):
    return {'name': self.name, 'kind': self.kind, 'weight': self.weight}


def check_weights(weights, num_criteria, eps=gl.EPS, label='weights'):
  """Return weights as an array, raising WeightError unless they are non-negative, one per criterion and sum to 1 within eps."""
  weights = af.as_floats(weights, label, er.WeightError).ravel()
  if weights.shape != (num_criteria,):
    raise er.WeightError("{} must have {} entries. Got {}".format(label, num_criteria, weights.shape[0]))
  if np.isnan(weights).any() or (weights < 0).any():
    raise er.WeightError("{} must be non-negative. Got {}".format(label, weights.tolist()))
  total = weights.sum()
  if abs(total - 1.0) > eps:
    raise er.WeightError("{} must sum to 1. Got {}".format(label, total))
  return weights


class DecisionProblem(object):
  """Alternatives described by criteria values, with partially known memberships in decision classes.

  Parameters
  ----------
  alternatives : Universe or iterable of str
    The alternatives.
  criteria : list of CriterionSpec or dicts
    The criteria, in matrix column order. Weights must sum to 1.
  matrix : array like, shape (num_alternatives, num_criteria)
    Raw criteria values.
  classes : dict or pd.DataFrame
    Maps each class name to one grade per alternative. None or NaN marks an unknown grade, which counts as 0 when computing.
  eps : float
    Tolerance of the grade and weight checks.

  Attributes
  ----------
  memberships : pd.DataFrame
    Alternatives by classes, NaN where unknown.

  """

  def __init__(self, alternatives, criteria, matrix, classes, eps=gl.EPS):
    if not isinstance(alternatives, la.Universe):
      alternatives = la.Universe([str(a) for a in alternatives])
    criteria = [c if isinstance(c, CriterionSpec) else CriterionSpec(**c) for c in criteria]
    if not criteria:
      raise er.ProblemError("A decision problem needs at least one criterion")
    names = [c.name for c in criteria]
    if len(set(names)) != len(names):
      raise er.ProblemError("Criterion names must be distinct. Got {}".format(names))

    matrix = af.as_floats(matrix, 'Decision matrix values', er.ProblemError)
    shape = (alternatives.size, len(criteria))
    if matrix.shape != shape:
      raise er.ProblemError("Decision matrix must have shape {}. Got {}".format(shape, matrix.shape))
    if not np.isfinite(matrix).all():
      raise er.ProblemError("Decision matrix values must be finite")

    if isinstance(classes, pd.DataFrame):
      classes = collections.OrderedDict((str(c), classes[c].tolist()) for c in classes.columns)
    if not classes:
      raise er.ProblemError("A decision problem needs at least one class")

    memberships = collections.OrderedDict()
    for name, values in classes.items():
      values = [np.nan if v is None else v for v in values]
      values = af.as_floats(values, "Grades of class '{}'".format(name))
      if values.shape != (alternatives.size,):
        raise er.ProblemError(
          "Class '{}' has {} grades for {} alternatives".format(name, values.size, alternatives.size)
        )
      known = ~np.isnan(values)
      if known.any() and (values[known].min() < -eps or values[known].max() > 1.0 + eps):
        raise er.GradeError("Grades of class '{}' must lie in [0, 1]".format(name))
      values[known] = np.clip(values[known], 0.0, 1.0)
      memberships[str(name)] = values

    self.eps = eps
    self.alternatives = alternatives
    self.criteria = criteria
    self.matrix = matrix
    self.memberships = pd.DataFrame(memberships, index=list(alternatives.points))
    check_weights(self.weights, len(criteria), eps)

  def __repr__(self):
    return 'DecisionProblem({} alternatives, {} criteria, classes={})'.format(
      self.alternatives.size, len(self.criteria), self.class_names
    )

  @property
  def weights(self):
    return np.array([c.weight for c in self.criteria])

  @property
  def kinds(self):
    return [c.kind for c in self.criteria]

  @property
  def criteria_names(self):
    return [c.name for c in self.criteria]

  @property
  def class_names(self):
    return list(self.memberships.columns)

  def decision_frame(self):
    """The raw decision matrix as a DataFrame."""
    return pd.DataFrame(self.matrix, index=list(self.alternatives.points), columns=self.criteria_names)

  def unknown_mask(self):
    return self.memberships.isnull()

  def resolved_classes(self):
    """Each class as a FuzzySet, unknown grades resolved to 0."""
    resolved = collections.OrderedDict()
    for name in self.class_names:
      resolved[name] = la.FuzzySet(self.alternatives, self.memberships[name].fillna(0.0).values)
    return resolved

  def with_weights(self, weights):
    """A copy of the problem with new criteria weights."""
    weights = check_weights(weights, len(self.criteria), self.eps)
    criteria = [CriterionSpec(c.name, c.kind, w) for c, w in zip(self.criteria, weights)]
    classes = collections.OrderedDict((n, self.memberships[n].tolist()) for n in self.class_names)
    return DecisionProblem(self.alternatives, criteria, self.matrix, classes, self.eps)

  def to_dict(self):
    classes = collections.OrderedDict()
    for name in self.class_names:
      classes[name] = [None if np.isnan(v) else float(v) for v in self.memberships[name].values]
    return {
      'alternatives': list(self.alternatives.points),
      'criteria': [c.to_dict() for c in self.criteria],
      'matrix': self.matrix.tolist(),
      'classes': classes
    }


class RunResult(object):
  """Everything one pipeline run produces.

  Attributes
  ----------
  normalized : pd.DataFrame
    The normalized decision matrix.
  aura : ScopeFunction
    The similarity aura of every alternative.
  pairs : OrderedDict
    Class name to its ApproximationPair.
  scores : pd.DataFrame
    Alternatives by classes.
  classification : pd.DataFrame
    Columns 'class', 'score' and 'tie'.
  ranking : pd.DataFrame
    Per alternative, the classes by descending score.
  global_accuracy : float
    Mean accuracy of the class approximations.
  alpha : float
    The caution parameter the scores were blended with.

  """

  def __init__(self, normalized, aura, pairs, scores, classification, ranking, global_accuracy, alpha):
    self.normalized = normalized
    self.aura = aura
    self.pairs = pairs
    self.scores = scores
    self.classification = classification
    self.ranking = ranking
    self.global_accuracy = global_accuracy
    self.alpha = alpha

  def aura_frame(self):
    points = list(self.aura.universe.points)
    return pd.DataFrame(np.array(self.aura.matrix), index=points, columns=points)

  def lower_frame(self):
    return approximation_frame(self.pairs, 'lower')

  def upper_frame(self):
    return approximation_frame(self.pairs, 'upper')

  def to_dict(self):
    return {
      'alpha': self.alpha,
      'normalized': self.normalized.values.tolist(),
      'aura': self.aura.to_dict(),
      'pairs': collections.OrderedDict((n, p.to_dict()) for n, p in self.pairs.items()),
      'scores': self.scores.values.tolist(),
      'classes': list(self.scores.columns),
      'classification': collections.OrderedDict(
        (a, {'class': row['class'], 'score': float(row['score']), 'tie': bool(row['tie'])})
        for a, row in self.classification.iterrows()
      ),
      'ranking': collections.OrderedDict((a, list(row.values)) for a, row in self.ranking.iterrows()),
      'global_accuracy': self.global_accuracy
    }


def approximation_frame(pairs, which):
  """Alternatives by classes table of the 'lower' or 'upper' approximations."""
  if which not in ('lower', 'upper', 'boundary'):
    raise ValueError("{} is not an approximation. Use 'lower', 'upper' or 'boundary'".format(which))
  columns = collections.OrderedDict((n, getattr(p, which).grades) for n, p in pairs.items())
  universe = next(iter(pairs.values())).subject.universe
  return pd.DataFrame(columns, index=list(universe.points))


def fit_normaliser(problem):
  """A NormTransform fitted on the problem's decision matrix."""
  trans = nt.NormTransform(name='criteria', kinds=problem.kinds)
  trans.calc_global_values(problem.decision_frame())
  return trans


def normalize(problem, normaliser=None):
  """Min-max normalize every criterion column. Cost criteria are reversed and constant columns become 0.

  Parameters
  ----------
  problem : DecisionProblem
    The problem.
  normaliser : NormTransform or None
    An already fitted transform, for instance one saved from an earlier run. Fitted on the problem when None.

  Returns
  -------
  pd.DataFrame
    Alternatives by criteria, every value in [0, 1].

  """
  if normaliser is None:
    normaliser = fit_normaliser(problem)
  elif not normaliser.is_calc_run:
    raise er.ProblemError("The normaliser has not been fitted")
  elif list(normaliser.cols) != problem.criteria_names or list(normaliser.kinds) != problem.kinds:
    raise er.ProblemError(
      "The normaliser was fitted on criteria {} {}, the problem has {} {}".format(
        list(normaliser.cols), list(normaliser.kinds), problem.criteria_names, problem.kinds
      )
    )
  return normaliser.transform(problem.decision_frame())


def build_aura_matrix(normalized, weights, universe=None, eps=gl.EPS):
  """Similarity aura a(u_i)(u_j) = 1 - sum_k w_k |f_ik - f_jk|.

  Parameters
  ----------
  normalized : pd.DataFrame or array like
    The normalized decision matrix. A DataFrame's index names the alternatives.
  weights : array like
    One weight per criterion, summing to 1 within eps.
  universe : Universe or None
    Required when normalized is not a DataFrame.

  Returns
  -------
  ScopeFunction
    Symmetric, with a unit diagonal.

  """
  if universe is None:
    if not isinstance(normalized, pd.DataFrame):
      raise er.ProblemError("build_aura_matrix needs a universe when given a bare matrix")
    universe = la.Universe([str(i) for i in normalized.index])
  values = np.asarray(normalized, dtype=np.float64)
  if values.ndim != 2 or values.shape[0] != universe.size:
    raise er.ProblemError(
      "Normalized matrix must have {} rows. Got shape {}".format(universe.size, values.shape)
    )
  weights = check_weights(weights, values.shape[1], eps)

  distance = np.abs(values[:, np.newaxis, :] - values[np.newaxis, :, :]).dot(weights)
  return au.ScopeFunction(universe, np.clip(1.0 - distance, 0.0, 1.0))


def approximate_classes(problem, aura):
  """Aura lower and upper approximation of every class, unknown grades counted as 0."""
  if aura.universe != problem.alternatives:
    raise er.UniverseMismatchError(
      "The aura is over {}, the problem over {}".format(list(aura.universe.points), list(problem.alternatives.points))
    )
  space = au.AuraSpace(problem.alternatives, to.DiscreteTopology(problem.alternatives), aura)
  pairs = collections.OrderedDict()
  for name, mu in problem.resolved_classes().items():
    pairs[name] = ra.approximate(space, mu)
  return pairs


def score(pairs, alpha=gl.DEFAULT_ALPHA):
  """S(u, D) = alpha * lower(u) + (1 - alpha) * upper(u), as an alternatives by classes DataFrame."""
  if not pairs:
    raise er.ProblemError("Nothing to score: no class approximations given")
  alpha = af.as_floats(alpha, 'alpha', er.ProblemError)
  if alpha.ndim:
    raise er.ProblemError("alpha must be a single number. Got {}".format(alpha.tolist()))
  alpha = float(alpha)
  if not 0.0 <= alpha <= 1.0:
    raise er.ProblemError("alpha must lie in [0, 1]. Got {}".format(alpha))
  lower = approximation_frame(pairs, 'lower')
  upper = approximation_frame(pairs, 'upper')
  return (alpha * lower + (1.0 - alpha) * upper).clip(0.0, 1.0)


def classify(scores, eps=gl.EPS):
  """Assign every alternative the class with the highest score.

  Ties within eps go to the lowest class index and are flagged. A row of zero scores is Undetermined.

  Returns
  -------
  pd.DataFrame
    Columns 'class', 'score' and 'tie', indexed like scores.

  """
  if scores.shape[1] == 0:
    raise er.ProblemError("classify needs at least one class")
  classes = list(scores.columns)
  rows = []
  for alternative, row in zip(scores.index, scores.values):
    top = float(row.max())
    if top <= eps:
      rows.append((gl.UNDETERMINED, top, False))
      continue
    near_top = np.flatnonzero(row >= top - eps)
    best = int(near_top[0])
    tie = near_top.size > 1
    if tie:
      tied = [classes[i] for i in near_top]
      logging.warning("Alternative %s has tied classes %s, choosing %s.", alternative, tied, classes[best])
    rows.append((classes[best], top, tie))
  return pd.DataFrame(rows, index=scores.index, columns=['class', 'score', 'tie'])


def rank_classes(scores):
  """Per alternative, the class names by descending score. Equal scores keep class order."""
  order = np.argsort(-scores.values, axis=1, kind='stable')
  classes = np.array(scores.columns)
  columns = ['rank_{}'.format(k + 1) for k in range(scores.shape[1])]
  return pd.DataFrame(classes[order], index=scores.index, columns=columns)


def global_accuracy(pairs, eps=gl.EPS):
  """Mean of the per class accuracies."""
  if not pairs:
    raise er.ProblemError("global_accuracy needs at least one class")
  return float(np.mean([ra.pair_accuracy(p, eps)[0] for p in pairs.values()]))


def run(problem, alpha=gl.DEFAULT_ALPHA, normalized=None):
  """Run the whole pipeline.

  Parameters
  ----------
  problem : DecisionProblem
    The problem.
  alpha : float
    Caution parameter in [0, 1]. 0 scores by the upper approximation only, 1 by the lower only.
  normalized : pd.DataFrame or None
    A precomputed normalize(problem).

  Returns
  -------
  RunResult

  """
  if normalized is None:
    normalized = normalize(problem)
  aura = build_aura_matrix(normalized, problem.weights, problem.alternatives, problem.eps)
  pairs = approximate_classes(problem, aura)
  scores = score(pairs, alpha)
  classification = classify(scores, problem.eps)
  result = RunResult(
    normalized, aura, pairs, scores, classification, rank_classes(scores),
    global_accuracy(pairs, problem.eps), float(alpha)
  )
  logging.info("Classified %s alternatives into %s classes at alpha=%s", problem.alternatives.size, len(pairs), alpha)
  return result


def reference_accuracy(result, labels):
  """Share of the labelled alternatives whose assigned class equals their label.

  Parameters
  ----------
  result : RunResult
    A pipeline run.
  labels : dict
    Alternative name to its known class.

  """
  if not labels:
    raise er.ProblemError("reference_accuracy needs at least one labelled alternative")
  classification = result.classification
  hits = 0
  for alternative, label in labels.items():
    if alternative not in classification.index:
      raise er.UniverseError("Unknown alternative '{}'".format(alternative))
    hits += classification.loc[alternative, 'class'] == label
  return float(hits) / len(labels)


def known_labels(problem):
  """The argmax class of every alternative whose memberships are all known."""
  known = ~problem.unknown_mask().any(axis=1)
  frame = problem.memberships[known]
  return collections.OrderedDict((a, frame.columns[int(np.argmax(row))]) for a, row in zip(frame.index, frame.values))
