"""Aura based rough approximations and the classical models they specialize to."""
import numpy as np
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.verdict as ve
import fzaura.spaces.lattice as la
import fzaura.spaces.aura as au
import fzaura.utils.array_functions as af


class ApproximationPair(object):
  """Lower and upper approximation of a fuzzy set, and the boundary between them.

  Parameters
  ----------
  subject : FuzzySet
    The approximated set.
  lower : FuzzySet
    The lower approximation. Lies below subject.
  upper : FuzzySet
    The upper approximation. Lies above subject.

  Attributes
  ----------
  boundary : FuzzySet
    upper - lower.

  """

  def __init__(self, subject, lower, upper):
    la.check_same_universe(subject, lower, upper)
    self.subject = subject
    self.lower = lower
    self.upper = upper
    self.boundary = la.FuzzySet._trusted(subject.universe, np.clip(upper.grades - lower.grades, 0.0, 1.0))

  def __repr__(self):
    return 'ApproximationPair(lower={!r}, upper={!r})'.format(self.lower, self.upper)

  def to_dict(self):
    return {
      'universe': list(self.subject.universe.points),
      'lower': self.lower.grades.tolist(),
      'upper': self.upper.grades.tolist(),
      'boundary': self.boundary.grades.tolist()
    }


class FuzzyRelation(object):
  """A fuzzy binary relation on a universe.

  Parameters
  ----------
  universe : Universe
    The universe.
  matrix : array like, shape (n, n)
    matrix[i, j] is the grade of R(x_i, x_j).

  """

  def __init__(self, universe, matrix, eps=gl.EPS):
    matrix = af.clean_grades(matrix, eps, name='relation grades')
    if matrix.shape != (universe.size, universe.size):
      raise er.GradeError(
        "Relation matrix must have shape {}. Got {}".format((universe.size, universe.size), matrix.shape)
      )
    self.universe = universe
    self.matrix = af.freeze(matrix)

  @classmethod
  def from_scope(cls, scope):
    """R(x, y) := a(x)(y)."""
    return cls(scope.universe, scope.matrix)

  def is_reflexive(self):
    return bool(np.all(np.diag(self.matrix) == 1.0))


def approximate(space, mu):
  """Aura lower and upper approximations: the aura interior and the aura closure of mu."""
  return ApproximationPair(mu, au.aura_interior(space, mu), au.aura_closure(space, mu))


def dubois_prade(rel, mu):
  """Fuzzy rough approximations of a reflexive fuzzy relation.

  lower(x) = inf_y max(1 - R(x, y), mu(y)) and upper(x) = sup_y min(R(x, y), mu(y)).
  """
  if not rel.is_reflexive():
    raise er.ScopeError("Dubois-Prade approximations need a reflexive relation")
  if mu.universe != rel.universe:
    raise er.UniverseMismatchError(
      "Universe mismatch: relation is over {}, set is over {}".format(list(rel.universe.points), list(mu.universe.points))
    )
  lower = la.FuzzySet._trusted(mu.universe, af.inf_max(rel.matrix, mu.grades))
  upper = la.FuzzySet._trusted(mu.universe, af.sup_min(rel.matrix, mu.grades))
  return ApproximationPair(mu, lower, upper)


def check_partition(universe, partition):
  """Raise UniverseError unless partition is a list of non-empty, disjoint blocks covering universe."""
  seen = set()
  for block in partition:
    if not block:
      raise er.UniverseError("Partition blocks must be non-empty")
    for point in block:
      universe.position(point)
      if point in seen:
        raise er.UniverseError("Point '{}' appears in more than one block".format(point))
      seen.add(point)
  missing = [p for p in universe.points if p not in seen]
  if missing:
    raise er.UniverseError("Partition does not cover '{}'".format(missing[0]))


def partition_scope(universe, partition):
  """The crisp scope whose aura of x is the block containing x."""
  check_partition(universe, partition)
  matrix = np.zeros((universe.size, universe.size))
  for block in partition:
    idx = universe.positions(block)
    matrix[np.ix_(idx, idx)] = 1.0
  return au.ScopeFunction(universe, matrix)


def pawlak(universe, partition, subset):
  """Classical rough approximations of a crisp subset under an equivalence given by its partition.

  Returns
  -------
  lower : frozenset of str
    Union of the blocks contained in subset.
  upper : frozenset of str
    Union of the blocks meeting subset.

  """
  check_partition(universe, partition)
  subset = frozenset(subset)
  for point in subset:
    universe.position(point)

  lower = set()
  upper = set()
  for block in partition:
    block = frozenset(block)
    if block <= subset:
      lower |= block
    if block & subset:
      upper |= block
  return frozenset(lower), frozenset(upper)


def crisp_aura_approximation(space, subset):
  """The crisp aura model for a crisp scope: lower = {x : a(x) inside subset}, upper = {x : a(x) meets subset}."""
  if not au.classify_scope(space).crisp:
    raise er.InapplicableError("The crisp aura model needs a crisp scope function")
  universe = space.universe
  inside = np.zeros(universe.size, dtype=bool)
  inside[universe.positions(subset)] = True

  lower = set()
  upper = set()
  for x, row in zip(universe.points, space.scope.matrix):
    aura = row >= 1.0 - space.eps
    if np.all(inside[aura]):
      lower.add(x)
    if np.any(inside[aura]):
      upper.add(x)
  return frozenset(lower), frozenset(upper)


def pair_accuracy(pair, eps=gl.EPS):
  """Accuracy rho = sum(lower) / sum(upper) and roughness sigma = 1 - rho. rho is 1 when upper is empty."""
  upper_sum = float(pair.upper.grades.sum())
  if upper_sum <= eps:
    return 1.0, 0.0
  rho = float(pair.lower.grades.sum()) / upper_sum
  return rho, 1.0 - rho


def accuracy(space, mu):
  """Accuracy and roughness of the aura approximations of mu."""
  return pair_accuracy(approximate(space, mu), space.eps)


def refinement_compare(space1, space2, mu):
  """Compare approximations under a coarse scope (space1) and a finer one (space2).

  When a2 <= a1 pointwise, the finer scope gives a higher lower approximation, a lower upper approximation and a smaller boundary.

  Returns
  -------
  Verdict
    'incomparable' when a2 <= a1 fails, otherwise ok with both pairs in details. A broken inequality raises InternalError.

  """
  if space1.universe != space2.universe or mu.universe != space1.universe:
    raise er.UniverseMismatchError("refinement_compare needs two spaces and a set over one universe")
  eps = space1.eps
  if not af.all_leq(space2.scope.matrix, space1.scope.matrix, eps):
    return ve.Verdict(ve.INCOMPARABLE, "The second scope function is not below the first")

  coarse = approximate(space1, mu)
  fine = approximate(space2, mu)
  checks = (
    ('lower', coarse.lower, fine.lower),
    ('upper', fine.upper, coarse.upper),
    ('boundary', fine.boundary, coarse.boundary),
  )
  for name, smaller, larger in checks:
    if not smaller.leq(larger, eps):
      raise er.InternalError("Refinement monotonicity violated for the {} approximation".format(name))
  return ve.Verdict(ve.OK, details={'coarse': coarse.to_dict(), 'fine': fine.to_dict()})
