"""Scope functions, aura spaces and the aura closure/interior operators built on them.

The aura closure of mu at x is sup_y min(a(x)(y), mu(y)), the degree to which the aura of x meets mu. The aura interior is its inf-max dual, the degree to which the aura of x is contained in mu.
"""
import logging
import numpy as np
import pandas as pd
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.spaces.lattice as la
import fzaura.spaces.topology as to
import fzaura.utils.array_functions as af

VALIDATION_MODES = ('lenient', 'strict')


class ScopeFunction(object):
  """Assigns to each point x its aura a(x), stored as a dense grade matrix.

  Parameters
  ----------
  universe : Universe
    The universe.
  matrix : array like, shape (n, n)
    matrix[i, j] is the grade of point j in the aura of point i. The diagonal must be exactly 1.
  eps : float
    Tolerance used when validating the grades.

  """

  def __init__(self, universe, matrix, eps=gl.EPS):
    matrix = af.clean_grades(matrix, eps, name='scope grades')
    n = universe.size
    if matrix.shape != (n, n):
      raise er.ScopeError("Scope matrix must have shape {}. Got {}".format((n, n), matrix.shape))
    off = np.where(np.diag(matrix) != 1.0)[0]
    if off.size:
      point = universe.points[off[0]]
      raise er.ScopeError(
        "The aura of '{}' must contain '{}' with grade exactly 1. Got {}".format(point, point, matrix[off[0], off[0]])
      )
    self.universe = universe
    self.matrix = af.freeze(matrix)

  @classmethod
  def identity(cls, universe):
    """Every aura is the point itself."""
    return cls(universe, np.eye(universe.size))

  @classmethod
  def trivial(cls, universe):
    """Every aura is the whole universe."""
    return cls(universe, np.ones((universe.size, universe.size)))

  @classmethod
  def from_rows(cls, universe, rows, eps=gl.EPS):
    """Build from a dict mapping each point name to its aura's grade list."""
    missing = [p for p in universe.points if p not in rows]
    if missing:
      raise er.ScopeError("Scope is missing the aura of '{}'".format(missing[0]))
    unknown = sorted(set(rows) - set(universe.points))
    if unknown:
      raise er.UniverseError("Scope lists an aura for unknown point '{}'".format(unknown[0]))
    for point in universe.points:
      if len(rows[point]) != universe.size:
        raise er.ScopeError(
          "The aura of '{}' has {} grades, expected {}".format(point, len(rows[point]), universe.size)
        )
    return cls(universe, [rows[p] for p in universe.points], eps)

  def __repr__(self):
    return 'ScopeFunction({})'.format(list(self.universe.points))

  def aura(self, point):
    """The aura of point as a FuzzySet."""
    return la.FuzzySet._trusted(self.universe, self.matrix[self.universe.position(point)])

  row = aura

  def auras(self):
    return [la.FuzzySet._trusted(self.universe, r) for r in self.matrix]

  def grade(self, x, y):
    """The grade of y in the aura of x."""
    return float(self.matrix[self.universe.position(x), self.universe.position(y)])

  def to_dict(self):
    return {p: r.tolist() for p, r in zip(self.universe.points, self.matrix)}


class ScopeProfile(object):
  """Which special classes a scope function belongs to.

  Attributes
  ----------
  trivial : bool
    Every aura is the constant 1 set.
  crisp : bool
    Every grade is 0 or 1.
  symmetric : bool
    a(x)(y) == a(y)(x) for all x, y.
  transitive : bool
    min(a(x)(y), a(y)(z)) <= a(x)(z) for all x, y, z.

  """

  def __init__(self, trivial, crisp, symmetric, transitive):
    self.trivial = trivial
    self.crisp = crisp
    self.symmetric = symmetric
    self.transitive = transitive

  def __repr__(self):
    return 'ScopeProfile({})'.format(self.to_dict())

  def to_dict(self):
    return {
      'trivial': self.trivial,
      'crisp': self.crisp,
      'symmetric': self.symmetric,
      'transitive': self.transitive
    }


class AuraSpace(object):
  """A universe together with a fuzzy topology and a scope function.

  Parameters
  ----------
  universe : Universe
    The universe.
  topology : FuzzyTopology or DiscreteTopology
    The fuzzy topology.
  scope : ScopeFunction
    The scope function.
  mode : 'lenient' or 'strict'
    Lenient only checks the diagonal axiom of the scope. Strict also requires every aura to be an open set.
  eps : float
    Comparison tolerance used by every operator on this space.

  """

  def __init__(self, universe, topology, scope, mode='lenient', eps=gl.EPS):
    if mode not in VALIDATION_MODES:
      raise er.ScopeError("{} is an invalid validation mode. Accepted modes are {}".format(mode, VALIDATION_MODES))
    for name, part in (('topology', topology), ('scope', scope)):
      if part.universe != universe:
        raise er.UniverseMismatchError(
          "The {} is over {}, not {}".format(name, list(part.universe.points), list(universe.points))
        )

    self.universe = universe
    self.topology = topology
    self.scope = scope
    self.mode = mode
    self.eps = eps

    if mode == 'strict':
      for point, aura in zip(universe.points, scope.auras()):
        if not topology.contains(aura, eps):
          raise er.ScopeError("The aura of '{}' is not an open set of the topology".format(point))

  def __repr__(self):
    return 'AuraSpace({}, {!r}, mode={!r})'.format(list(self.universe.points), self.topology, self.mode)

  @property
  def is_discrete(self):
    return self.topology.is_discrete

  def auras_are_open(self):
    """Whether every aura is an open set. Always true in strict mode."""
    return all(self.topology.contains(a, self.eps) for a in self.scope.auras())

  def with_scope(self, scope):
    return AuraSpace(self.universe, self.topology, scope, self.mode, self.eps)


def _check(space, mu):
  if mu.universe != space.universe:
    raise er.UniverseMismatchError(
      "Universe mismatch: space is over {}, set is over {}".format(list(space.universe.points), list(mu.universe.points))
    )


def aura_closure(space, mu):
  """cl_a(mu)(x) = sup_y min(a(x)(y), mu(y))."""
  _check(space, mu)
  return la.FuzzySet._trusted(space.universe, af.sup_min(space.scope.matrix, mu.grades))


def aura_interior(space, mu):
  """int_a(mu)(x) = inf_y max(1 - a(x)(y), mu(y))."""
  _check(space, mu)
  return la.FuzzySet._trusted(space.universe, af.inf_max(space.scope.matrix, mu.grades))


def iterated_closure(space, mu, n=None):
  """Apply the aura closure n times.

  Parameters
  ----------
  space : AuraSpace
    The space.
  mu : FuzzySet
    The starting set.
  n : int, float('inf') or None
    The number of applications. None or infinity iterates to the fixpoint, which a finite universe reaches within universe.size steps.

  Returns
  -------
  FuzzySet
    The n-th iterate, or the fixpoint.

  """
  _check(space, mu)
  if n is None or n == float('inf'):
    current = mu
    for _ in range(space.universe.size):
      following = aura_closure(space, current)
      if following.equals(current, space.eps):
        return current
      current = following
    if not aura_closure(space, current).equals(current, space.eps):
      raise er.InternalError(
        "Iterated aura closure did not converge within {} steps".format(space.universe.size)
      )
    return current

  if int(n) != n or n < 0:
    raise ValueError("n must be a non-negative integer, None or infinity. Got {}".format(n))
  current = mu
  for _ in range(int(n)):
    current = aura_closure(space, current)
  return current


def is_a_open(space, mu):
  """Whether mu is a fixpoint of the aura interior."""
  return aura_interior(space, mu).equals(mu, space.eps)


def is_a_closed(space, mu):
  """Whether mu is a fixpoint of the aura closure."""
  return aura_closure(space, mu).equals(mu, space.eps)


def in_aura_topology(space, mu):
  """Whether mu belongs to the aura topology: an open set that is also a fixpoint of the aura interior."""
  return space.topology.contains(mu, space.eps) and is_a_open(space, mu)


def aura_topology(space):
  """The members of the topology that are fixpoints of the aura interior.

  Raises InapplicableError for the discrete topology, which cannot be enumerated; use in_aura_topology there.
  """
  if space.is_discrete:
    raise er.InapplicableError(
      "The aura topology of a discrete space cannot be enumerated. Test sets with in_aura_topology instead."
    )
  kept = [m for m in space.topology.members if is_a_open(space, m)]
  logging.debug("Aura topology keeps %s of %s members", len(kept), len(space.topology.members))
  return to.FuzzyTopology(space.universe, kept, verify=False, eps=space.eps)


def classify_scope(space, eps=gl.EPS):
  """Check the scope function of a space (or a bare ScopeFunction) for the trivial, crisp, symmetric and transitive properties."""
  scope = space.scope if isinstance(space, AuraSpace) else space
  matrix = scope.matrix
  return ScopeProfile(
    trivial=bool(np.all(matrix == 1.0)),
    crisp=bool(np.all((matrix <= eps) | (matrix >= 1.0 - eps))),
    symmetric=af.all_close(matrix, matrix.T, eps),
    transitive=af.all_leq(af.relation_compose(matrix, matrix), matrix, eps)
  )


def trivial_closure(space, mu):
  """Under the trivial scope the aura closure of mu is the constant sup mu."""
  _check(space, mu)
  if not classify_scope(space).trivial:
    raise er.InapplicableError("trivial_closure needs a trivial scope function")
  return la.constant(space.universe, mu.height())


def compare_closures(space, mu):
  """Compare the classical and the aura operators point by point.

  Returns
  -------
  pd.DataFrame
    Indexed by point, with the four operator values and the two inequality flags closure_below (cl <= cl_a) and interior_above (int_a <= int).

  """
  _check(space, mu)
  closure = space.topology.closure(mu, space.eps)
  interior = space.topology.interior(mu, space.eps)
  a_closure = aura_closure(space, mu)
  a_interior = aura_interior(space, mu)
  df = pd.DataFrame({
    'closure': closure.grades,
    'aura_closure': a_closure.grades,
    'closure_below': closure.grades <= a_closure.grades + space.eps,
    'interior': interior.grades,
    'aura_interior': a_interior.grades,
    'interior_above': a_interior.grades <= interior.grades + space.eps,
  }, index=list(space.universe.points), columns=['closure', 'aura_closure', 'closure_below', 'interior', 'aura_interior', 'interior_above'])
  failing = int((~df['closure_below']).sum() + (~df['interior_above']).sum())
  if failing:
    logging.info("Closure comparison fails at %s point checks", failing)
  return df
