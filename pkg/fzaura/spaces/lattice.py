"""Fuzzy sets on finite universes and their lattice, complement and alpha cut algebra."""
import numpy as np
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.utils.array_functions as af


class Universe(object):
  """A finite, ordered set of named points. The declaration order defines vector indexing.

  Parameters
  ----------
  points : iterable of str
    The point identifiers. Must be non-empty and pairwise distinct.

  Attributes
  ----------
  points : tuple of str
    The identifiers in declaration order.
  index : dict
    Maps each identifier to its position.

  """

  def __init__(self, points):
    points = tuple(points)
    if not points:
      raise er.UniverseError("A universe must have at least one point.")
    for point in points:
      if not isinstance(point, str):
        raise er.UniverseError("Point identifiers must be strings. Got {!r}".format(point))

    self.points = points
    self.index = {}
    for num, point in enumerate(points):
      if point in self.index:
        raise er.UniverseError("Duplicate point '{}' in universe".format(point))
      self.index[point] = num

  @property
  def size(self):
    return len(self.points)

  def __len__(self):
    return len(self.points)

  def __iter__(self):
    return iter(self.points)

  def __contains__(self, point):
    return point in self.index

  def __eq__(self, other):
    return isinstance(other, Universe) and self.points == other.points

  def __ne__(self, other):
    return not self == other

  def __hash__(self):
    return hash(self.points)

  def __repr__(self):
    return 'Universe({})'.format(list(self.points))

  def position(self, point):
    """Get the index of a point, raising UniverseError if it is unknown."""
    try:
      return self.index[point]
    except KeyError:
      raise er.UniverseError("Unknown point '{}'. Universe is {}".format(point, list(self.points)))

  def positions(self, subset):
    """Get the sorted indices of a crisp subset of points."""
    return sorted(set(self.position(p) for p in subset))


class FuzzySet(object):
  """A membership grade vector over a universe. Immutable after construction.

  Parameters
  ----------
  universe : Universe
    The universe the set lives on.
  grades : array like of floats
    One grade per point, in universe order. Values within eps of [0, 1] are clamped.
  eps : float
    Tolerance used when validating the grades.

  """

  def __init__(self, universe, grades, eps=gl.EPS):
    if not isinstance(universe, Universe):
      raise TypeError("universe must be a Universe. Got {}".format(type(universe)))
    grades = af.clean_grades(grades, eps)
    if grades.shape != (universe.size,):
      raise er.GradeError(
        "Expected {} grades for universe {}. Got shape {}".format(universe.size, list(universe.points), grades.shape)
      )
    self.universe = universe
    self.grades = af.freeze(grades)

  @classmethod
  def _trusted(cls, universe, grades):
    """Build from an array already known to be a valid grade vector."""
    fs = cls.__new__(cls)
    fs.universe = universe
    fs.grades = af.freeze(np.asarray(grades, dtype=np.float64))
    return fs

  def __getitem__(self, point):
    return float(self.grades[self.universe.position(point)])

  def __len__(self):
    return self.universe.size

  def __and__(self, other):
    return meet(self, other)

  def __or__(self, other):
    return join(self, other)

  def __invert__(self):
    return complement(self)

  def __le__(self, other):
    return leq(self, other)

  def __ge__(self, other):
    return leq(other, self)

  def __eq__(self, other):
    return isinstance(other, FuzzySet) and self.universe == other.universe and self.equals(other)

  def __ne__(self, other):
    return not self == other

  # Equality is tolerance based, so a consistent hash is not available.
  __hash__ = None

  def __repr__(self):
    return 'FuzzySet({})'.format(', '.join('{}={:g}'.format(p, g) for p, g in zip(self.universe.points, self.grades)))

  def meet(self, other):
    return meet(self, other)

  def join(self, other):
    return join(self, other)

  def complement(self):
    return complement(self)

  def leq(self, other, eps=gl.EPS):
    return leq(self, other, eps)

  def equals(self, other, eps=gl.EPS):
    """Whether the two sets agree at every point, up to eps."""
    check_same_universe(self, other)
    return af.all_close(self.grades, other.grades, eps)

  def alpha_cut(self, alpha, strict=False, eps=gl.EPS):
    return alpha_cut(self, alpha, strict, eps)

  def support(self, eps=gl.EPS):
    return alpha_cut(self, 0.0, strict=True, eps=eps)

  def height(self):
    return float(self.grades.max())

  def is_zero(self, eps=gl.EPS):
    return bool(np.all(self.grades <= eps))

  def is_one(self):
    return bool(np.all(self.grades == 1.0))

  def is_constant(self, eps=gl.EPS):
    return bool(self.grades.max() - self.grades.min() <= eps)

  def is_crisp(self, eps=gl.EPS):
    return bool(np.all((self.grades <= eps) | (self.grades >= 1.0 - eps)))

  def to_dict(self):
    return {'universe': list(self.universe.points), 'grades': self.grades.tolist()}

  @classmethod
  def from_dict(cls, fs_dict, universe=None, eps=gl.EPS):
    """Build from the {'universe': [...], 'grades': [...]} form.

    Parameters
    ----------
    fs_dict : dict
      The serialized set.
    universe : Universe or None
      If given, the serialized universe must equal it and the returned set shares it.

    """
    for key in ('universe', 'grades'):
      if key not in fs_dict:
        raise er.GradeError("Fuzzy set is missing the '{}' key".format(key))
    read_universe = Universe(fs_dict['universe'])
    if universe is not None:
      if read_universe != universe:
        raise er.UniverseMismatchError(
          "Fuzzy set universe {} does not match {}".format(list(read_universe.points), list(universe.points))
        )
      read_universe = universe
    return cls(read_universe, fs_dict['grades'], eps)


def _check_universe(universe, fs):
  if fs.universe != universe:
    raise er.UniverseMismatchError(
      "Universe mismatch: {} vs {}".format(list(universe.points), list(fs.universe.points))
    )


def check_same_universe(*fuzzy_sets):
  """Raise UniverseMismatchError unless every argument lives on the same universe."""
  first = fuzzy_sets[0].universe
  for fs in fuzzy_sets[1:]:
    if fs.universe != first:
      raise er.UniverseMismatchError(
        "Universe mismatch: {} vs {}".format(list(first.points), list(fs.universe.points))
      )
  return first


def meet(mu, nu):
  """Pointwise minimum of two fuzzy sets."""
  universe = check_same_universe(mu, nu)
  return FuzzySet._trusted(universe, np.minimum(mu.grades, nu.grades))


def join(mu, nu):
  """Pointwise maximum of two fuzzy sets."""
  universe = check_same_universe(mu, nu)
  return FuzzySet._trusted(universe, np.maximum(mu.grades, nu.grades))


def meet_all(fuzzy_sets, universe):
  """Meet of a family. The empty meet is the constant 1 set."""
  grades = np.ones(universe.size)
  for fs in fuzzy_sets:
    _check_universe(universe, fs)
    grades = np.minimum(grades, fs.grades)
  return FuzzySet._trusted(universe, grades)


def join_all(fuzzy_sets, universe):
  """Join of a family. The empty join is the constant 0 set."""
  grades = np.zeros(universe.size)
  for fs in fuzzy_sets:
    _check_universe(universe, fs)
    grades = np.maximum(grades, fs.grades)
  return FuzzySet._trusted(universe, grades)


def complement(mu):
  """Pointwise 1 - grade."""
  return FuzzySet._trusted(mu.universe, 1.0 - mu.grades)


def leq(mu, nu, eps=gl.EPS):
  """Whether mu <= nu at every point, up to eps."""
  check_same_universe(mu, nu)
  return af.all_leq(mu.grades, nu.grades, eps)


def alpha_cut(mu, alpha, strict=False, eps=gl.EPS):
  """The crisp set of points whose grade reaches alpha.

  Parameters
  ----------
  mu : FuzzySet
    The set to cut.
  alpha : float
    The level, in [0, 1].
  strict : bool
    Use grade > alpha instead of grade >= alpha.
  eps : float
    Comparison tolerance.

  Returns
  -------
  frozenset of str
    The point identifiers in the cut.

  """
  if not -eps <= alpha <= 1.0 + eps:
    raise er.GradeError("alpha must lie in [0, 1]. Got {}".format(alpha))
  if strict:
    mask = mu.grades > alpha + eps
  else:
    mask = mu.grades >= alpha - eps
  return frozenset(p for p, m in zip(mu.universe.points, mask) if m)


def constant(universe, alpha):
  """The constant fuzzy set with value alpha everywhere."""
  return FuzzySet(universe, np.full(universe.size, alpha, dtype=np.float64))


def characteristic(universe, subset):
  """The {0, 1} valued indicator of a crisp subset of points."""
  grades = np.zeros(universe.size)
  grades[universe.positions(subset)] = 1.0
  return FuzzySet._trusted(universe, grades)


def fuzzy_point(universe, point):
  """The characteristic set of a single point."""
  return characteristic(universe, [point])


def level_values(mu):
  """The sorted distinct grades occurring in mu."""
  return sorted(set(float(g) for g in mu.grades))
