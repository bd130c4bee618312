"""Chang fuzzy topologies as explicit finite families, with axiom verification and the classical interior/closure."""
import logging
import numpy as np
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.spaces.lattice as la
import fzaura.utils.array_functions as af


class AxiomReport(object):
  """Result of checking a family of fuzzy sets against the Chang topology axioms.

  Attributes
  ----------
  ok : bool
    Whether every axiom holds.
  kind : str or None
    'zero', 'one', 'meet' or 'join' for the first failing axiom. None when ok.
  pair : tuple of int or None
    Indices (into the checked family) of the two members whose meet or join is missing.
  missing : FuzzySet or None
    The set that should have been in the family.
  message : str
    Human readable description.

  """

  def __init__(self, ok, kind=None, pair=None, missing=None, message=''):
    self.ok = ok
    self.kind = kind
    self.pair = pair
    self.missing = missing
    self.message = message

  def __bool__(self):
    return self.ok

  __nonzero__ = __bool__

  def __repr__(self):
    return 'AxiomReport(ok={}, kind={!r}, pair={!r})'.format(self.ok, self.kind, self.pair)

  def to_dict(self):
    return {
      'ok': self.ok,
      'kind': self.kind,
      'pair': list(self.pair) if self.pair is not None else None,
      'missing': self.missing.grades.tolist() if self.missing is not None else None,
      'message': self.message
    }


class FuzzyTopology(object):
  """An explicit finite family of fuzzy sets containing 0 and 1 and closed under pairwise meet and join.

  Parameters
  ----------
  universe : Universe
    The universe every member lives on.
  members : list of FuzzySet or list of grade lists
    The open sets. Duplicates (up to eps) are dropped, keeping the first occurrence.
  verify : bool
    Check the axioms and raise TopologyError on the first violation.
  eps : float
    Comparison tolerance.

  Attributes
  ----------
  members : tuple of FuzzySet
    The deduplicated open sets in the order given.
  matrix : np.ndarray, shape (len(members), universe.size)
    The members' grades stacked row by row.

  """

  is_discrete = False

  def __init__(self, universe, members, verify=True, eps=gl.EPS):
    members = [_as_fuzzy_set(universe, m, eps) for m in members]
    if not members:
      raise er.TopologyError("A fuzzy topology needs at least one member.")

    kept = []
    rows = np.zeros((0, universe.size))
    for fs in members:
      if af.row_index(rows, fs.grades, eps) is None:
        kept.append(fs)
        rows = np.vstack([rows, fs.grades[np.newaxis, :]])

    if verify:
      report = verify_axioms(kept, eps)
      if not report.ok:
        raise er.TopologyError(report.message, report)

    self.universe = universe
    self.members = tuple(kept)
    self.matrix = af.freeze(rows)
    self.eps = eps

  @classmethod
  def indiscrete(cls, universe):
    """The topology {0, 1}."""
    return cls(universe, [la.constant(universe, 0.0), la.constant(universe, 1.0)])

  def __len__(self):
    return len(self.members)

  def __iter__(self):
    return iter(self.members)

  def __repr__(self):
    return 'FuzzyTopology({} members on {})'.format(len(self.members), list(self.universe.points))

  def contains(self, mu, eps=None):
    """Whether mu is one of the open sets, up to eps."""
    eps = self.eps if eps is None else eps
    la.check_same_universe(self.members[0], mu)
    return af.row_index(self.matrix, mu.grades, eps) is not None

  def interior(self, mu, eps=None):
    """Join of every member lying below mu."""
    eps = self.eps if eps is None else eps
    la.check_same_universe(self.members[0], mu)
    below = np.all(self.matrix <= mu.grades[np.newaxis, :] + eps, axis=1)
    if not below.any():
      return la.constant(self.universe, 0.0)
    return la.FuzzySet._trusted(self.universe, np.max(self.matrix[below], axis=0))

  def closure(self, mu, eps=None):
    """Meet of every closed set (complement of a member) lying above mu."""
    eps = self.eps if eps is None else eps
    la.check_same_universe(self.members[0], mu)
    closed = 1.0 - self.matrix
    above = np.all(closed >= mu.grades[np.newaxis, :] - eps, axis=1)
    if not above.any():
      return la.constant(self.universe, 1.0)
    return la.FuzzySet._trusted(self.universe, np.min(closed[above], axis=0))

  def closed_sets(self):
    """The complements of the members, in member order."""
    return [la.complement(m) for m in self.members]

  def to_dict(self):
    return {
      'universe': list(self.universe.points),
      'members': [m.grades.tolist() for m in self.members]
    }


class DiscreteTopology(object):
  """Stands for the topology of all fuzzy sets on a universe without enumerating it.

  Interior and closure are the identity and every fuzzy set is open.

  Parameters
  ----------
  universe : Universe
    The universe.

  """

  is_discrete = True

  def __init__(self, universe):
    if not isinstance(universe, la.Universe):
      raise TypeError("universe must be a Universe. Got {}".format(type(universe)))
    self.universe = universe

  def __repr__(self):
    return 'DiscreteTopology({})'.format(list(self.universe.points))

  @property
  def members(self):
    raise er.InapplicableError("The discrete fuzzy topology cannot be enumerated.")

  def _check(self, mu):
    if mu.universe != self.universe:
      raise er.UniverseMismatchError(
        "Universe mismatch: {} vs {}".format(list(self.universe.points), list(mu.universe.points))
      )

  def contains(self, mu, eps=None):
    self._check(mu)
    return True

  def interior(self, mu, eps=None):
    self._check(mu)
    return mu

  def closure(self, mu, eps=None):
    self._check(mu)
    return mu

  def closed_sets(self):
    raise er.InapplicableError("The discrete fuzzy topology cannot be enumerated.")

  def to_dict(self):
    return {'universe': list(self.universe.points), 'discrete': True}


def _as_fuzzy_set(universe, member, eps=gl.EPS):
  if isinstance(member, la.FuzzySet):
    if member.universe != universe:
      raise er.UniverseMismatchError(
        "Universe mismatch: {} vs {}".format(list(universe.points), list(member.universe.points))
      )
    return member
  return la.FuzzySet(universe, member, eps)


def verify_axioms(family, eps=gl.EPS):
  """Check a family of fuzzy sets against the Chang topology axioms.

  The first violation is reported deterministically: the 0 and 1 sets are checked first, then the pairs (i, j), i < j, in lexicographic order, meet before join.

  Parameters
  ----------
  family : list of FuzzySet
    The candidate open sets. Must be non-empty and share one universe.
  eps : float
    Comparison tolerance.

  Returns
  -------
  AxiomReport
    ok, or the first violation.

  """
  family = list(family)
  if not family:
    raise er.TopologyError("Cannot verify an empty family of fuzzy sets.")
  universe = la.check_same_universe(*family)
  rows = np.stack([fs.grades for fs in family])

  for kind, value in (('zero', 0.0), ('one', 1.0)):
    target = la.constant(universe, value)
    if af.row_index(rows, target.grades, eps) is None:
      return AxiomReport(
        False, kind, None, target,
        "The constant {:g} set is not a member".format(value)
      )

  for i in range(len(family)):
    for j in range(i + 1, len(family)):
      for kind, func in (('meet', np.minimum), ('join', np.maximum)):
        combined = func(rows[i], rows[j])
        if af.row_index(rows, combined, eps) is None:
          missing = la.FuzzySet._trusted(universe, combined)
          return AxiomReport(
            False, kind, (i, j), missing,
            "The {} of members {} and {} is missing: {}".format(kind, i, j, combined.tolist())
          )
  return AxiomReport(True)


def generate(subbasis, eps=gl.EPS, max_new_members=gl.MAX_GENERATED_MEMBERS):
  """Close a family under pairwise meet and join, adding 0 and 1.

  Parameters
  ----------
  subbasis : list of FuzzySet
    The generating sets. Must be non-empty and share one universe.
  eps : float
    Tolerance used for deduplication.
  max_new_members : int
    Raise TopologyError once more than this many sets beyond the seeds have been added.

  Returns
  -------
  FuzzyTopology
    The smallest topology containing the subbasis.

  """
  subbasis = list(subbasis)
  if not subbasis:
    raise er.TopologyError("Cannot generate a topology from an empty subbasis.")
  universe = la.check_same_universe(*subbasis)

  seeds = [la.constant(universe, 0.0), la.constant(universe, 1.0)] + subbasis
  rows = []
  seen = {}

  def maybe_add(grades):
    key = tuple(grades.tolist())
    if key in seen:
      return False
    if rows and af.row_index(np.array(rows), grades, eps) is not None:
      return False
    seen[key] = len(rows)
    rows.append(grades)
    return True

  for fs in seeds:
    maybe_add(fs.grades)
  num_seeds = len(rows)

  # Each row is combined once with every row before it. Rows added along the
  # way are reached later, so the final family is closed.
  i = 0
  while i < len(rows):
    for j in range(i):
      for combined in (np.minimum(rows[i], rows[j]), np.maximum(rows[i], rows[j])):
        if maybe_add(combined) and len(rows) - num_seeds > max_new_members:
          raise er.TopologyError(
            "Topology generation exceeded {} new members".format(max_new_members)
          )
    i += 1

  logging.info("Generated a topology of %s members from %s subbasis sets", len(rows), len(subbasis))
  members = [la.FuzzySet._trusted(universe, r) for r in rows]
  return FuzzyTopology(universe, members, verify=False, eps=eps)


def interior(top, mu, eps=gl.EPS):
  """Classical fuzzy interior: the join of all open sets below mu. Identity for the discrete topology."""
  return top.interior(mu, eps)


def closure(top, mu, eps=gl.EPS):
  """Classical fuzzy closure: the meet of all closed sets above mu. Identity for the discrete topology."""
  return top.closure(mu, eps)


def contains(top, mu, eps=gl.EPS):
  return top.contains(mu, eps)
