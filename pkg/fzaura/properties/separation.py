"""Separation axioms T0, T1, T2 and regularity, stated over the aura topology."""
import logging
import itertools
import numpy as np
import fzaura.errors as er
import fzaura.verdict as ve
import fzaura.spaces.lattice as la
import fzaura.spaces.aura as au

SEPARATION_FLAGS = ('t0', 't1', 't2', 'regular')


class SeparationProfile(object):
  """Separation axioms satisfied by an aura space.

  Attributes
  ----------
  t0, t1, t2, regular : bool or None
    None when the flag cannot be decided (discrete topology).
  witnesses : dict
    For a true flag, the separating sets per point pair. For a false flag, the violating pair under 'violation'.
  t1_search : bool or None
    T1 evaluated by searching the aura topology for witnesses, when requested.
  inapplicable : list of str
    The flags left undecided.

  """

  def __init__(self, t0, t1, t2, regular, witnesses=None, t1_search=None, inapplicable=None, check=True):
    self.t0 = t0
    self.t1 = t1
    self.t2 = t2
    self.regular = regular
    self.witnesses = witnesses if witnesses is not None else {}
    self.t1_search = t1_search
    self.inapplicable = inapplicable if inapplicable is not None else []
    if check and self.t2 and self.t1 is False:
      raise er.InternalError("Separation chain violated: T2 without T1")

  def __repr__(self):
    return 'SeparationProfile({})'.format({f: getattr(self, f) for f in SEPARATION_FLAGS})

  def to_dict(self):
    r_d = {flag: getattr(self, flag) for flag in SEPARATION_FLAGS}
    r_d['witnesses'] = self.witnesses
    r_d['inapplicable'] = list(self.inapplicable)
    if self.t1_search is not None:
      r_d['t1_search'] = self.t1_search
    return r_d


def _pair_key(x, y):
  return '{},{}'.format(x, y)


def _t1_matrix(space):
  """T1 by the scope criterion: a(y)(x) == 0 for every x != y. Returns (flag, first violating pair)."""
  matrix = space.scope.matrix
  points = space.universe.points
  for i, j in itertools.permutations(range(len(points)), 2):
    if matrix[j, i] > space.eps:
      return False, [points[i], points[j]]
  return True, None


def _distinct_rows(space):
  matrix = space.scope.matrix
  for i, j in itertools.combinations(range(space.universe.size), 2):
    if np.all(np.abs(matrix[i] - matrix[j]) <= space.eps):
      return False, [space.universe.points[i], space.universe.points[j]]
  return True, None


def _t0_search(rows, points, eps):
  witnesses = {}
  for i, j in itertools.combinations(range(len(points)), 2):
    split = np.where(np.abs(rows[:, i] - rows[:, j]) > eps)[0]
    if not split.size:
      return False, {'violation': [points[i], points[j]]}
    witnesses[_pair_key(points[i], points[j])] = [rows[split[0]].tolist()]
  return True, witnesses


def _disjoint_pair(rows, left, right, eps):
  """First (mu, nu) with mu from left, nu from right and mu & nu == 0."""
  for a in left:
    for b in right:
      if np.all(np.minimum(rows[a], rows[b]) <= eps):
        return a, b
  return None


def _t1_search(rows, points, eps):
  for i, j in itertools.permutations(range(len(points)), 2):
    found = np.where((rows[:, i] == 1.0) & (rows[:, j] <= eps))[0]
    if not found.size:
      return False
  return True


def _t2_search(rows, points, eps):
  witnesses = {}
  for i, j in itertools.combinations(range(len(points)), 2):
    pair = _disjoint_pair(rows, np.where(rows[:, i] == 1.0)[0], np.where(rows[:, j] == 1.0)[0], eps)
    if pair is None:
      return False, {'violation': [points[i], points[j]]}
    witnesses[_pair_key(points[i], points[j])] = [rows[pair[0]].tolist(), rows[pair[1]].tolist()]
  return True, witnesses


def _regular_search(rows, points, eps):
  for gamma in 1.0 - rows:
    above = np.where(np.all(rows >= gamma[np.newaxis, :] - eps, axis=1))[0]
    for x in np.where(gamma <= eps)[0]:
      pair = _disjoint_pair(rows, np.where(rows[:, x] == 1.0)[0], above, eps)
      if pair is None:
        return False, {'violation': {'point': points[x], 'closed': gamma.tolist()}}
  return True, {}


def _discrete_profile(space, cross_check):
  """Decide what can be decided without enumerating the discrete topology.

  T1 needs only the scope. A T1 scope is the identity, whose aura topology is every fuzzy set, so all four flags hold. Otherwise T2 fails with T1, and T0 fails when two auras coincide.
  """
  t1, t1_pair = _t1_matrix(space)
  witnesses = {}
  if t1:
    points = space.universe.points
    witnesses['t1'] = {}
    witnesses['t2'] = {}
    for x, y in itertools.combinations(points, 2):
      px, py = la.fuzzy_point(space.universe, x), la.fuzzy_point(space.universe, y)
      witnesses['t2'][_pair_key(x, y)] = [px.grades.tolist(), py.grades.tolist()]
    return SeparationProfile(True, True, True, True, witnesses, t1_search=True if cross_check else None)

  witnesses['t1'] = {'violation': t1_pair}
  witnesses['t2'] = {'violation': t1_pair}
  inapplicable = ['regular']
  distinct, same_pair = _distinct_rows(space)
  if distinct:
    t0 = None
    inapplicable.insert(0, 't0')
  else:
    t0 = False
    witnesses['t0'] = {'violation': same_pair}
  return SeparationProfile(t0, False, False, None, witnesses, inapplicable=inapplicable)


def separation_profile(space, cross_check=False):
  """Evaluate the separation axioms of an aura space.

  T0, T2 and regularity search the aura topology, which is the complete pool of candidate sets. T1 uses the scope criterion a(y)(x) == 0. "grade == 1" tests are exact, "== 0" tests use the space tolerance.

  Parameters
  ----------
  space : AuraSpace
    The space.
  cross_check : bool
    Also evaluate T1 by searching the aura topology for witnesses. The result is stored as t1_search and is not asserted.

  Returns
  -------
  SeparationProfile

  """
  if space.is_discrete:
    return _discrete_profile(space, cross_check)

  eps = space.eps
  points = space.universe.points
  rows = au.aura_topology(space).matrix
  witnesses = {}

  t0, witnesses['t0'] = _t0_search(rows, points, eps)
  t1, t1_pair = _t1_matrix(space)
  witnesses['t1'] = {} if t1 else {'violation': t1_pair}
  t2, witnesses['t2'] = _t2_search(rows, points, eps)
  regular, witnesses['regular'] = _regular_search(rows, points, eps)
  t1_search = _t1_search(rows, points, eps) if cross_check else None
  if cross_check and t1_search != t1:
    logging.warning("T1 scope criterion (%s) and witness search (%s) disagree", t1, t1_search)

  profile = SeparationProfile(t0, t1, t2, regular, witnesses, t1_search)

  if t1 and not t0 and space.auras_are_open():
    raise er.InternalError("Separation chain violated: T1 without T0 although every aura is open")
  if t0 and not _distinct_rows(space)[0]:
    raise er.InternalError("T0 holds although two auras coincide")
  return profile


def t1_fuzzy_point_check(space):
  """Check that the scope criterion for T1 agrees with every fuzzy point being aura closed.

  Returns
  -------
  Verdict
    ok with both facts in details. Disagreement raises InternalError.

  """
  by_matrix = _t1_matrix(space)[0]
  by_points = all(
    au.is_a_closed(space, la.fuzzy_point(space.universe, x)) for x in space.universe.points
  )
  if by_matrix != by_points:
    raise er.InternalError(
      "T1 scope criterion ({}) disagrees with the fuzzy point criterion ({})".format(by_matrix, by_points)
    )
  return ve.Verdict(ve.OK, details={'matrix_criterion': by_matrix, 'fuzzy_point_criterion': by_points})


def t0_converse_report(space):
  """Compare 'all auras pairwise distinct' with the computed T0 flag. Only the forward direction is guaranteed.

  Returns
  -------
  Verdict
    ok when they agree, violation when auras are distinct but T0 fails, inapplicable when T0 is undecided.

  """
  distinct = _distinct_rows(space)[0]
  t0 = separation_profile(space).t0
  details = {'distinct_auras': distinct, 't0': t0}
  if t0 is None:
    return ve.Verdict(ve.INAPPLICABLE, "T0 cannot be decided on this space", details=details)
  if distinct != t0:
    logging.warning("Auras are pairwise distinct but the space is not T0")
    return ve.Verdict(ve.VIOLATION, "Distinct auras without T0", details=details)
  return ve.Verdict(ve.OK, details=details)
