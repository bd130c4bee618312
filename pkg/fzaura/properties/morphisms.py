"""Point maps between aura spaces and the continuity predicates built on preimages."""
import numpy as np
import fzaura.errors as er
import fzaura.verdict as ve
import fzaura.spaces.lattice as la
import fzaura.spaces.aura as au
import fzaura.properties.openness as op

CONTINUITY_FLAGS = ('fuzzy_continuous', 'a_continuous', 'semi', 'pre', 'alpha', 'beta', 'b')

# (premise, conclusion) pairs asserted on every profile.
CHAIN = (
  ('fuzzy_continuous', 'alpha'),
  ('alpha', 'semi'),
  ('alpha', 'pre'),
  ('semi', 'b'),
  ('pre', 'b'),
  ('b', 'beta'),
)


class PointMap(object):
  """A total function between two universes.

  Parameters
  ----------
  source : Universe
    The domain.
  target : Universe
    The codomain.
  assignment : dict or list of str
    The image of every source point, either keyed by source point or listed in source order.

  """

  def __init__(self, source, target, assignment):
    if isinstance(assignment, dict):
      missing = [p for p in source.points if p not in assignment]
      if missing:
        raise er.UniverseError("Point map does not assign '{}'".format(missing[0]))
      unknown = sorted(set(assignment) - set(source.points))
      if unknown:
        raise er.UniverseError("Point map assigns unknown source point '{}'".format(unknown[0]))
      images = [assignment[p] for p in source.points]
    else:
      images = list(assignment)
      if len(images) != source.size:
        raise er.UniverseError("Point map has {} images for {} source points".format(len(images), source.size))

    self.source = source
    self.target = target
    self.indices = np.array([target.position(y) for y in images], dtype=np.int64)
    self.indices.flags.writeable = False

  @classmethod
  def identity(cls, universe):
    return cls(universe, universe, list(universe.points))

  @classmethod
  def constant(cls, source, target, point):
    target.position(point)
    return cls(source, target, [point] * source.size)

  def __call__(self, point):
    return self.target.points[self.indices[self.source.position(point)]]

  def __repr__(self):
    return 'PointMap({})'.format(self.to_dict()['map'])

  @property
  def assignment(self):
    return {x: self.target.points[i] for x, i in zip(self.source.points, self.indices)}

  def preimage(self, nu):
    return preimage(self, nu)

  def then(self, other):
    """The composite map: self first, then other."""
    return compose(self, other)

  def to_dict(self):
    return {
      'source': list(self.source.points),
      'target': list(self.target.points),
      'map': self.assignment
    }


def preimage(f, nu):
  """f^-1(nu)(x) = nu(f(x))."""
  if nu.universe != f.target:
    raise er.UniverseMismatchError(
      "Preimage needs a set on {}. Got one on {}".format(list(f.target.points), list(nu.universe.points))
    )
  return la.FuzzySet._trusted(f.source, nu.grades[f.indices])


def compose(f, g):
  """g after f."""
  if f.target != g.source:
    raise er.UniverseMismatchError(
      "Cannot compose: {} does not feed {}".format(list(f.target.points), list(g.source.points))
    )
  return PointMap(f.source, g.target, [g.target.points[i] for i in g.indices[f.indices]])


class ContinuityProfile(object):
  """Which continuity notions a point map satisfies.

  Attributes
  ----------
  fuzzy_continuous : bool
    Preimages of open sets are open.
  a_continuous : bool
    Preimages of aura topology members are aura topology members.
  semi, pre, alpha, beta, b : bool
    Preimages of open sets are in the respective generalized open class.
  counterexamples : dict
    For each false flag, the target set whose preimage fails.

  """

  def __init__(self, fuzzy_continuous, a_continuous, semi, pre, alpha, beta, b, counterexamples=None, check=True):
    self.fuzzy_continuous = fuzzy_continuous
    self.a_continuous = a_continuous
    self.semi = semi
    self.pre = pre
    self.alpha = alpha
    self.beta = beta
    self.b = b
    self.counterexamples = counterexamples if counterexamples is not None else {}
    if check:
      for premise, conclusion in CHAIN:
        if getattr(self, premise) and not getattr(self, conclusion):
          raise er.InternalError("Continuity chain violated: {} without {}".format(premise, conclusion))

  def __repr__(self):
    return 'ContinuityProfile({})'.format(self.to_dict())

  def to_dict(self):
    r_d = {flag: getattr(self, flag) for flag in CONTINUITY_FLAGS}
    r_d['counterexamples'] = {k: v.grades.tolist() for k, v in sorted(self.counterexamples.items())}
    return r_d


def _check_map(f, src, dst):
  if f.source != src.universe or f.target != dst.universe:
    raise er.UniverseMismatchError("Point map does not run from the source space to the target space")
  if dst.is_discrete:
    raise er.InapplicableError("Continuity quantifies over the target's open sets, which the discrete topology cannot enumerate")


def continuity_profile(f, src, dst):
  """Evaluate every continuity notion of f from src to dst.

  a_continuous quantifies over the aura topology of dst. The other flags quantify over all open sets of dst.

  Parameters
  ----------
  f : PointMap
    The map.
  src : AuraSpace
    The source space. May use the discrete topology.
  dst : AuraSpace
    The target space. Needs an explicit topology.

  Returns
  -------
  ContinuityProfile

  """
  _check_map(f, src, dst)
  flags = {flag: True for flag in CONTINUITY_FLAGS}
  counterexamples = {}

  def fail(flag, nu):
    if flags[flag]:
      flags[flag] = False
      counterexamples[flag] = nu

  for nu in dst.topology.members:
    pre = preimage(f, nu)
    if not src.topology.contains(pre, src.eps):
      fail('fuzzy_continuous', nu)
    profile = op.openness_profile(src, pre, check=False)
    for flag in ('semi', 'pre', 'alpha', 'beta', 'b'):
      if not getattr(profile, flag):
        fail(flag, nu)

  for nu in au.aura_topology(dst).members:
    if not au.in_aura_topology(src, preimage(f, nu)):
      fail('a_continuous', nu)

  return ContinuityProfile(counterexamples=counterexamples, **flags)


def decomposition_check(f, src, dst):
  """Under a transitive source scope, a preimage is alpha-open exactly when it is both semi-open and pre-open.

  Returns
  -------
  Verdict
    'inapplicable' when the source scope is not transitive, otherwise ok or the first counterexample preimage.

  """
  _check_map(f, src, dst)
  if not au.classify_scope(src).transitive:
    return ve.Verdict(ve.INAPPLICABLE, "The source scope function is not transitive")

  for nu in dst.topology.members:
    pre = preimage(f, nu)
    profile = op.openness_profile(src, pre, check=False)
    if profile.alpha != (profile.semi and profile.pre):
      return ve.Verdict(
        ve.VIOLATION,
        "Preimage {!r} is semi {} and pre {} but alpha {}".format(pre, profile.semi, profile.pre, profile.alpha),
        witness=pre
      )
  profile = continuity_profile(f, src, dst)
  return ve.Verdict(ve.OK, details={'alpha': profile.alpha, 'semi': profile.semi, 'pre': profile.pre})


def composition_check(f, g, s1, s2, s3):
  """Check the composition laws for f: s1 -> s2 followed by g: s2 -> s3.

  (a) a-continuous then a-continuous is a-continuous.
  (b) semi-continuous then fuzzy continuous is semi-continuous.

  Returns
  -------
  Verdict

  """
  gf = compose(f, g)
  pf = continuity_profile(f, s1, s2)
  pg = continuity_profile(g, s2, s3)
  pgf = continuity_profile(gf, s1, s3)

  details = {'f': pf.to_dict(), 'g': pg.to_dict(), 'composite': pgf.to_dict()}
  if pf.a_continuous and pg.a_continuous and not pgf.a_continuous:
    return ve.Verdict(ve.VIOLATION, "Composite of a-continuous maps is not a-continuous", details=details)
  if pf.semi and pg.fuzzy_continuous and not pgf.semi:
    return ve.Verdict(
      ve.VIOLATION, "Semi-continuous followed by fuzzy continuous is not semi-continuous", details=details
    )
  return ve.Verdict(ve.OK, details=details)


def semi_continuity_by_closed_sets(f, src, dst):
  """Semi-continuity via closed sets: the preimage of every closed set of dst is semi-closed (its complement is semi-open)."""
  _check_map(f, src, dst)
  for gamma in dst.topology.closed_sets():
    pre = preimage(f, gamma)
    if not op.openness_profile(src, la.complement(pre), check=False).semi:
      return False
  return True
