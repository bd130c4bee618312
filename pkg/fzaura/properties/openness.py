"""Generalized aura open sets: the semi, pre, alpha, beta and b classes and their hierarchy.

Each class mixes the classical interior of the topology with the aura closure:
  semi  : mu <= cl_a(int(mu))
  pre   : mu <= int(cl_a(mu))
  alpha : mu <= int(cl_a(int(mu)))
  beta  : mu <= cl_a(int(cl_a(mu)))
  b     : mu <= cl_a(int(mu)) | int(cl_a(mu))
"""
import logging
import itertools
import fzaura.errors as er
import fzaura.verdict as ve
import fzaura.spaces.lattice as la
import fzaura.spaces.aura as au
import fzaura.utils.multiprocessing as mh

FLAGS = ('open', 'a_open', 'semi', 'pre', 'alpha', 'beta', 'b')

# (premise, conclusion) pairs that must hold on every profile.
HIERARCHY = (
  ('open', 'alpha'),
  ('alpha', 'semi'),
  ('alpha', 'pre'),
  ('semi', 'b'),
  ('pre', 'b'),
  ('b', 'beta'),
)


class OpennessProfile(object):
  """Membership of one fuzzy set in each generalized open class.

  Parameters
  ----------
  open : bool
    Member of the topology.
  a_open : bool
    Fixpoint of the aura interior.
  semi, pre, alpha, beta, b : bool
    Membership in the five generalized classes.
  check : bool
    Raise InternalError if the hierarchy is violated.

  """

  def __init__(self, open, a_open, semi, pre, alpha, beta, b, check=True):
    self.open = open
    self.a_open = a_open
    self.semi = semi
    self.pre = pre
    self.alpha = alpha
    self.beta = beta
    self.b = b
    if check:
      broken = self.violation()
      if broken is not None:
        raise er.InternalError("Open set hierarchy violated: {} without {}".format(*broken))

  def violation(self):
    """The first (premise, conclusion) pair of the hierarchy that fails, or None."""
    for premise, conclusion in HIERARCHY:
      if getattr(self, premise) and not getattr(self, conclusion):
        return (premise, conclusion)
    return None

  def __repr__(self):
    return 'OpennessProfile({})'.format(self.to_dict())

  def to_dict(self):
    return {flag: getattr(self, flag) for flag in FLAGS}


def openness_profile(space, mu, check=True):
  """Classify a fuzzy set into the generalized open classes of an aura space.

  Parameters
  ----------
  space : AuraSpace
    The space. int is the interior of its topology, cl_a its aura closure.
  mu : FuzzySet
    The set to classify.
  check : bool
    Raise InternalError if the result breaks the hierarchy.

  Returns
  -------
  OpennessProfile

  """
  a_open = au.is_a_open(space, mu)
  if space.is_discrete:
    # int is the identity and mu <= cl_a(mu) always, so every inequality holds.
    return OpennessProfile(True, a_open, True, True, True, True, True, check=check)

  eps = space.eps
  interior = lambda m: space.topology.interior(m, eps)
  closure = lambda m: au.aura_closure(space, m)

  cl_int = closure(interior(mu))
  int_cl = interior(closure(mu))
  return OpennessProfile(
    open=space.topology.contains(mu, eps),
    a_open=a_open,
    semi=mu.leq(cl_int, eps),
    pre=mu.leq(int_cl, eps),
    alpha=mu.leq(interior(cl_int), eps),
    beta=mu.leq(closure(int_cl), eps),
    b=mu.leq(la.join(cl_int, int_cl), eps),
    check=check
  )


def openness_profiles(space, samples, num_threads=1):
  """Profile a batch of sets, optionally over a pathos pool."""
  return mh.multi_map(lambda mu: openness_profile(space, mu, check=False), samples, num_threads)


def hierarchy_check(space, samples):
  """Evaluate the hierarchy on every sample and return the first violation.

  Returns
  -------
  Verdict
    ok, or a violation whose witness is the offending sample's index.

  """
  samples = list(samples)
  for num, mu in enumerate(samples):
    profile = openness_profile(space, mu, check=False)
    broken = profile.violation()
    if broken is not None:
      return ve.Verdict(
        ve.VIOLATION,
        "Sample {} is {} but not {}".format(num, broken[0], broken[1]),
        witness=num,
        details={'profile': profile.to_dict()}
      )
  return ve.Verdict(ve.OK, details={'samples': len(samples)})


def join_closure_check(space, samples, kind):
  """Check that joins of semi-open (or pre-open) samples stay in their class.

  Every pairwise join and the join of the whole class are tested.

  Parameters
  ----------
  space : AuraSpace
    The space.
  samples : list of FuzzySet
    Candidates. Those outside the class are ignored.
  kind : 'semi' or 'pre'
    Which class.

  Returns
  -------
  Verdict

  """
  if kind not in ('semi', 'pre'):
    raise ValueError("{} is an invalid kind. Accepted kinds are ('semi', 'pre')".format(kind))

  members = [mu for mu in samples if getattr(openness_profile(space, mu, check=False), kind)]
  candidates = [la.join(a, b) for a, b in itertools.combinations(members, 2)]
  if members:
    candidates.append(la.join_all(members, space.universe))

  for num, joined in enumerate(candidates):
    if not getattr(openness_profile(space, joined, check=False), kind):
      return ve.Verdict(
        ve.VIOLATION,
        "A join of {}-open samples is not {}-open".format(kind, kind),
        witness=joined
      )
  return ve.Verdict(ve.OK, details={'members': len(members), 'joins': len(candidates)})


def alpha_meet_report(space, samples):
  """Count pairwise meets of alpha-open samples that stay alpha-open.

  Meets of alpha-open sets are not alpha-open in general, transitive scope or not, so this only reports.

  Returns
  -------
  Verdict
    ok when every meet stays alpha-open, otherwise a violation naming the first failing pair. details holds the counts and whether the scope is transitive.

  """
  members = [mu for mu in samples if openness_profile(space, mu, check=False).alpha]
  pairs = 0
  preserved = 0
  first = None
  for a, b in itertools.combinations(members, 2):
    pairs += 1
    if openness_profile(space, la.meet(a, b), check=False).alpha:
      preserved += 1
    elif first is None:
      first = (a, b)

  details = {
    'pairs': pairs,
    'preserved': preserved,
    'transitive': au.classify_scope(space).transitive
  }
  if first is None:
    return ve.Verdict(ve.OK, details=details)

  logging.info("%s of %s meets of alpha-open sets stay alpha-open", preserved, pairs)
  return ve.Verdict(
    ve.VIOLATION,
    "The meet of {!r} and {!r} is not alpha-open".format(*first),
    witness=first,
    details=details
  )
