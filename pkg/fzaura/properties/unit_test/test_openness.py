import unittest
import hypothesis as hp
import hypothesis.strategies as st
import fzaura.utils.test_helpers as th
import fzaura.spaces.lattice as la
import fzaura.spaces.topology as to
import fzaura.spaces.aura as au
import fzaura.properties.openness as op
import fzaura.errors as er


def four_point_space():
  X = la.Universe(['p', 'q', 'r', 's'])
  top = to.generate([la.FuzzySet(X, [0.8, 0.0, 0.5, 0.0]), la.FuzzySet(X, [0.0, 0.7, 0.0, 0.6])])
  scope = au.ScopeFunction(X, [
    [1.0, 0.6, 0.3, 0.0],
    [0.5, 1.0, 0.0, 0.4],
    [0.3, 0.0, 1.0, 0.7],
    [0.0, 0.4, 0.6, 1.0],
  ])
  return au.AuraSpace(X, top, scope)


def two_point_trivial_space():
  X = la.Universe(['p', 'q'])
  top = to.FuzzyTopology(X, [[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]])
  return au.AuraSpace(X, top, au.ScopeFunction.trivial(X))


class TestOpenness(th.FATest):
  def setUp(self):
    super(TestOpenness, self).setUp()
    self.space = four_point_space()
    self.X = self.space.universe

  def test_neither_semi_nor_pre(self):
    mu = la.FuzzySet(self.X, [0.7, 0.5, 0.0, 0.0])
    profile = op.openness_profile(self.space, mu)
    self.assertFalse(profile.semi)
    self.assertFalse(profile.pre)
    self.assertFalse(profile.alpha)
    self.assertFalse(profile.b)
    self.assertFalse(profile.beta)
    self.assertFalse(profile.open)

  def test_members_are_alpha_open(self):
    for member in self.space.topology.members:
      profile = op.openness_profile(self.space, member)
      self.assertTrue(profile.open)
      for flag in ('alpha', 'semi', 'pre', 'b', 'beta'):
        self.assertTrue(getattr(profile, flag))
    self.assertTrue(op.hierarchy_check(self.space, self.space.topology.members).ok)

  def test_zero(self):
    profile = op.openness_profile(self.space, la.constant(self.X, 0.0))
    self.assertTrue(all(profile.to_dict().values()))

  def test_discrete(self):
    space = au.AuraSpace(self.X, to.DiscreteTopology(self.X), self.space.scope)
    profile = op.openness_profile(space, la.FuzzySet(self.X, [0.7, 0.5, 0.0, 0.0]))
    for flag in ('open', 'semi', 'pre', 'alpha', 'beta', 'b'):
      self.assertTrue(getattr(profile, flag))

  def test_profile_check(self):
    with self.assertRaises(er.InternalError):
      op.OpennessProfile(True, True, True, True, False, True, True)
    profile = op.OpennessProfile(False, False, True, False, False, False, True, check=False)
    self.assertEqual(profile.violation(), ('b', 'beta'))

  def test_hierarchy_check(self):
    mu = la.FuzzySet(self.X, [0.7, 0.5, 0.0, 0.0])
    verdict = op.hierarchy_check(self.space, [mu])
    self.assertTrue(verdict.ok)
    self.assertEqual(verdict.details['samples'], 1)

  def test_join_closure_check(self):
    samples = list(self.space.topology.members) + [la.FuzzySet(self.X, [0.7, 0.5, 0.0, 0.0])]
    self.assertTrue(op.join_closure_check(self.space, samples, 'semi').ok)
    self.assertTrue(op.join_closure_check(self.space, samples, 'pre').ok)
    with self.assertRaises(ValueError):
      op.join_closure_check(self.space, samples, 'alpha')

  def test_alpha_meet_counterexample(self):
    space = two_point_trivial_space()
    X = space.universe
    mu = la.FuzzySet(X, [1.0, 0.5])
    nu = la.FuzzySet(X, [0.5, 1.0])
    self.assertTrue(op.openness_profile(space, mu).alpha)
    self.assertTrue(op.openness_profile(space, nu).alpha)
    self.assertFalse(op.openness_profile(space, mu & nu).alpha)

    report = op.alpha_meet_report(space, [mu, nu])
    self.assertFalse(report.ok)
    self.assertEqual(report.details, {'pairs': 1, 'preserved': 0, 'transitive': True})

  def test_batch(self):
    samples = list(self.space.topology.members)
    profiles = op.openness_profiles(self.space, samples)
    self.assertEqual(len(profiles), len(samples))
    self.assertTrue(all(p.alpha for p in profiles))

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_hierarchy(self, data):
    space = data.draw(th.aura_spaces(max_size=4, allow_discrete=True))
    samples = data.draw(st.lists(th.fuzzy_sets(space.universe), min_size=1, max_size=4))
    self.assertTrue(op.hierarchy_check(space, samples).ok)

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_join_laws(self, data):
    space = data.draw(th.aura_spaces(max_size=4))
    samples = data.draw(st.lists(th.fuzzy_sets(space.universe), min_size=1, max_size=4))
    samples += list(space.topology.members)[:4]
    self.assertTrue(op.join_closure_check(space, samples, 'semi').ok)
    self.assertTrue(op.join_closure_check(space, samples, 'pre').ok)


if __name__ == "__main__":
    unittest.main()
