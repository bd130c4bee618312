import unittest
import unittest.mock as mock
import hypothesis as hp
import hypothesis.strategies as st
import fzaura.utils.test_helpers as th
import fzaura.spaces.lattice as la
import fzaura.spaces.topology as to
import fzaura.spaces.aura as au
import fzaura.properties.separation as se
import fzaura.verdict as ve


class TestSeparation(th.FATest):
  def setUp(self):
    super(TestSeparation, self).setUp()
    self.X2 = la.Universe(['p', 'q'])
    self.X3 = la.Universe(['p', 'q', 'r'])

  def test_trivial_scope_not_t0(self):
    for top in (th.grid_topology(self.X3), to.DiscreteTopology(self.X3)):
      space = au.AuraSpace(self.X3, top, au.ScopeFunction.trivial(self.X3))
      profile = se.separation_profile(space)
      self.assertIs(profile.t0, False)
      self.assertFalse(profile.t1)
      self.assertFalse(profile.t2)

  def test_identity_scope(self):
    for top in (th.grid_topology(self.X2), to.DiscreteTopology(self.X2)):
      space = au.AuraSpace(self.X2, top, au.ScopeFunction.identity(self.X2))
      profile = se.separation_profile(space)
      self.assertTrue(profile.t0)
      self.assertTrue(profile.t1)
      self.assertTrue(profile.t2)
      self.assertTrue(profile.regular)
      self.assertEqual(profile.witnesses['t2']['p,q'], [[1.0, 0.0], [0.0, 1.0]])

  def test_identity_scope_three_points(self):
    space = au.AuraSpace(self.X3, th.grid_topology(self.X3), au.ScopeFunction.identity(self.X3))
    profile = se.separation_profile(space, cross_check=True)
    self.assertTrue(profile.t2)
    self.assertTrue(profile.regular)
    self.assertTrue(profile.t1_search)

  def test_cross_check_disagreement_warns(self):
    space = au.AuraSpace(self.X3, th.grid_topology(self.X3), au.ScopeFunction.identity(self.X3))
    with mock.patch.object(se, '_t1_search', return_value=False):
      with self.assertLogs(level='WARNING') as logs:
        profile = se.separation_profile(space, cross_check=True)
    self.assertTrue(profile.t1)
    self.assertIs(profile.t1_search, False)
    self.assertIn('disagree', logs.output[0])

  def test_scope_dependence(self):
    top = th.grid_topology(self.X2)
    fine = se.separation_profile(au.AuraSpace(self.X2, top, au.ScopeFunction.identity(self.X2)))
    coarse = se.separation_profile(au.AuraSpace(self.X2, top, au.ScopeFunction.trivial(self.X2)))
    self.assertTrue(fine.t2)
    self.assertFalse(coarse.t0)
    self.assertEqual(coarse.witnesses['t0'], {'violation': ['p', 'q']})

  def test_discrete_undecided(self):
    scope = au.ScopeFunction(self.X3, [[1.0, 0.8, 0.0], [0.0, 1.0, 0.7], [0.0, 0.0, 1.0]])
    profile = se.separation_profile(au.AuraSpace(self.X3, to.DiscreteTopology(self.X3), scope))
    self.assertFalse(profile.t1)
    self.assertFalse(profile.t2)
    self.assertIsNone(profile.t0)
    self.assertIsNone(profile.regular)
    self.assertEqual(profile.inapplicable, ['t0', 'regular'])

  def test_t1_fuzzy_point_check(self):
    identity = au.AuraSpace(self.X2, to.DiscreteTopology(self.X2), au.ScopeFunction.identity(self.X2))
    verdict = se.t1_fuzzy_point_check(identity)
    self.assertEqual(verdict.details, {'matrix_criterion': True, 'fuzzy_point_criterion': True})

    trivial = au.AuraSpace(self.X3, to.DiscreteTopology(self.X3), au.ScopeFunction.trivial(self.X3))
    verdict = se.t1_fuzzy_point_check(trivial)
    self.assertEqual(verdict.details, {'matrix_criterion': False, 'fuzzy_point_criterion': False})

    X1 = la.Universe(['only'])
    single = au.AuraSpace(X1, to.DiscreteTopology(X1), au.ScopeFunction.identity(X1))
    self.assertTrue(se.t1_fuzzy_point_check(single).details['matrix_criterion'])

  def test_t0_converse_report(self):
    # Distinct auras, but the indiscrete topology leaves nothing to separate with.
    space = au.AuraSpace(self.X2, to.FuzzyTopology.indiscrete(self.X2), au.ScopeFunction.identity(self.X2))
    verdict = se.t0_converse_report(space)
    self.assertEqual(verdict.status, ve.VIOLATION)
    self.assertEqual(verdict.details, {'distinct_auras': True, 't0': False})

    space = au.AuraSpace(self.X2, th.grid_topology(self.X2), au.ScopeFunction.identity(self.X2))
    self.assertTrue(se.t0_converse_report(space).ok)

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_separation_laws(self, data):
    space = data.draw(th.aura_spaces(max_size=4, allow_discrete=True))
    profile = se.separation_profile(space, cross_check=True)
    if profile.t2:
      self.assertTrue(profile.t1)
    if profile.t1 and profile.t0 is not None and space.auras_are_open():
      self.assertTrue(profile.t0)
    se.t1_fuzzy_point_check(space)

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_strict_chain(self, data):
    X = data.draw(th.universes(max_size=3))
    scope = data.draw(th.scope_functions(X, 'crisp'))
    top = to.generate(scope.auras())
    space = au.AuraSpace(X, top, scope, mode='strict')
    profile = se.separation_profile(space)
    if profile.t1:
      self.assertTrue(profile.t0)


if __name__ == "__main__":
    unittest.main()
