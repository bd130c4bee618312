import unittest
import numpy as np
import hypothesis as hp
import hypothesis.strategies as st
import fzaura.utils.test_helpers as th
import fzaura.spaces.lattice as la
import fzaura.spaces.topology as to
import fzaura.spaces.aura as au
import fzaura.rough.approximation as ra
import fzaura.verdict as ve
import fzaura.errors as er


def brute_accuracy(matrix, grades):
  n = len(grades)
  lower_sum = 0.0
  upper_sum = 0.0
  for x in range(n):
    low = 1.0
    up = 0.0
    for y in range(n):
      low = min(low, max(1.0 - matrix[x][y], grades[y]))
      up = max(up, min(matrix[x][y], grades[y]))
    lower_sum += low
    upper_sum += up
  return lower_sum / upper_sum


class TestApproximation(th.FATest):
  def setUp(self):
    super(TestApproximation, self).setUp()
    self.X = la.Universe(['p', 'q', 'r'])
    self.matrix = [[1.0, 0.8, 0.0], [0.0, 1.0, 0.7], [0.0, 0.0, 1.0]]
    self.space = au.AuraSpace(self.X, to.DiscreteTopology(self.X), au.ScopeFunction(self.X, self.matrix))
    self.mu = la.FuzzySet(self.X, [0.0, 0.0, 0.6])

  def test_approximate(self):
    pair = ra.approximate(self.space, self.mu)
    self.equals(pair.lower, [0.0, 0.0, 0.6])
    self.equals(pair.upper, [0.0, 0.6, 0.6])
    self.equals(pair.boundary, [0.0, 0.6, 0.0])
    self.assertEqual(pair.to_dict()['universe'], ['p', 'q', 'r'])

    one = la.constant(self.X, 1.0)
    pair = ra.approximate(self.space, one)
    self.equals(pair.lower, one)
    self.equals(pair.upper, one)
    self.equals(pair.boundary, la.constant(self.X, 0.0))

  def test_dubois_prade(self):
    identity = ra.FuzzyRelation(self.X, np.eye(3))
    pair = ra.dubois_prade(identity, self.mu)
    self.equals(pair.lower, self.mu)
    self.equals(pair.upper, self.mu)

    full = ra.FuzzyRelation(self.X, np.ones((3, 3)))
    nu = la.FuzzySet(self.X, [0.2, 0.9, 0.5])
    pair = ra.dubois_prade(full, nu)
    self.equals(pair.lower, la.constant(self.X, 0.2))
    self.equals(pair.upper, la.constant(self.X, 0.9))

    rel = ra.FuzzyRelation.from_scope(self.space.scope)
    self.equals(ra.dubois_prade(rel, self.mu).upper, au.aura_closure(self.space, self.mu))

    with self.assertRaises(er.ScopeError):
      ra.dubois_prade(ra.FuzzyRelation(self.X, np.zeros((3, 3))), self.mu)

  def test_pawlak(self):
    partition = [['p', 'q'], ['r']]
    self.assertEqual(ra.pawlak(self.X, partition, ['p']), (frozenset(), frozenset(['p', 'q'])))
    everything = frozenset(self.X.points)
    self.assertEqual(ra.pawlak(self.X, partition, self.X.points), (everything, everything))
    self.assertEqual(ra.pawlak(self.X, partition, []), (frozenset(), frozenset()))

    for bad in ([['p', 'q']], [['p', 'q'], ['q', 'r']], [['p', 'q', 'r'], []], [['p', 'q', 'r', 'z']]):
      with self.assertRaises(er.UniverseError):
        ra.pawlak(self.X, bad, ['p'])

  def test_accuracy(self):
    self.assertEqual(ra.accuracy(self.space, la.constant(self.X, 1.0)), (1.0, 0.0))
    self.assertEqual(ra.accuracy(self.space, la.constant(self.X, 0.0)), (1.0, 0.0))
    rho, sigma = ra.accuracy(self.space, self.mu)
    self.equals(rho, brute_accuracy(self.matrix, [0.0, 0.0, 0.6]))
    self.equals(rho, 0.5)
    self.equals(sigma, 0.5)

  def test_refinement_compare(self):
    nu = la.FuzzySet(self.X, [0.3, 0.8, 0.1])
    top = to.DiscreteTopology(self.X)
    coarse = au.AuraSpace(self.X, top, au.ScopeFunction.trivial(self.X))
    fine = au.AuraSpace(self.X, top, au.ScopeFunction.identity(self.X))
    verdict = ra.refinement_compare(coarse, fine, nu)
    self.assertTrue(verdict.ok)
    self.equals(verdict.details['fine']['lower'], nu.grades)
    self.equals(verdict.details['fine']['upper'], nu.grades)

    verdict = ra.refinement_compare(self.space, self.space, nu)
    self.assertEqual(verdict.details['coarse'], verdict.details['fine'])

    verdict = ra.refinement_compare(fine, coarse, nu)
    self.assertEqual(verdict.status, ve.INCOMPARABLE)

  def test_crisp_aura_approximation(self):
    scope = au.ScopeFunction(self.X, [[1.0, 1.0, 0.0], [0.0, 1.0, 0.0], [0.0, 1.0, 1.0]])
    space = au.AuraSpace(self.X, to.DiscreteTopology(self.X), scope)
    lower, upper = ra.crisp_aura_approximation(space, ['q'])
    self.assertEqual(lower, frozenset(['q']))
    self.assertEqual(upper, frozenset(['p', 'q', 'r']))
    with self.assertRaises(er.InapplicableError):
      ra.crisp_aura_approximation(self.space, ['q'])

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_rough_laws(self, data):
    space = data.draw(th.aura_spaces(max_size=6, allow_discrete=True))
    X = space.universe
    mu, nu = data.draw(th.fuzzy_sets(X)), data.draw(th.fuzzy_sets(X))
    zero, one = la.constant(X, 0.0), la.constant(X, 1.0)
    low = lambda m: ra.approximate(space, m).lower
    up = lambda m: ra.approximate(space, m).upper

    self.assertTrue(low(mu) <= mu)
    self.assertTrue(mu <= up(mu))
    for fixed in (zero, one):
      self.assertTrue(low(fixed).equals(fixed))
      self.assertTrue(up(fixed).equals(fixed))
    self.assertTrue(low(mu & nu).equals(low(mu) & low(nu)))
    self.assertTrue(up(mu | nu).equals(up(mu) | up(nu)))
    self.assertTrue(low(mu & nu) <= low(mu))
    self.assertTrue(up(mu) <= up(mu | nu))
    self.assertTrue(low(~mu).equals(~up(mu)))
    self.assertTrue(up(~mu).equals(~low(mu)))
    self.assertTrue(low(low(mu)) <= low(mu))
    self.assertTrue(up(mu) <= up(up(mu)))

    pair = ra.approximate(space, mu)
    self.assertTrue(np.all(pair.boundary.grades >= 0.0))
    rho, sigma = ra.accuracy(space, mu)
    self.assertTrue(0.0 <= rho <= 1.0)
    self.equals(rho + sigma, 1.0)

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_dubois_prade_identity(self, data):
    space = data.draw(th.aura_spaces(max_size=6))
    mu = data.draw(th.fuzzy_sets(space.universe))
    pair = ra.approximate(space, mu)
    dp = ra.dubois_prade(ra.FuzzyRelation.from_scope(space.scope), mu)
    self.assertTrue(np.array_equal(pair.lower.grades, dp.lower.grades))
    self.assertTrue(np.array_equal(pair.upper.grades, dp.upper.grades))

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_transitive_symmetric_closure_is_dubois_prade(self, data):
    space = data.draw(th.aura_spaces(max_size=6, scope_kind='similarity'))
    profile = au.classify_scope(space)
    self.assertTrue(profile.symmetric and profile.transitive)
    mu = data.draw(th.fuzzy_sets(space.universe))
    rel = ra.FuzzyRelation.from_scope(space.scope)
    self.assertTrue(au.aura_closure(space, mu).equals(ra.dubois_prade(rel, mu).upper, eps=0.0))

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_pawlak_agreement(self, data):
    X = data.draw(th.universes(max_size=5))
    partition = data.draw(th.partitions(X))
    subset = data.draw(st.sets(st.sampled_from(X.points)))
    space = au.AuraSpace(X, to.DiscreteTopology(X), ra.partition_scope(X, partition))
    pair = ra.approximate(space, la.characteristic(X, subset))

    lower, upper = ra.pawlak(X, partition, subset)
    self.assertEqual(lower, la.alpha_cut(pair.lower, 1.0))
    self.assertEqual(upper, la.alpha_cut(pair.upper, 1.0))

    # Brute force over the equivalence classes.
    block_of = {p: frozenset(b) for b in partition for p in b}
    self.assertEqual(lower, frozenset(p for p in X.points if block_of[p] <= frozenset(subset)))
    self.assertEqual(upper, frozenset(p for p in X.points if block_of[p] & frozenset(subset)))

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_crisp_aura_agreement(self, data):
    X = data.draw(th.universes(max_size=5))
    scope = data.draw(th.scope_functions(X, 'crisp'))
    space = au.AuraSpace(X, to.DiscreteTopology(X), scope)
    subset = data.draw(st.sets(st.sampled_from(X.points)))
    pair = ra.approximate(space, la.characteristic(X, subset))
    lower, upper = ra.crisp_aura_approximation(space, subset)
    self.assertEqual(lower, la.alpha_cut(pair.lower, 1.0))
    self.assertEqual(upper, la.alpha_cut(pair.upper, 1.0))

  @th.LAW_SETTINGS
  @hp.given(st.data())
  def test_refinement_monotonicity(self, data):
    coarse, fine = data.draw(th.refinement_pairs())
    mu = data.draw(th.fuzzy_sets(coarse.universe))
    self.assertTrue(ra.refinement_compare(coarse, fine, mu).ok)


if __name__ == "__main__":
    unittest.main()
