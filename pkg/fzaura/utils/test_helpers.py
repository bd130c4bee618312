"""Shared unittest base class and hypothesis strategies for the fzaura test suites."""
from __future__ import print_function
import collections
import itertools
import os
import shutil
import tempfile
import unittest
import numpy as np
import hypothesis as hp
import hypothesis.strategies as st
import fzaura.globs as gl
import fzaura.spaces.lattice as la
import fzaura.spaces.topology as to
import fzaura.spaces.aura as au
import fzaura.mcdm.famcdm as fa

# Every randomized law check runs with these settings.
LAW_SETTINGS = hp.settings(max_examples=500, deadline=None)

# Grades drawn from {0, 0.1, ..., 1}.
LATTICE_GRADES = [round(0.1 * i, 1) for i in range(11)]


class FATest(unittest.TestCase):
  def setUp(self):
      self.temp_dir = tempfile.mkdtemp()

  def tearDown(self):
      shutil.rmtree(self.temp_dir)

  def equals(self, first, second, eps=gl.EPS):
    """Assert equality of two fuzzy sets, arrays, lists or plain values. Prints both on failure."""
    if isinstance(first, la.FuzzySet):
      first = first.grades
    if isinstance(second, la.FuzzySet):
      second = second.grades

    if isinstance(first, (np.ndarray, list, tuple)) and not isinstance(first, str):
      try:
        self.assertTrue(arrays_equal(first, second, eps))
      except AssertionError as e:
        print("FIRST ", np.array(first).tolist())
        print("SECOND", np.array(second).tolist())
        raise e
    else:
      try:
        if isinstance(first, float):
          self.assertTrue(abs(first - second) <= eps)
        else:
          self.assertEqual(first, second)
      except (ValueError, AssertionError) as e:
        print("FIRST", first, type(first))
        print("SECOND", second, type(second))
        raise e

  def write_read(self, trans, temp_dir, file_type='pickle'):
    """Save a Transform to disk and rebuild it from the file."""
    temp_file_path = os.path.join(temp_dir, 'temp.' + file_type)
    trans.save_to_file(temp_file_path)
    cls = trans.__class__
    trans = cls(from_file=temp_file_path)

    return trans


def arrays_equal(first, second, eps=gl.EPS):
  first = np.array(first, dtype=np.float64)
  second = np.array(second, dtype=np.float64)

  # Check that the arrays are the same shape.
  if first.shape != second.shape:
    return False
  if first.size == 0:
    return True
  if not (np.isnan(first) == np.isnan(second)).all():
    return False
  mask = ~np.isnan(first)
  return bool((np.abs(first[mask] - second[mask]) <= eps).all())


#####################
# Hypothesis strategies
#####################
def universes(min_size=1, max_size=6):
  return st.integers(min_size, max_size).map(
    lambda n: la.Universe(['x{}'.format(i) for i in range(n)])
  )


def grade_lists(size):
  return st.lists(st.sampled_from(LATTICE_GRADES), min_size=size, max_size=size)


def fuzzy_sets(universe):
  return grade_lists(universe.size).map(lambda g: la.FuzzySet(universe, g))


def _with_unit_diagonal(n, flat):
  matrix = np.array(flat, dtype=np.float64).reshape(n, n)
  np.fill_diagonal(matrix, 1.0)
  return matrix


@st.composite
def scope_functions(draw, universe, kind='any'):
  """Draw a scope function over universe.

  kind is one of 'any', 'symmetric', 'transitive', 'similarity' (symmetric and transitive), 'crisp', 'trivial', 'identity'.
  """
  n = universe.size
  if kind == 'trivial':
    return au.ScopeFunction.trivial(universe)
  if kind == 'identity':
    return au.ScopeFunction.identity(universe)

  if kind == 'crisp':
    flat = draw(st.lists(st.sampled_from([0.0, 1.0]), min_size=n * n, max_size=n * n))
  else:
    flat = draw(grade_lists(n * n))
  matrix = _with_unit_diagonal(n, flat)

  if kind in ('symmetric', 'similarity'):
    matrix = np.minimum(matrix, matrix.T)
  if kind in ('transitive', 'similarity'):
    # The max-min transitive closure of a reflexive relation is reflexive and transitive.
    for _ in range(n):
      composed = np.max(np.minimum(matrix[:, :, np.newaxis], matrix[np.newaxis, :, :]), axis=1)
      matrix = np.maximum(matrix, composed)
  return au.ScopeFunction(universe, matrix)


@st.composite
def topologies(draw, universe, max_subbasis=3, allow_discrete=False):
  if allow_discrete and draw(st.booleans()):
    return to.DiscreteTopology(universe)
  subbasis = draw(st.lists(fuzzy_sets(universe), min_size=0, max_size=max_subbasis))
  if not subbasis:
    return to.FuzzyTopology.indiscrete(universe)
  return to.generate(subbasis)


@st.composite
def aura_spaces(draw, min_size=1, max_size=4, scope_kind='any', allow_discrete=False):
  universe = draw(universes(min_size, max_size))
  topology = draw(topologies(universe, allow_discrete=allow_discrete))
  scope = draw(scope_functions(universe, scope_kind))
  return au.AuraSpace(universe, topology, scope)


@st.composite
def refinement_pairs(draw, min_size=1, max_size=5):
  """Draw two spaces over one universe whose second scope lies pointwise below the first."""
  universe = draw(universes(min_size, max_size))
  coarse = draw(scope_functions(universe))
  n = universe.size
  factors = np.array(draw(grade_lists(n * n))).reshape(n, n)
  fine = _with_unit_diagonal(n, (coarse.matrix * factors).ravel())
  topology = to.DiscreteTopology(universe)
  return (
    au.AuraSpace(universe, topology, coarse),
    au.AuraSpace(universe, topology, au.ScopeFunction(universe, fine))
  )


@st.composite
def partitions(draw, universe):
  labels = draw(st.lists(st.integers(0, universe.size - 1), min_size=universe.size, max_size=universe.size))
  blocks = {}
  for point, label in zip(universe.points, labels):
    blocks.setdefault(label, []).append(point)
  return [blocks[k] for k in sorted(blocks)]


def grid_topology(universe, levels=(0.0, 0.5, 1.0)):
  """The explicit topology of every fuzzy set whose grades lie in levels. Closed under min and max."""
  return to.FuzzyTopology(universe, [list(g) for g in itertools.product(levels, repeat=universe.size)])


@st.composite
def decision_problems(draw, max_alternatives=5, max_criteria=4, max_classes=3, allow_unknown=True):
  """Draw a DecisionProblem with lattice valued criteria and random positive weights."""
  m = draw(st.integers(1, max_alternatives))
  n = draw(st.integers(1, max_criteria))
  matrix = np.array(draw(grade_lists(m * n))).reshape(m, n)
  raw_weights = np.array(draw(st.lists(st.integers(1, 10), min_size=n, max_size=n)), dtype=np.float64)
  weights = raw_weights / raw_weights.sum()
  kinds = draw(st.lists(st.sampled_from(['benefit', 'cost']), min_size=n, max_size=n))
  criteria = [fa.CriterionSpec('C{}'.format(j + 1), k, w) for j, (k, w) in enumerate(zip(kinds, weights))]

  grade = st.sampled_from(LATTICE_GRADES)
  if allow_unknown:
    grade = st.one_of(grade, st.none())
  num_classes = draw(st.integers(1, max_classes))
  classes = collections.OrderedDict(
    ('D{}'.format(k + 1), draw(st.lists(grade, min_size=m, max_size=m))) for k in range(num_classes)
  )
  return fa.DecisionProblem(['u{}'.format(i + 1) for i in range(m)], criteria, matrix, classes)


#####################
# Medical diagnosis benchmark
#####################
MEDICAL_ALTERNATIVES = ['p1', 'p2', 'p3', 'p4', 'p5', 'p6']
MEDICAL_CRITERIA = ['C1', 'C2', 'C3', 'C4', 'C5']
MEDICAL_MATRIX = [
  [0.8, 0.6, 0.2, 0.6, 0.1],
  [0.0, 0.4, 0.6, 0.1, 0.1],
  [0.8, 0.8, 0.0, 0.2, 0.0],
  [0.6, 0.5, 0.3, 0.7, 0.3],
  [0.7, 0.5, 0.3, 0.5, 0.2],
  [0.1, 0.3, 0.7, 0.2, 0.0],
]
MEDICAL_CLASSES = collections.OrderedDict([
  ('Viral fever', [0.30, 0.20, 0.35, 0.35, None, None]),
  ('Malaria', [0.80, 0.10, 0.75, 0.70, None, None]),
  ('Typhoid', [0.50, 0.30, 0.55, 0.40, None, None]),
  ('Stomach problem', [0.15, 0.75, 0.10, 0.20, None, None]),
])
MEDICAL_LABELS = collections.OrderedDict([
  ('p1', 'Malaria'), ('p2', 'Stomach problem'), ('p3', 'Malaria'), ('p4', 'Malaria')
])


def medical_problem(weights=None):
  """The six patient diagnosis problem, with equal criteria weights unless weights is given."""
  if weights is None:
    weights = [0.2] * len(MEDICAL_CRITERIA)
  criteria = [fa.CriterionSpec(name, 'benefit', w) for name, w in zip(MEDICAL_CRITERIA, weights)]
  return fa.DecisionProblem(MEDICAL_ALTERNATIVES, criteria, MEDICAL_MATRIX, MEDICAL_CLASSES)
