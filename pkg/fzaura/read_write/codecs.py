"""JSON and CSV readers and writers for sets, topologies, spaces, point maps and decision problems."""
import collections
import numpy as np
import pandas as pd
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.spaces.lattice as la
import fzaura.spaces.topology as to
import fzaura.spaces.aura as au
import fzaura.properties.morphisms as mo
import fzaura.mcdm.famcdm as fa
import fzaura.mcdm.norm_transform as nt
import fzaura.utils.dir_functions as d


def _require(obj_dict, key, what):
  if not isinstance(obj_dict, dict):
    raise er.FzAuraError("A {} must be a JSON object. Got {}".format(what, type(obj_dict).__name__))
  if key not in obj_dict:
    raise er.FzAuraError("The {} is missing the '{}' key".format(what, key))
  return obj_dict[key]


def _universe(obj_dict, what, universe=None):
  """Read the optional 'universe' key, checking it against universe when both are present."""
  if 'universe' not in obj_dict:
    if universe is None:
      raise er.FzAuraError("The {} is missing the 'universe' key".format(what))
    return universe
  read_universe = la.Universe(obj_dict['universe'])
  if universe is not None:
    if read_universe != universe:
      raise er.UniverseMismatchError(
        "The {} is over {}, expected {}".format(what, list(read_universe.points), list(universe.points))
      )
    return universe
  return read_universe


def read_json(file_name):
  """Read a JSON file, turning I/O and syntax failures into FzAuraError."""
  try:
    return d.read_from_file(file_name)
  except (IOError, OSError) as e:
    raise er.FzAuraError("Could not read {}: {}".format(file_name, e))
  except ValueError as e:
    raise er.FzAuraError("Could not parse {}: {}".format(file_name, e))


def write_json(obj, file_name):
  d.save_to_file(obj, file_name)


#####################
# Fuzzy sets
#####################
def fuzzy_set_to_dict(mu):
  return mu.to_dict()


def fuzzy_set_from_dict(fs_dict, universe=None, eps=gl.EPS):
  _require(fs_dict, 'grades', 'fuzzy set')
  return la.FuzzySet(_universe(fs_dict, 'fuzzy set', universe), fs_dict['grades'], eps)


#####################
# Topologies
#####################
def topology_to_dict(topology):
  return topology.to_dict()


def topology_from_dict(t_dict, universe=None, verify=True, eps=gl.EPS):
  """Read {'universe': [...], 'members': [...]} or {'universe': [...], 'discrete': true}. The universe may be left out when given."""
  universe = _universe(t_dict, 'topology', universe)
  if t_dict.get('discrete', False):
    return to.DiscreteTopology(universe)
  members = _require(t_dict, 'members', 'topology')
  return to.FuzzyTopology(universe, members, verify=verify, eps=eps)


#####################
# Aura spaces
#####################
def space_to_dict(space):
  return {
    'universe': list(space.universe.points),
    'topology': space.topology.to_dict(),
    'scope': space.scope.to_dict(),
    'mode': space.mode
  }


def space_from_dict(s_dict, mode=None, eps=gl.EPS):
  """Build an AuraSpace. mode overrides the 'mode' key, which defaults to lenient."""
  universe = la.Universe(_require(s_dict, 'universe', 'space'))
  topology = topology_from_dict(_require(s_dict, 'topology', 'space'), universe, eps=eps)
  rows = _require(s_dict, 'scope', 'space')
  if not isinstance(rows, dict):
    raise er.ScopeError("The scope must map every point to its aura's grade list")
  scope = au.ScopeFunction.from_rows(universe, rows, eps)
  if mode is None:
    mode = s_dict.get('mode', 'lenient')
  return au.AuraSpace(universe, topology, scope, mode, eps)


#####################
# Point maps
#####################
def point_map_to_dict(f):
  return f.to_dict()


def point_map_from_dict(m_dict, source=None, target=None):
  """Build a PointMap. Given universes must match the serialized ones and are shared with the result."""
  source = _universe({'universe': _require(m_dict, 'source', 'point map')}, 'point map source', source)
  target = _universe({'universe': _require(m_dict, 'target', 'point map')}, 'point map target', target)
  return mo.PointMap(source, target, _require(m_dict, 'map', 'point map'))


#####################
# Decision problems
#####################
def problem_to_dict(problem):
  return problem.to_dict()


def problem_from_dict(p_dict, eps=gl.EPS):
  classes = _require(p_dict, 'classes', 'decision problem')
  if not isinstance(classes, dict):
    raise er.ProblemError("'classes' must map every class name to its grades")
  return fa.DecisionProblem(
    _require(p_dict, 'alternatives', 'decision problem'),
    _require(p_dict, 'criteria', 'decision problem'),
    _require(p_dict, 'matrix', 'decision problem'),
    collections.OrderedDict(classes.items()),
    eps
  )


def problem_from_csv(matrix_file, classes_file, weights=None, kinds=None, eps=gl.EPS):
  """Read a problem from two CSV files.

  Parameters
  ----------
  matrix_file : str
    First column holds the alternatives, the header names the criteria.
  classes_file : str
    First column holds the alternatives, the header names the classes. Empty cells are unknown grades.
  weights : list of floats or None
    Criteria weights. Equal weights when None.
  kinds : list of strs or None
    'benefit' or 'cost' per criterion. All benefit when None.

  """
  try:
    matrix = d.read_from_file(matrix_file)
    classes = d.read_from_file(classes_file)
  except (IOError, OSError, ValueError) as e:
    raise er.FzAuraError("Could not read decision problem csv files: {}".format(e))

  alternatives = [str(a) for a in matrix.index]
  if [str(a) for a in classes.index] != alternatives:
    raise er.ProblemError(
      "The classes file lists alternatives {}, the matrix file {}".format(list(classes.index), alternatives)
    )
  names = [str(c) for c in matrix.columns]
  if weights is None:
    weights = [1.0 / len(names)] * len(names)
  if kinds is None:
    kinds = ['benefit'] * len(names)
  if len(weights) != len(names) or len(kinds) != len(names):
    raise er.ProblemError("Expected {} weights and kinds, one per criterion".format(len(names)))

  criteria = [fa.CriterionSpec(n, k, w) for n, k, w in zip(names, kinds, weights)]
  try:
    values = matrix.values.astype(np.float64)
  except ValueError:
    raise er.ProblemError("The decision matrix in {} must be numeric".format(matrix_file))
  classes = collections.OrderedDict((str(c), classes[c].tolist()) for c in classes.columns)
  return fa.DecisionProblem(alternatives, criteria, values, classes, eps)


def problem_to_csv(problem, matrix_file, classes_file):
  """Write the decision matrix and the class memberships as two CSV files. Unknown grades become empty cells."""
  d.save_to_file(problem.decision_frame(), matrix_file)
  d.save_to_file(problem.memberships, classes_file)


#####################
# File loaders
#####################
def load_set(file_name, universe=None):
  return fuzzy_set_from_dict(read_json(file_name), universe)


def load_topology(file_name, universe=None):
  return topology_from_dict(read_json(file_name), universe)


def load_space(file_name, mode=None):
  return space_from_dict(read_json(file_name), mode)


def load_map(file_name, source=None, target=None):
  return point_map_from_dict(read_json(file_name), source, target)


def load_problem(file_name, classes_file=None, weights=None, kinds=None):
  """Load a JSON problem, or a CSV problem when classes_file is given.

  weights and kinds, when given, replace the criteria weights and kinds of the file, one entry per criterion. A CSV problem otherwise gets equal weights and benefit criteria only.

  """
  if classes_file is not None:
    return problem_from_csv(file_name, classes_file, weights, kinds)
  p_dict = read_json(file_name)
  if weights is None and kinds is None:
    return problem_from_dict(p_dict)

  criteria = _require(p_dict, 'criteria', 'decision problem')
  if not isinstance(criteria, list) or not all(isinstance(c, dict) for c in criteria):
    raise er.ProblemError("'criteria' must be a list of {'name', 'kind', 'weight'} objects")
  for label, values in (('weights', weights), ('kinds', kinds)):
    if values is not None and len(values) != len(criteria):
      raise er.ProblemError("Expected {} {}, one per criterion. Got {}".format(len(criteria), label, len(values)))

  p_dict = dict(p_dict)
  p_dict['criteria'] = [dict(c) for c in criteria]
  for i, criterion in enumerate(p_dict['criteria']):
    if weights is not None:
      criterion['weight'] = weights[i]
    if kinds is not None:
      criterion['kind'] = kinds[i]
  return problem_from_dict(p_dict)


def load_normaliser(file_name):
  """Read a NormTransform written by save_normaliser."""
  try:
    return nt.NormTransform(from_file=file_name)
  except (IOError, OSError, EOFError, KeyError, TypeError, ValueError) as e:
    raise er.FzAuraError("Could not read normaliser {}: {}".format(file_name, e))


def save_normaliser(normaliser, file_name):
  """Write a fitted NormTransform to a '.json' or '.pickle' file."""
  try:
    normaliser.save_to_file(file_name)
  except (IOError, OSError, ValueError) as e:
    raise er.FzAuraError("Could not write normaliser {}: {}".format(file_name, e))



def load_sets(file_name, universe=None):
  """Load a single fuzzy set or a JSON list of them."""
  obj = read_json(file_name)
  if isinstance(obj, list):
    return [fuzzy_set_from_dict(o, universe) for o in obj]
  return [fuzzy_set_from_dict(obj, universe)]
