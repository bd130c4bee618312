"""Recompute the medical diagnosis benchmark from its input tables and compare with the stored expectations."""
import collections
import logging
import os
import numpy as np
import pandas as pd
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.mcdm.famcdm as fa
import fzaura.mcdm.sensitivity as sn
import fzaura.read_write.codecs as co
import fzaura.utils.dir_functions as d

DEFAULT_DATA_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'paper-data'))

# Tables printed with two decimals are checked at the tolerance, three decimal tables at a fifth of it.
TABLES = collections.OrderedDict([
  ('aura_similarity', 2),
  ('upper_approximation', 2),
  ('lower_approximation', 2),
  ('scores', 3),
  ('classification', None),
  ('weight_sensitivity', None),
  ('alpha_sweep', 3),
])


class TableCheck(object):
  """The comparison of one recomputed table with its expectation.

  Attributes
  ----------
  name : str
    The table name.
  passed : bool
    Whether every cell is within tolerance and every label matches.
  max_deviation : float
    Largest absolute cell deviation. 0 for label tables.
  tolerance : float or None
    The allowed deviation. None for label tables.
  failures : list of str
    One entry per failing cell, naming its row and column.

  """

  def __init__(self, name, max_deviation, tolerance, failures):
    self.name = name
    self.max_deviation = max_deviation
    self.tolerance = tolerance
    self.failures = failures
    self.passed = not failures

  def __repr__(self):
    return 'TableCheck({!r}, passed={}, max_deviation={})'.format(self.name, self.passed, self.max_deviation)

  def to_dict(self):
    return {
      'name': self.name,
      'passed': self.passed,
      'max_deviation': self.max_deviation,
      'tolerance': self.tolerance,
      'failures': self.failures
    }


class ReproReport(object):
  """Per table results of a reproduction run."""

  def __init__(self, checks):
    self.checks = checks

  @property
  def passed(self):
    return all(c.passed for c in self.checks)

  def frame(self):
    return pd.DataFrame(
      [(c.passed, c.max_deviation, c.tolerance) for c in self.checks],
      index=[c.name for c in self.checks],
      columns=['passed', 'max_deviation', 'tolerance']
    )

  def failures(self):
    return ['{}: {}'.format(c.name, f) for c in self.checks for f in c.failures]

  def to_dict(self):
    return {'passed': self.passed, 'tables': [c.to_dict() for c in self.checks]}


def compare_frames(name, expected, computed, tolerance):
  """Compare two labelled tables cell by cell.

  Missing rows or columns are failures. A cell fails when it deviates by more than tolerance.
  """
  failures = []
  for label in expected.index:
    if label not in computed.index:
      failures.append("missing row '{}'".format(label))
  for label in expected.columns:
    if label not in computed.columns:
      failures.append("missing column '{}'".format(label))
  if failures:
    return TableCheck(name, float('nan'), tolerance, failures)

  computed = computed.loc[expected.index, expected.columns].astype(np.float64)
  deviation = (computed - expected.astype(np.float64)).abs()
  for row in expected.index:
    for column in expected.columns:
      if deviation.loc[row, column] > tolerance + gl.EPS:
        failures.append(
          "cell ({}, {}) expected {} got {:.6f}".format(row, column, expected.loc[row, column], computed.loc[row, column])
        )
  return TableCheck(name, float(deviation.values.max()), tolerance, failures)


def compare_labels(name, expected, computed):
  """Compare two dicts of class labels."""
  failures = []
  for key, label in expected.items():
    got = computed.get(key)
    if got != label:
      failures.append("'{}' expected {} got {}".format(key, label, got))
  return TableCheck(name, 0.0, None, failures)


def _read_frame(data_dir, name):
  path = os.path.join(data_dir, 'expected', name + '.csv')
  try:
    frame = d.read_from_file(path)
  except (IOError, OSError) as e:
    raise er.FzAuraError("Could not read fixture {}: {}".format(path, e))
  frame.index = [str(i) for i in frame.index]
  return frame


def _read_json(data_dir, name):
  return co.read_json(os.path.join(data_dir, 'expected', name + '.json'))


def reproduce(data_dir=None, tolerance=gl.DEFAULT_TOLERANCE, tables=None, num_threads=1):
  """Recompute every benchmark table from the decision problem alone and compare.

  Parameters
  ----------
  data_dir : str or None
    Directory holding medical.json and the expected/ tables. Defaults to the bundled paper-data directory.
  tolerance : float
    Allowed deviation of two decimal tables. Three decimal tables allow a fifth of it.
  tables : list of str or None
    Subset of TABLES to check. All when None.
  num_threads : int
    Workers for the weight scenarios.

  Returns
  -------
  ReproReport

  """
  data_dir = data_dir or DEFAULT_DATA_DIR
  tables = list(TABLES) if tables is None else list(tables)
  for table in tables:
    if table not in TABLES:
      raise er.ProblemError("Unknown table '{}'. Known tables are {}".format(table, list(TABLES)))
  if tolerance < 0:
    raise er.ProblemError("tolerance must be non-negative. Got {}".format(tolerance))

  def tolerance_of(table):
    return tolerance if TABLES[table] == 2 else tolerance / 5.0

  problem = co.load_problem(os.path.join(data_dir, 'medical.json'))
  classification = _read_json(data_dir, 'classification')
  result = fa.run(problem, classification['alpha'])

  computed = {
    'aura_similarity': result.aura_frame(),
    'upper_approximation': result.upper_frame(),
    'lower_approximation': result.lower_frame(),
    'scores': result.scores,
  }

  checks = []
  for table in tables:
    if table in computed:
      check = compare_frames(table, _read_frame(data_dir, table), computed[table], tolerance_of(table))
    elif table == 'classification':
      check = compare_labels(table, classification['classification'], dict(result.classification['class']))
      accuracy = fa.reference_accuracy(result, classification['reference'])
      if accuracy != 1.0:
        check.failures.append('reference accuracy {}'.format(accuracy))
        check.passed = False
    elif table == 'weight_sensitivity':
      expected = _read_json(data_dir, table)
      report = sn.weight_sensitivity(
        problem, collections.OrderedDict(expected['scenarios'].items()), expected['alpha'], num_threads
      )
      failures = []
      labels = classification['reference']
      for name in report.names:
        assigned = dict(report.table[name])
        failures.extend(
          '{} {}'.format(name, f) for f in compare_labels(table, expected['classification'][name], assigned).failures
        )
        failures.extend(
          '{} reference {}'.format(name, f) for f in compare_labels(table, labels, assigned).failures
        )
      check = TableCheck(table, 0.0, None, failures)
    else:
      expected = _read_json(data_dir, table)
      report = sn.alpha_sweep(problem, expected['alphas'], num_threads)
      names = ['{:g}'.format(a) for a in expected['alphas']]
      frame = pd.DataFrame(expected['scores'], index=names, columns=expected['classes'])
      check = compare_frames(table, frame, report.alternative_scores(expected['alternative']), tolerance_of(table))
      assigned = report.table.loc[expected['alternative']]
      for name, label in zip(names, expected['classification']):
        if assigned[name] != label:
          check.failures.append("alpha {} expected {} got {}".format(name, label, assigned[name]))
      check.passed = not check.failures

    logging.info("Table %s %s (max deviation %s)", table, 'passed' if check.passed else 'failed', check.max_deviation)
    checks.append(check)
  return ReproReport(checks)
