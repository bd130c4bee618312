"""Rendering command results as JSON, CSV or aligned text tables."""
import collections
import numpy as np
import pandas as pd
import fzaura.utils.dir_functions as d

FORMATS = ('json', 'csv', 'table')


def plain(obj):
  """Recursively convert numpy scalars and arrays, tuples and frozensets into JSON native values."""
  if isinstance(obj, dict):
    return collections.OrderedDict((str(k), plain(v)) for k, v in obj.items())
  if isinstance(obj, (list, tuple)):
    return [plain(v) for v in obj]
  if isinstance(obj, (set, frozenset)):
    return sorted(plain(v) for v in obj)
  if isinstance(obj, np.ndarray):
    return plain(obj.tolist())
  if isinstance(obj, np.bool_):
    return bool(obj)
  if isinstance(obj, np.integer):
    return int(obj)
  if isinstance(obj, np.floating):
    return float(obj)
  return obj


def to_json(obj):
  """Full precision JSON. Equal inputs give byte identical output."""
  return d.dumps(plain(obj))


def frame_to_text(df, decimals=None):
  """An aligned text table, floats rounded to decimals when given."""
  if decimals is None:
    return df.to_string()
  return df.to_string(float_format=lambda v: '{:.{}f}'.format(v, decimals))


def frame_to_csv(df):
  return df.to_csv()


def set_frame(mu, column='grade'):
  """One row per point."""
  return pd.DataFrame({column: mu.grades}, index=list(mu.universe.points))


def flags_frame(flags):
  """A one column table of named values."""
  return pd.DataFrame({'value': [plain(v) for v in flags.values()]}, index=list(flags.keys()))


def render(payload, fmt, tables=()):
  """Render a command result.

  Parameters
  ----------
  payload : dict
    The JSON form of the result.
  fmt : 'json', 'csv' or 'table'
    The output format.
  tables : list of (title, DataFrame, decimals)
    The tabular form of the result. CSV output is full precision.

  Returns
  -------
  str

  """
  if fmt not in FORMATS:
    raise ValueError("{} is an invalid format. Accepted formats are {}".format(fmt, FORMATS))
  if fmt == 'json' or not tables:
    return to_json(payload)

  blocks = []
  for title, df, decimals in tables:
    if fmt == 'csv':
      body = frame_to_csv(df).rstrip('\n')
      blocks.append('# ' + title + '\n' + body if len(tables) > 1 else body)
    else:
      blocks.append(title + '\n' + frame_to_text(df, decimals))
  return '\n\n'.join(blocks)
