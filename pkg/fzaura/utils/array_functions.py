"""Grade array kernels shared by the closure, interior and rough approximation operators."""
import numpy as np
import fzaura.globs as gl
import fzaura.errors as er


def as_floats(values, name='values', error=er.GradeError):
  """Convert to a float64 array, raising error instead of the numpy TypeError or ValueError on non numeric input."""
  try:
    return np.array(values, dtype=np.float64)
  except (TypeError, ValueError):
    raise error("{} must be numeric. Got {!r}".format(name, values))


def clean_grades(grades, eps=gl.EPS, name='grades'):
  """Convert to a float64 array of grades, clamping values that lie within eps of [0, 1].

  Parameters
  ----------
  grades : array like
    The raw grade values.
  eps : float
    Values in [-eps, 1 + eps] are accepted and clamped into [0, 1].
  name : str
    Used in the error message.

  Returns
  -------
  np.ndarray
    A new float64 array with every value in [0, 1].

  """
  grades = as_floats(grades, name)
  if np.isnan(grades).any():
    raise er.GradeError("{} contain NaN values".format(name))
  if grades.size and (grades.min() < -eps or grades.max() > 1.0 + eps):
    raise er.GradeError(
      "{} must lie in [0, 1]. Got values in [{}, {}]".format(name, grades.min(), grades.max())
    )
  return np.clip(grades, 0.0, 1.0)


def freeze(a):
  """Mark an array read only and return it."""
  a.flags.writeable = False
  return a


def sup_min(relation, grades):
  """Sup-min composition of a relation matrix with a grade vector.

  Parameters
  ----------
  relation : np.ndarray, shape (n, m)
    Row x holds the grades relation(x, y).
  grades : np.ndarray, shape (m,)
    The fuzzy set being composed.

  Returns
  -------
  np.ndarray, shape (n,)
    out[x] = max_y min(relation[x, y], grades[y])

  """
  return np.max(np.minimum(relation, grades[np.newaxis, :]), axis=1)


def inf_max(relation, grades):
  """Inf-max composition, the dual of sup_min.

  Parameters
  ----------
  relation : np.ndarray, shape (n, m)
    Row x holds the grades relation(x, y).
  grades : np.ndarray, shape (m,)
    The fuzzy set being composed.

  Returns
  -------
  np.ndarray, shape (n,)
    out[x] = min_y max(1 - relation[x, y], grades[y])

  """
  return np.min(np.maximum(1.0 - relation, grades[np.newaxis, :]), axis=1)


def relation_compose(first, second):
  """Max-min composition of two square relation matrices."""
  return np.max(np.minimum(first[:, :, np.newaxis], second[np.newaxis, :, :]), axis=1)


def all_leq(a, b, eps=gl.EPS):
  """Whether a <= b holds everywhere, up to eps."""
  return bool(np.all(a <= b + eps))


def all_close(a, b, eps=gl.EPS):
  """Whether a and b agree everywhere, up to eps."""
  return bool(np.all(np.abs(a - b) <= eps))


def row_index(rows, grades, eps=gl.EPS):
  """Find the first row of a matrix equal to grades up to eps.

  Parameters
  ----------
  rows : np.ndarray, shape (k, n)
    Stacked grade vectors.
  grades : np.ndarray, shape (n,)
    The vector to look for.

  Returns
  -------
  int or None
    The index of the first matching row, None if there is none.

  """
  if not len(rows):
    return None
  matches = np.where(np.all(np.abs(rows - grades[np.newaxis, :]) <= eps, axis=1))[0]
  if not matches.size:
    return None
  return int(matches[0])
