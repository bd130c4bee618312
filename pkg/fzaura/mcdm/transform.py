"""Base class of the fitted, saveable column mappings applied to decision matrices."""
import numpy as np
import pandas as pd
import fzaura.utils.dir_functions as d


class Transform(object):
  """A column-wise mapping of a decision matrix whose parameters are fitted on every alternative first.

  Subclasses extend attribute_dict with their own fitted values and implement _calc_global_values and _transform.

  Parameters
  ----------
  name : str
    Prefix of the generated column names when fitting a bare array.

  Attributes
  ----------
  attribute_dict: dict
    Attribute name to its default. These are exactly the values written by save_to_file.
  required_params: set of strs
    Keyword arguments the constructor insists on.
  cols : list of strs
    Criterion names seen while fitting.
  num_examples : int
    Number of alternatives seen while fitting.
  is_calc_run : bool
    Whether calc_global_values has finished.

  """

  attribute_dict = {'name': '', 'cols': None, 'num_examples': None, 'is_calc_run': False}
  required_params = set(['name'])

  def __init__(self, from_file=None, save_dict=None, **kwargs):
    """Build the transform from a saved file, from a save_dict or from keyword values of attribute_dict.

    Parameters
    ----------
    from_file : None or str
      A path written by save_to_file.
    save_dict : dict or None
      The output of _save_dict.
    **kwargs :
      Values for the keys of attribute_dict. Missing keys take their default.

    """
    if from_file is not None:
      self._from_save_dict(d.read_from_file(from_file))
    elif save_dict is not None:
      self._from_save_dict(save_dict)
    else:
      unknown = sorted(set(kwargs) - set(self.attribute_dict))
      if unknown:
        raise TypeError("{} got unexpected keyword argument {}".format(self.__class__.__name__, unknown[0]))
      missing = sorted(self.required_params - set(kwargs))
      if missing:
        raise TypeError("Must supply '{}' as an argument".format(missing[0]))

      for key, default in self.attribute_dict.items():
        setattr(self, key, kwargs.get(key, default))

  def _calc_global_values(self, array):
    raise NotImplementedError()

  def _start_calc(self):
    self.num_examples = 0

  def _finish_calc(self):
    return

  def _from_save_dict(self, save_dict):
    for key in self.attribute_dict:
      setattr(self, key, save_dict[key])

  def _save_dict(self):
    """Attribute values keyed by name, with arrays turned into lists so the result can go to JSON."""
    save_dict = {}
    for key in self.attribute_dict:
      value = getattr(self, key)
      save_dict[key] = value.tolist() if isinstance(value, np.ndarray) else value
    save_dict['__class__'] = str(self.__class__.__name__)
    save_dict['__module__'] = str(self.__class__.__module__)
    return save_dict

  def _transform(self, array):
    raise NotImplementedError()

  def calc_global_values(self, data):
    """Fit the transform on the whole decision matrix.

    Parameters
    ----------
    data : np.array or pd.DataFrame
      Alternatives by criteria. A DataFrame's columns name the criteria.

    """
    columns = data.columns if isinstance(data, pd.DataFrame) else None
    array = np.asarray(data)
    if array.ndim != 2:
      raise ValueError("Only rank 2 arrays are supported for transforms. Got {}".format(array.ndim))
    if not array.shape[0]:
      raise ValueError("No data was passed to calc_global_values.")
    if columns is not None:
      self.cols = [str(c) for c in columns]
    else:
      self.cols = ['{}_{}'.format(self.name, dim) for dim in range(array.shape[1])]

    self._start_calc()
    self._calc_global_values(array.astype(np.float64))
    self.num_examples = array.shape[0]
    self._finish_calc()
    self.is_calc_run = True

  def transform(self, data):
    """Apply the fitted mapping. Returns a DataFrame when given one, otherwise an array."""
    if not self.is_calc_run:
      raise ValueError("Must run calc_global_values before transforming data.")
    array = np.asarray(data, dtype=np.float64)
    if array.ndim != 2 or array.shape[1] != len(self.cols):
      raise ValueError("Expected a rank 2 array with {} columns. Got shape {}".format(len(self.cols), array.shape))
    out = self._transform(array)
    if isinstance(data, pd.DataFrame):
      return pd.DataFrame(out, index=data.index, columns=data.columns)
    return out

  def save_to_file(self, path):
    """Write the fitted transform to a '.json' or '.pickle' path."""
    d.save_to_file(self._save_dict(), path)
