"""NormTransform definition."""
import logging
import numpy as np
import fzaura.mcdm.transform as n

CRITERION_KINDS = ('benefit', 'cost')


class NormTransform(n.Transform):
  """Column-wise min-max normalization of a decision matrix onto [0, 1].

  Benefit columns map d to (d - min) / (max - min). Cost columns map d to (max - d) / (max - min). Constant columns map to 0.

  Parameters
  ----------
  name : str
    The name of the transform.
  kinds : list of strs or None
    'benefit' or 'cost' for each column. None treats every column as a benefit.

  Attributes
  ----------
  attribute_dict: dict
    The keys are the attributes of the class while the values are the default values.
  required_params: set of strs
    The parameters that must be provided to the transform at definition.
  cols : list of strs
    The column names of the array or dataframe to be transformed.
  min : numpy array
    The stored column minimums.
  max : numpy array
    The stored column maximums.

  """

  attribute_dict = {'kinds': None, 'min': None, 'max': None}

  for k, v in n.Transform.attribute_dict.items():
    if k in attribute_dict:
      continue
    attribute_dict[k] = v

  required_params = set([])
  required_params.update(n.Transform.required_params)

  def __init__(self, from_file=None, save_dict=None, **kwargs):
    super(NormTransform, self).__init__(from_file, save_dict, **kwargs)

    if self.kinds is not None:
      for kind in self.kinds:
        if kind not in CRITERION_KINDS:
          raise ValueError("{} is an invalid criterion kind. Accepted kinds are {}".format(kind, CRITERION_KINDS))

  def _from_save_dict(self, save_dict):
    super(NormTransform, self)._from_save_dict(save_dict)
    for key in ('min', 'max'):
      if getattr(self, key) is not None:
        setattr(self, key, np.array(getattr(self, key), dtype=np.float64))

  def _calc_global_values(self, array):
    """Store the column minimums and maximums."""
    if np.isnan(array).any():
      raise ValueError("NormTransform " + self.name + " got NaN values.")
    self.min = np.min(array, axis=0)
    self.max = np.max(array, axis=0)

  def _finish_calc(self):
    """Check the kinds against the columns and warn about constant columns."""
    if self.kinds is None:
      self.kinds = ['benefit'] * len(self.cols)
    elif len(self.kinds) != len(self.cols):
      raise ValueError("Got {} kinds for {} columns".format(len(self.kinds), len(self.cols)))

    constant = [self.cols[i] for i in np.where(self.min == self.max)[0]]
    if constant:
      logging.warning("NormTransform %s has constant columns %s, mapping them to 0.", self.name, constant)

  def _transform(self, array):
    spread = self.max - self.min
    spread[spread == 0] = 1.0
    is_cost = np.array([k == 'cost' for k in self.kinds])
    normalized = np.where(
      is_cost[np.newaxis, :],
      (self.max[np.newaxis, :] - array) / spread[np.newaxis, :],
      (array - self.min[np.newaxis, :]) / spread[np.newaxis, :]
    )
    return np.clip(normalized, 0.0, 1.0)
