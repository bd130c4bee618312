"""Result object shared by the theorem checks that report rather than raise."""

OK = 'ok'
VIOLATION = 'violation'
INAPPLICABLE = 'inapplicable'
INCOMPARABLE = 'incomparable'


class Verdict(object):
  """Outcome of a check over one or more inputs.

  Parameters
  ----------
  status : str
    One of 'ok', 'violation', 'inapplicable', 'incomparable'.
  message : str
    Human readable explanation. Empty for plain 'ok'.
  witness : object
    Whatever input triggered the status (a sample index, a point pair, a preimage), or None.
  details : dict
    Extra named values, e.g. counts for reports.

  """

  def __init__(self, status, message='', witness=None, details=None):
    if status not in (OK, VIOLATION, INAPPLICABLE, INCOMPARABLE):
      raise ValueError("{} is an invalid verdict status".format(status))
    self.status = status
    self.message = message
    self.witness = witness
    self.details = details if details is not None else {}

  @property
  def ok(self):
    return self.status == OK

  def __bool__(self):
    return self.ok

  __nonzero__ = __bool__

  def __repr__(self):
    return 'Verdict({!r}, {!r})'.format(self.status, self.message)

  def to_dict(self):
    r_d = {'status': self.status, 'message': self.message}
    r_d.update(self.details)
    return r_d
