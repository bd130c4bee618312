import os
import simplejson as json
import pandas as pd
import dill as pickle


def maybe_create_dir(*args):
  """Create directories and all intermediary directories if they don't exist.

  Parameters
  ----------
  *args:
      The path of the directories to maybe create.

  Returns
  -------
  str
    The new directory path
  """
  if not args:
    return './'

  full_dir = os.path.join(*args)
  if not os.path.isdir(full_dir):
      os.makedirs(full_dir)
  return full_dir


def dumps(obj):
  """Serialize to JSON text with a stable layout. Key order is the insertion order of obj."""
  return json.dumps(obj, indent=2, ignore_nan=True)


def save_to_file(obj, file_name):
  """Wrapper to automatically find the proper way to save a file

  Parameters
  ----------
  obj :
    Object to save to file. A dict/list for '.json', a pandas DataFrame for '.csv', anything dill can serialize for '.pickle'.
  file_name : str
    File name to save the file to.

  """
  # Create the directory path
  dir = os.path.dirname(file_name)
  if dir:
    maybe_create_dir(dir)

  # Find file type and then save using appropriate function.
  file_type = file_name.split('.')[-1]
  if file_type == 'json':
    with open(file_name, 'w') as obj_file:
      obj_file.write(dumps(obj))
  elif file_type == 'csv':
    obj.to_csv(file_name)
  elif file_type == 'pickle':
    with open(file_name, 'wb') as obj_file:
      pickle.dump(obj, obj_file)
  else:
    raise ValueError("Unsupported file type '{}' for {}".format(file_type, file_name))


def read_from_file(file_name, index_col=0):
  """Wrapper to automatically find the proper way to read a file

  Parameters
  ----------
  file_name : str
    File name of file to read
  index_col : int or None
    For csv files, the column holding the row labels.

  Returns
  -------
  obj :
    Object that was read from file. dict/list for '.json', pandas DataFrame for '.csv', the unpickled object for '.pickle'.
  """

  # Find file type from the extension and then read using appropriate
  # function.
  file_type = file_name.split('.')[-1]
  if file_type == 'json':
    with open(file_name, 'r') as obj_file:
      obj = json.load(obj_file)
  elif file_type == 'csv':
    obj = pd.read_csv(file_name, index_col=index_col, float_precision='round_trip')
  elif file_type == 'pickle':
    with open(file_name, 'rb') as obj_file:
      obj = pickle.load(obj_file)
  else:
    raise ValueError("Unsupported file type '{}' for {}".format(file_type, file_name))

  return obj
