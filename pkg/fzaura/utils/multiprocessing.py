import logging
import pathos.multiprocessing as mp
import pathos.pools as pp


def _make_pool(num_workers, use_threading):
  if use_threading:
    return pp.ThreadPool(num_workers)
  return mp.ProcessingPool(num_workers)


def multi_map(func, iterable, num_threads=1, use_threading=False):
  """Map func over iterable, optionally spread over a pathos process or thread pool.

  Parameters
  ----------
  func : callable
    Function of one argument. Must be serializable by dill when using processes.
  iterable : iterable
    The arguments.
  num_threads : int
    Pool size. 1 runs everything in the calling process.
  use_threading : bool
    Use a thread pool instead of a process pool.

  Returns
  -------
  list
    The results, in the order of iterable.

  """
  if num_threads < 1:
    raise ValueError("num_threads must be at least 1. Got {}".format(num_threads))

  if num_threads == 1:
    return [func(element) for element in iterable]

  elements = list(iterable)
  logging.debug("Mapping over %s elements with %s workers", len(elements), num_threads)
  pool = _make_pool(num_threads, use_threading)
  try:
    out_list = pool.map(func, elements)
  finally:
    # pathos caches pools by size. Clear this one so the next map starts fresh workers.
    pool.close()
    pool.join()
    pool.clear()
  return out_list
