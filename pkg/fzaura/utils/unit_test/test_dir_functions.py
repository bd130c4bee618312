import os
import unittest
import pandas as pd
import fzaura.spaces.lattice as la
import fzaura.utils.dir_functions as d
import fzaura.utils.test_helpers as th


class TestDirFunctions(th.FATest):
  def test_maybe_create_dir(self):
    out_dir = d.maybe_create_dir(self.temp_dir, 'test', 'test')
    self.assertTrue(os.path.isdir(out_dir))
    self.assertEqual(d.maybe_create_dir(self.temp_dir, 'test', 'test'), out_dir)
    self.assertEqual(d.maybe_create_dir(), './')

  def test_read_from_file(self):
    temp_json = os.path.join(self.temp_dir, 'sub', 'temp.json')
    d.save_to_file({'b': [1.0, None], 'a': 2}, temp_json)
    self.assertEqual(d.read_from_file(temp_json), {'b': [1.0, None], 'a': 2})

    temp_csv = os.path.join(self.temp_dir, 'temp.csv')
    df = pd.DataFrame({'x': [0.5, 0.25]}, index=['p', 'q'])
    d.save_to_file(df, temp_csv)
    read = d.read_from_file(temp_csv)
    self.assertEqual(list(read.index), ['p', 'q'])
    self.equals(read['x'].values, [0.5, 0.25])

    exact = pd.DataFrame({'x': [0.2945238095238096, 1.0 / 3.0, 0.1 + 0.2]}, index=['p', 'q', 'r'])
    d.save_to_file(exact, temp_csv)
    self.assertEqual(d.read_from_file(temp_csv)['x'].tolist(), exact['x'].tolist())

    temp_pickle = os.path.join(self.temp_dir, 'temp.pickle')
    mu = la.FuzzySet(la.Universe(['x', 'y']), [0.25, 1.0])
    d.save_to_file(mu, temp_pickle)
    read = d.read_from_file(temp_pickle)
    self.assertEqual(read.universe, mu.universe)
    self.equals(read.grades, mu.grades)

    with self.assertRaises(ValueError):
      d.save_to_file([], os.path.join(self.temp_dir, 'temp.npy'))
    with self.assertRaises(ValueError):
      d.read_from_file(os.path.join(self.temp_dir, 'temp.npy'))

  def test_dumps(self):
    self.assertEqual(d.dumps({'a': float('nan')}), d.dumps({'a': None}))
    self.assertEqual(d.dumps([1, 2]), d.dumps([1, 2]))


if __name__ == "__main__":
  unittest.main()
