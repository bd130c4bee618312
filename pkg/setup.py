from setuptools import setup, find_packages
import os

this_directory = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(this_directory, 'README.md')) as f:
  long_description = f.read()


setup(
  name='fzaura',
  description='Finite fuzzy aura topological spaces, aura rough approximations and aura based multi criteria classification',
  long_description=long_description,
  long_description_content_type='text/markdown',
  version='0.1.0',
  packages=find_packages(exclude=['unit_test', 'unitTest', '*.unit_test',
                                  'unit_test.*', '*.unit_test.*']),
  install_requires=[
    'numpy>=1.15',
    'pandas>=0.23',
    'simplejson~=3.16',
    'dill~=0.3',
    'pathos~=0.2',
    'click>=7.0'
  ],
  package_data={
    'fzaura': ['paper-data/*.json', 'paper-data/*.csv', 'paper-data/*.md', 'paper-data/expected/*']
  },
  extras_require={
    'test': ['hypothesis>=4.0']
  },
  entry_points={
    'console_scripts': [
      'fzaura=fzaura.cli.commands:main'
    ]
  }
)
