"""Finite fuzzy aura topological spaces, aura rough approximations and the FA-MCDM pipeline."""
from fzaura.spaces.lattice import Universe, FuzzySet
from fzaura.spaces.topology import FuzzyTopology, DiscreteTopology
from fzaura.spaces.aura import ScopeFunction, AuraSpace
from fzaura.rough.approximation import ApproximationPair, FuzzyRelation
from fzaura.mcdm.famcdm import CriterionSpec, DecisionProblem

__version__ = '0.1.0'
