"""The fzaura command line.

Every subcommand prints its result to stdout as an aligned table (default), CSV or JSON. Domain errors exit with status 1, usage errors with status 2.
"""
import functools
import logging
import sys
import pandas as pd
import click
import fzaura
import fzaura.globs as gl
import fzaura.errors as er
import fzaura.spaces.aura as au
import fzaura.properties.openness as op
import fzaura.properties.morphisms as mo
import fzaura.properties.separation as se
import fzaura.rough.approximation as ra
import fzaura.mcdm.famcdm as fa
import fzaura.mcdm.norm_transform as nt
import fzaura.mcdm.sensitivity as sn
import fzaura.read_write.codecs as co
import fzaura.cli.formatting as fo
import fzaura.cli.reproduce as rp

LOG_FORMAT = '%(levelname)s: %(message)s'


def _configure_logging(verbose):
  logging.getLogger().setLevel(logging.DEBUG if verbose else logging.WARNING)


def reports_errors(func):
  """Turn domain errors into a click error, which exits with status 1."""
  @functools.wraps(func)
  def wrapper(*args, **kwargs):
    try:
      return func(*args, **kwargs)
    except er.FzAuraError as e:
      raise click.ClickException(str(e))
  return wrapper


def _path(**kwargs):
  return click.Path(exists=True, dir_okay=False, **kwargs)


format_option = click.option(
  '--format', 'fmt', type=click.Choice(fo.FORMATS), default='table', show_default=True, help='Output format.'
)
space_option = click.option('--space', 'space_path', required=True, type=_path(), help='Aura space JSON file.')
set_option = click.option('--set', 'set_path', required=True, type=_path(), help='Fuzzy set JSON file.')
strict_option = click.option(
  '--strict', is_flag=True, default=False, help='Require every aura to be an open set of the topology.'
)
def _parse_floats(ctx, param, value):
  if value is None:
    return None
  try:
    return [float(v) for v in value.split(',') if v.strip()]
  except ValueError:
    raise click.BadParameter("expected comma separated numbers, got '{}'".format(value))


def _parse_kinds(ctx, param, value):
  if value is None:
    return None
  kinds = [v.strip() for v in value.split(',') if v.strip()]
  bad = [k for k in kinds if k not in nt.CRITERION_KINDS]
  if bad:
    raise click.BadParameter("'{}' is not one of {}".format(bad[0], ', '.join(nt.CRITERION_KINDS)))
  return kinds


problem_options = [
  click.option('--problem', 'problem_path', required=True, type=_path(), help='Decision problem JSON, or the matrix CSV when --classes is given.'),
  click.option('--classes', 'classes_path', default=None, type=_path(), help='Class membership CSV. Empty cells are unknown.'),
  click.option(
    '--weights', default=None, callback=_parse_floats,
    help='Comma separated criteria weights summing to 1, replacing those of the problem. A CSV problem defaults to equal weights.'
  ),
  click.option(
    '--kinds', default=None, callback=_parse_kinds,
    help='Comma separated benefit or cost per criterion, replacing those of the problem. A CSV problem defaults to benefit only.'
  ),
]


def _problem_options(func):
  for option in reversed(problem_options):
    func = option(func)
  return func


def _load_space(space_path, strict):
  return co.load_space(space_path, 'strict' if strict else None)


def _echo(payload, fmt, tables=()):
  click.echo(fo.render(payload, fmt, tables))


@click.group()
@click.option('--verbose', is_flag=True, default=False, help='Log debug messages to stderr.')
@click.version_option(version=fzaura.__version__)
def cli(verbose):
  """Finite fuzzy aura spaces and aura based multi criteria classification."""
  _configure_logging(verbose)


@cli.command('check-space')
@space_option
@strict_option
@format_option
@reports_errors
def check_space(space_path, strict, fmt):
  """Validate a space file: topology axioms, the scope diagonal and, with --strict, open auras."""
  try:
    space = _load_space(space_path, strict)
  except er.TopologyError as e:
    report = e.report.to_dict() if e.report is not None else {'ok': False, 'message': str(e)}
    payload = {'ok': False, 'report': report}
    _echo(payload, fmt, [('Topology check', fo.flags_frame(report), None)])
    raise

  scope = au.classify_scope(space)
  payload = {
    'ok': True,
    'universe': list(space.universe.points),
    'mode': space.mode,
    'discrete': space.is_discrete,
    'members': None if space.is_discrete else len(space.topology.members),
    'auras_open': space.auras_are_open(),
    'scope': scope.to_dict()
  }
  flat = dict((k, v) for k, v in payload.items() if k not in ('scope', 'universe'))
  flat.update(scope.to_dict())
  _echo(payload, fmt, [('Space check', fo.flags_frame(flat), None)])


def _set_command(name, operator, doc):
  @cli.command(name, help=doc)
  @space_option
  @set_option
  @strict_option
  @format_option
  @reports_errors
  def command(space_path, set_path, strict, fmt):
    space = _load_space(space_path, strict)
    out = operator(space, co.load_set(set_path, space.universe))
    _echo(out.to_dict(), fmt, [(name, fo.set_frame(out), None)])
  return command


closure = _set_command('closure', au.aura_closure, 'Aura closure of a fuzzy set.')
interior = _set_command('interior', au.aura_interior, 'Aura interior of a fuzzy set.')


@cli.command('iterate')
@space_option
@set_option
@click.option('--steps', type=click.IntRange(min=0), default=None, help='Number of closure applications. The fixpoint when left out.')
@strict_option
@format_option
@reports_errors
def iterate(space_path, set_path, steps, strict, fmt):
  """Iterated aura closure of a fuzzy set."""
  space = _load_space(space_path, strict)
  out = au.iterated_closure(space, co.load_set(set_path, space.universe), steps)
  _echo(out.to_dict(), fmt, [('iterated closure', fo.set_frame(out), None)])


@cli.command('aura-topology')
@space_option
@strict_option
@format_option
@reports_errors
def aura_topology(space_path, strict, fmt):
  """The topology members that are fixpoints of the aura interior."""
  space = _load_space(space_path, strict)
  top = au.aura_topology(space)
  frame = pd.DataFrame(top.matrix, columns=list(space.universe.points))
  _echo(top.to_dict(), fmt, [('aura topology', frame, None)])


@cli.command('classify-openness')
@space_option
@set_option
@strict_option
@format_option
@reports_errors
def classify_openness(space_path, set_path, strict, fmt):
  """Generalized open classes of a fuzzy set, or of each set in a JSON list."""
  space = _load_space(space_path, strict)
  sets = co.load_sets(set_path, space.universe)
  profiles = [op.openness_profile(space, mu) for mu in sets]
  frame = pd.DataFrame([p.to_dict() for p in profiles], columns=list(op.FLAGS))
  if len(profiles) == 1:
    payload = profiles[0].to_dict()
  else:
    payload = [dict(p.to_dict(), grades=mu.grades.tolist()) for p, mu in zip(profiles, sets)]
  _echo(payload, fmt, [('openness', frame, None)])


@cli.command('continuity')
@click.option('--space', 'space_path', required=True, type=_path(), help='Source aura space JSON file.')
@click.option('--target', 'target_path', required=True, type=_path(), help='Target aura space JSON file.')
@click.option('--map', 'map_path', required=True, type=_path(), help='Point map JSON file.')
@strict_option
@format_option
@reports_errors
def continuity(space_path, target_path, map_path, strict, fmt):
  """Continuity notions of a point map between two aura spaces."""
  src = _load_space(space_path, strict)
  dst = _load_space(target_path, strict)
  f = co.load_map(map_path, src.universe, dst.universe)
  profile = mo.continuity_profile(f, src, dst)
  payload = profile.to_dict()
  payload['decomposition'] = mo.decomposition_check(f, src, dst).to_dict()
  flags = dict((k, payload[k]) for k in mo.CONTINUITY_FLAGS)
  _echo(payload, fmt, [('continuity', fo.flags_frame(flags), None)])


@cli.command('separation')
@space_option
@strict_option
@click.option('--cross-check', is_flag=True, default=False, help='Also decide T1 by searching for witnesses.')
@format_option
@reports_errors
def separation(space_path, strict, cross_check, fmt):
  """Separation axioms T0, T1, T2 and regularity, with witnesses."""
  space = _load_space(space_path, strict)
  profile = se.separation_profile(space, cross_check)
  payload = profile.to_dict()
  flags = dict((k, payload[k]) for k in se.SEPARATION_FLAGS)
  if profile.t1_search is not None:
    flags['t1_search'] = profile.t1_search
  _echo(payload, fmt, [('separation', fo.flags_frame(flags), None)])


@cli.command('rough')
@space_option
@set_option
@strict_option
@format_option
@reports_errors
def rough(space_path, set_path, strict, fmt):
  """Aura lower and upper approximations of a fuzzy set, with accuracy and roughness."""
  space = _load_space(space_path, strict)
  pair = ra.approximate(space, co.load_set(set_path, space.universe))
  rho, sigma = ra.pair_accuracy(pair, space.eps)
  payload = pair.to_dict()
  payload['rho'] = rho
  payload['sigma'] = sigma
  frame = pd.DataFrame(
    {'lower': pair.lower.grades, 'upper': pair.upper.grades, 'boundary': pair.boundary.grades},
    index=list(space.universe.points), columns=['lower', 'upper', 'boundary']
  )
  _echo(payload, fmt, [('approximations', frame, None), ('accuracy', fo.flags_frame({'rho': rho, 'sigma': sigma}), None)])


def _load_problem(problem_path, classes_path, weights, kinds):
  return co.load_problem(problem_path, classes_path, weights, kinds)


@cli.command('mcdm-run')
@_problem_options
@click.option('--alpha', type=float, default=gl.DEFAULT_ALPHA, show_default=True, help='Caution parameter in [0, 1].')
@click.option(
  '--normaliser', 'normaliser_path', default=None, type=_path(),
  help='Normalise with this saved NormTransform instead of fitting one on the problem.'
)
@click.option(
  '--save-normaliser', 'save_normaliser_path', default=None, type=click.Path(dir_okay=False, writable=True),
  help='Write the normaliser used to a .json or .pickle file.'
)
@format_option
@reports_errors
def mcdm_run(problem_path, classes_path, weights, kinds, alpha, normaliser_path, save_normaliser_path, fmt):
  """Classify the alternatives of a decision problem."""
  problem = _load_problem(problem_path, classes_path, weights, kinds)
  if normaliser_path is not None:
    normaliser = co.load_normaliser(normaliser_path)
  else:
    normaliser = fa.fit_normaliser(problem)
  result = fa.run(problem, alpha, fa.normalize(problem, normaliser))
  if save_normaliser_path is not None:
    co.save_normaliser(normaliser, save_normaliser_path)
  payload = result.to_dict()
  summary = {'alpha': alpha, 'global_accuracy': result.global_accuracy}
  labels = fa.known_labels(problem)
  if labels:
    summary['reference_accuracy'] = fa.reference_accuracy(result, labels)
    payload['reference_accuracy'] = summary['reference_accuracy']

  scores = result.scores.join(result.classification[['class', 'tie']])
  tables = [
    ('Fuzzy aura similarity matrix', result.aura_frame(), gl.MATRIX_DECIMALS),
    ('Upper approximation', result.upper_frame(), gl.MATRIX_DECIMALS),
    ('Lower approximation', result.lower_frame(), gl.MATRIX_DECIMALS),
    ('Classification scores', scores, gl.SCORE_DECIMALS),
    ('Ranking', result.ranking, None),
    ('Summary', fo.flags_frame(summary), gl.SCORE_DECIMALS),
  ]
  _echo(payload, fmt, tables)


@cli.command('mcdm-sensitivity')
@_problem_options
@click.option('--scenarios', 'scenarios_path', default=None, type=_path(), help='JSON object of scenario name to weight vector.')
@click.option('--alphas', default=None, callback=_parse_floats, help='Comma separated caution parameters to sweep.')
@click.option('--alpha', type=float, default=gl.DEFAULT_ALPHA, show_default=True, help='Caution parameter of the weight scenarios.')
@click.option('--alternative', default=None, help='Also print the scores of this alternative per scenario.')
@click.option('--num-threads', type=click.IntRange(min=1), default=1, show_default=True, help='Scenario workers.')
@format_option
@reports_errors
def mcdm_sensitivity(problem_path, classes_path, weights, kinds, scenarios_path, alphas, alpha, alternative, num_threads, fmt):
  """Classification stability under several weight vectors (--scenarios) or caution parameters (--alphas)."""
  if (scenarios_path is None) == (alphas is None):
    raise click.UsageError("Give exactly one of --scenarios and --alphas.")
  problem = _load_problem(problem_path, classes_path, weights, kinds)
  if scenarios_path is not None:
    scenarios = co.read_json(scenarios_path)
    if isinstance(scenarios, dict) and 'scenarios' in scenarios:
      scenarios = scenarios['scenarios']
    report = sn.weight_sensitivity(problem, scenarios, alpha, num_threads)
  else:
    report = sn.alpha_sweep(problem, alphas, num_threads)

  tables = [('Classification per scenario', report.table, None)]
  if alternative is not None:
    if alternative not in problem.alternatives:
      raise er.UniverseError("Unknown alternative '{}'".format(alternative))
    tables.append(('Scores of {}'.format(alternative), report.alternative_scores(alternative), gl.SCORE_DECIMALS))
  tables.append(('Changed', pd.DataFrame({'changed': [a in report.changed for a in report.table.index]}, index=report.table.index), None))
  _echo(report.to_dict(), fmt, tables)


@cli.command('reproduce-paper')
@click.option(
  '--data-dir', default=None, type=click.Path(exists=True, file_okay=False),
  help='Fixture directory. Defaults to the bundled paper-data directory.'
)
@click.option('--tolerance', type=float, default=gl.DEFAULT_TOLERANCE, show_default=True, help='Allowed deviation of two decimal tables.')
@click.option('--table', 'tables', multiple=True, type=click.Choice(list(rp.TABLES)), help='Only check these tables.')
@click.option('--num-threads', type=click.IntRange(min=1), default=1, show_default=True, help='Scenario workers.')
@format_option
@reports_errors
def reproduce_paper(data_dir, tolerance, tables, num_threads, fmt):
  """Recompute the medical diagnosis benchmark and compare it with the stored tables."""
  report = rp.reproduce(data_dir, tolerance, list(tables) or None, num_threads)
  _echo(report.to_dict(), fmt, [('Reproduction', report.frame(), None)])
  if not report.passed:
    for failure in report.failures():
      click.echo(failure, err=True)
    raise er.FzAuraError("{} of {} tables failed".format(sum(not c.passed for c in report.checks), len(report.checks)))


def main():
  logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr)
  cli(prog_name='fzaura')


if __name__ == '__main__':
  main()
