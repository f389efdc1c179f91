import csv
from typing import Dict, Tuple

import pandas as pd

from errors import PriorsFileError

PRIORS_COLUMNS = ['kappa', 'v', 'lambda', 'bound', 'source']

Prior = Tuple[int, str]

def read_csv(filepath, delimiter=None):
	if delimiter is None:
		sniffer = csv.Sniffer()
		with open(filepath, 'r', encoding='utf-8-sig') as f:
			try:
				dialect = sniffer.sniff(f.read(1024), delimiters=',;\t|')
			except csv.Error as e:
				raise PriorsFileError(f'cannot detect the delimiter of {filepath}: {e}') from e
			delimiter = dialect.delimiter
	return pd.read_csv(filepath, sep=delimiter)

def read_priors(filepath) -> Dict[Tuple[int, int, int], Prior]:
	"""
	Given a csv with columns kappa,v,lambda,bound,source, return a dict mapping
	(kappa, v, lambda) to (bound, source). When a cell is listed twice the
	larger bound wins.
	"""

	try:
		df = read_csv(filepath)
	except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
		raise PriorsFileError(f'cannot read priors file {filepath}: {e}') from e

	df.columns = [col.strip().lower() for col in df.columns]
	missing = [col for col in PRIORS_COLUMNS if col not in df.columns]
	if missing:
		raise PriorsFileError(f'priors file {filepath} is missing columns: {", ".join(missing)}')

	numeric = df[['kappa', 'v', 'lambda', 'bound']].apply(pd.to_numeric, errors='coerce')
	bad_rows = numeric.isna().any(axis=1) | (numeric != numeric.round()).any(axis=1)
	if bad_rows.any():
		first = int(bad_rows.idxmax()) + 2 # header is line 1
		raise PriorsFileError(f'priors file {filepath} has a non-integer entry on line {first}')

	priors: Dict[Tuple[int, int, int], Prior] = {}
	for (kappa, v, lam, bound), source in zip(numeric.astype(int).itertuples(index=False),
	                                          df['source'].astype(str).str.strip()):
		key = (int(kappa), int(v), int(lam))
		if key not in priors or bound > priors[key][0]:
			priors[key] = (int(bound), source)
	return priors
