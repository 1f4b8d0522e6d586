import os
from dataclasses import dataclass
from typing import Optional

from config import Config, env_int


@dataclass(frozen=True)
class Limits:
    """Resource ceilings for one invocation: flag, then environment, then Config."""
    max_table_cells: int
    max_reps_out: int
    horizon: Optional[int]

    @classmethod
    def from_args(cls, args, environ=None, config_class=Config) -> 'Limits':
        environ = os.environ if environ is None else environ
        return cls(
            max_table_cells=_pick(getattr(args, 'max_table_cells', None),
                                  env_int('FROB_MAX_TABLE_CELLS', environ=environ),
                                  config_class.MAX_TABLE_CELLS),
            max_reps_out=_pick(getattr(args, 'max_reps_out', None),
                               env_int('FROB_MAX_REPS_OUT', environ=environ),
                               config_class.MAX_REPS_OUT),
            horizon=_pick(getattr(args, 'horizon', None),
                          env_int('FROB_HORIZON', environ=environ),
                          config_class.SEARCH_HORIZON),
        )

    def as_dict(self) -> dict:
        return {
            'max_table_cells': self.max_table_cells,
            'max_reps_out': self.max_reps_out,
            'horizon': self.horizon,
        }


def _pick(*candidates):
    for value in candidates:
        if value is not None:
            return value
    return None
