from dataclasses import dataclass, replace
from typing import Optional

from ..config import thread_count


PROCEDURES = ('starfree', 'graphchar', 'fragment', 'full', 'semi')



@dataclass(frozen=True)
class Options:
    """Budgets and overrides of a validity query

       ...

       Attributes:
            budget (int): the vertex budget of the refutation semi-procedure
            len_cap (int): the longest word length the word by word search
                for intersection-free terms may reach
            procedure (str): forces one engine (see PROCEDURES), or None to
                route by fragment
            threads (int): the number of worker threads checking candidates
    """

    budget: int = 5
    len_cap: int = 20
    procedure: Optional[str] = None
    threads: int = 1


    def __post_init__(self):
        assert self.budget >= 1 and self.len_cap >= 1 and self.threads >= 1
        assert self.procedure is None or self.procedure in PROCEDURES


    @classmethod
    def from_env(cls, **overrides) -> 'Options':
        """Options with the worker count read from ECOR_THREADS

        Keyword overrides set to None are ignored, so parsed command line
        flags can be passed straight through.
        """

        options = cls(threads=thread_count())
        given = {k: v for k, v in overrides.items() if v is not None}

        return replace(options, **given)
