"""Exceptions raised by the library

Every error the library raises on purpose derives from EcorError, so callers
(the command line scripts in particular) can catch one type and report it.

Classes:
    EcorError
        base class, also raised on internal consistency failures
    TermSyntaxError
        a term does not follow the grammar; carries the offending position
    UnknownAtomError
        an atom is not part of an explicitly given alphabet
    FragmentError
        a procedure was called on a term outside the fragment it handles
    NotSaturatedError
        a graph or saturable path does not meet a saturation precondition
    StructureError
        a structure or its JSON payload is malformed
    GrammarError
        a grammar file cannot be read; carries the line number
"""


class EcorError(Exception):
    pass


class TermSyntaxError(EcorError):

    def __init__(self, message: str, position: int):
        super().__init__('{} at position {}'.format(message, position))
        self.position = position


class UnknownAtomError(EcorError):

    def __init__(self, atom: str):
        super().__init__('unknown atom {!r}'.format(atom))
        self.atom = atom


class FragmentError(EcorError):
    pass


class NotSaturatedError(EcorError):
    pass


class StructureError(EcorError):
    pass


class GrammarError(EcorError):

    def __init__(self, message: str, line: int):
        super().__init__('line {}: {}'.format(line, message))
        self.line = line
