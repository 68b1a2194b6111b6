from dataclasses import dataclass, fields

from ..errors import EcorError
from .ast import (
    Term, Var, NegVar, ConvVar, ConvNegVar, Id, NegId, Bot, Top,
    Comp, Union, Inter, Star, Conv, Compl, children, subterms,
)



def converse_normal_form(t: Term) -> Term:
    """Pushes every converse down to the atoms and removes complemented
       constants

    The rewriting follows the usual laws: the converse of a composition is the
    reversed composition of the converses, converse distributes over union,
    intersection and star, is an involution, and fixes the identity family,
    bottom and top. Afterwards -T becomes 0 and -0 becomes T. The output grows
    at most linearly.

    Parameters:
        t (Term): a general term

    Returns:
        Term: an equivalent restricted term
    """
    return _push(t, False)


def _push(t: Term, flip: bool) -> Term:

    if isinstance(t, Var):
        return ConvVar(t.name) if flip else t
    if isinstance(t, NegVar):
        return ConvNegVar(t.name) if flip else t
    if isinstance(t, ConvVar):
        return Var(t.name) if flip else t
    if isinstance(t, ConvNegVar):
        return NegVar(t.name) if flip else t
    if isinstance(t, (Id, NegId, Bot, Top)):
        return t
    if isinstance(t, Compl):
        if isinstance(t.body, Bot):
            return Top()
        if isinstance(t.body, Top):
            return Bot()
        raise EcorError('complement of a compound term: {!r}'.format(t))
    if isinstance(t, Conv):
        return _push(t.body, not flip)
    if isinstance(t, Comp):
        if flip:
            return Comp(_push(t.right, True), _push(t.left, True))
        return Comp(_push(t.left, False), _push(t.right, False))
    if isinstance(t, Union):
        return Union(_push(t.left, flip), _push(t.right, flip))
    if isinstance(t, Inter):
        return Inter(_push(t.left, flip), _push(t.right, flip))
    if isinstance(t, Star):
        return Star(_push(t.body, flip))

    raise TypeError('not a term: {!r}'.format(t))



# symbol count of each leaf
_LEAF_SIZE = {Var: 1, NegVar: 2, ConvVar: 2, ConvNegVar: 3, Id: 1, NegId: 2, Bot: 1, Top: 1}


def size(t: Term) -> int:
    """Number of symbol occurrences in a term

    A complemented or conversed atom counts its operator symbols as well, so
    a- is 2 and a-^ is 3.
    """

    leaf = _LEAF_SIZE.get(type(t))
    if leaf is not None:
        return leaf

    return 1 + sum(size(c) for c in children(t))


def equation_size(lhs: Term, rhs: Term) -> int:
    return size(lhs) + size(rhs)



@dataclass(frozen=True)
class FragmentDescriptor:
    """Which operators occur in a term

    has_conv covers both conversed atoms and general converse, so it is False
    exactly for converse-free terms.
    """

    has_star:   bool = False
    has_inter:  bool = False
    has_negvar: bool = False
    has_negid:  bool = False
    has_conv:   bool = False
    has_top:    bool = False


    @property
    def is_star_free(self) -> bool:
        return not self.has_star


    @property
    def is_intersection_free(self) -> bool:
        return not self.has_inter


    def merge(self, other: 'FragmentDescriptor') -> 'FragmentDescriptor':
        """The descriptor of an equation whose sides are described by self and
           other
        """
        return FragmentDescriptor(**{
            f.name: getattr(self, f.name) or getattr(other, f.name) for f in fields(self)
        })


    def flags(self) -> tuple:
        return tuple(f.name for f in fields(self) if getattr(self, f.name))



def fragment_of(t: Term) -> FragmentDescriptor:

    kinds = {type(n) for n in subterms(t)}

    return FragmentDescriptor(
        has_star=Star in kinds,
        has_inter=Inter in kinds,
        has_negvar=bool(kinds & {NegVar, ConvNegVar}),
        has_negid=NegId in kinds,
        has_conv=bool(kinds & {ConvVar, ConvNegVar, Conv}),
        has_top=Top in kinds,
    )



_BAR = {
    Id: NegId, NegId: Id, Bot: Top, Top: Bot,
}


def bar_dual(x: Term) -> Term:
    """The complement dual of a signed atom: a and a- swap, as do I and I-,
       and bottom and top

    Raises:
        EcorError: for any other node
    """

    if isinstance(x, Var):
        return NegVar(x.name)
    if isinstance(x, NegVar):
        return Var(x.name)
    if isinstance(x, ConvVar):
        return ConvNegVar(x.name)
    if isinstance(x, ConvNegVar):
        return ConvVar(x.name)
    if type(x) in _BAR:
        return _BAR[type(x)]()

    raise EcorError('bar_dual is defined on signed atoms only, got {!r}'.format(x))



def replace_top(t: Term, atom: str) -> Term:
    """Replaces every top by a|-a for the given atom

    Raises:
        EcorError: when no atom is given (the alphabet is empty)
    """

    if not atom:
        raise EcorError('replacing top needs a nonempty alphabet')

    def walk(node: Term) -> Term:
        if isinstance(node, Top):
            return Union(Var(atom), NegVar(atom))
        if isinstance(node, (Comp, Union, Inter)):
            return type(node)(walk(node.left), walk(node.right))
        if isinstance(node, (Star, Conv)):
            return type(node)(walk(node.body))
        return node

    return walk(t)
