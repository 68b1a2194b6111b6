from typing import Dict, List, Sequence, Set, Tuple

from .grammar import Cfg


# fresh nonterminals of the binarized grammar are tuples, never strings
Symbol = object



def _binarize(c: Cfg) -> Tuple[List[Tuple[Symbol, Tuple[Symbol, ...]]], Set[Symbol]]:
    """Rules with bodies of at most two symbols, terminals only in bodies of
       length one, and the set of terminals
    """

    terminals = set(c.terminals)
    rules = []

    def lift(symbol):
        if symbol not in terminals:
            return symbol
        fresh = ('T', symbol)
        rules.append((fresh, (symbol,)))
        return fresh

    for k, (head, body) in enumerate(c.rules):
        if len(body) <= 1:
            rules.append((head, body))
            continue

        body = [lift(s) for s in body]
        left = head
        for m in range(len(body) - 2):
            rest = ('R', k, m)
            rules.append((left, (body[m], rest)))
            left = rest
        rules.append((left, (body[-2], body[-1])))

    return list(dict.fromkeys(rules)), terminals


def cyk_derives(c: Cfg, x: str, word: Sequence[str]) -> bool:
    """Whether x derives the word, by a CYK table over the binarized grammar

    Empty and unit rules make a cell depend on itself, so every cell is
    filled to a fixpoint before longer spans are looked at.
    """

    rules, terminals = _binarize(c)
    n = len(word)

    table: Dict[Tuple[int, int], Set[Symbol]] = {}

    for length in range(n + 1):
        for i in range(n - length + 1):
            j = i + length
            cell: Set[Symbol] = set()
            table[i, j] = cell

            changed = True
            while changed:
                changed = False
                for head, body in rules:
                    if head in cell:
                        continue

                    if len(body) == 0:
                        hit = length == 0
                    elif len(body) == 1 and body[0] in terminals:
                        hit = length == 1 and word[i] == body[0]
                    elif len(body) == 1:
                        hit = body[0] in cell
                    else:
                        hit = any(body[0] in table[i, k] and body[1] in table[k, j] for k in range(i, j + 1))

                    if hit:
                        cell.add(head)
                        changed = True

    return x in table[0, n]
