import math
from typing import Optional

import numpy as np
import seaborn as sns
import matplotlib.pyplot as plt

from ..structures import Structure


# heatmaps per row of the figure
PER_ROW = 4



def _vertex_labels(n: int, source: Optional[int], target: Optional[int]):

    labels = []
    for v in range(n):
        mark = ''.join(m for m, w in (('s', source), ('t', target)) if w == v)
        labels.append('{} {}'.format(v, mark) if mark else str(v))
    return labels


def relation_heatmap(structure: Structure, source: Optional[int] = None, target: Optional[int] = None):
    """ Plots every relation of a structure as a 0/1 heatmap, one panel per
        label: a and !a for each atom, then 1 and !1

        Rows are the first and columns the second component of a pair. The
        source and target vertices are marked in the tick labels.

        This function uses the heatmap function from the seaborn library and
        sets the state of the pyplot object, so it has side effects

        structure (Structure):
            the structure to plot
        source, target (int):
            optional designated vertices

        Returns:
            Figure: the matplotlib figure
    """

    interp = structure.interpretation()
    letters = [x for x in interp if not x.is_identity()] + [x for x in interp if x.is_identity()]

    cols = min(PER_ROW, len(letters))
    rows = math.ceil(len(letters) / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(3 * cols, 3 * rows), squeeze=False)

    ticks = _vertex_labels(structure.n, source, target)

    for ax, x in zip(axes.flat, letters):
        sns.heatmap(np.asarray(interp[x]).astype(int),
            ax=ax,
            annot=structure.n <= 8,
            fmt='d',
            linewidths=0.5,
            square=True,
            cbar=False,
            vmin=0,
            vmax=1,
            cmap=plt.cm.Blues,
            xticklabels=ticks,
            yticklabels=ticks
        )
        ax.set_title(x.encode(), fontsize=12)
        ax.tick_params(axis='y', labelrotation=0)

    # hide the unused panels of the last row
    for ax in list(axes.flat)[len(letters):]:
        ax.axis('off')

    fig.tight_layout()
    return fig
