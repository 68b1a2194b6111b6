import math
from typing import Dict, List

import matplotlib.pyplot as plt
import numpy as np

from .util import colours, clean_plot


def census_barchart(censuses: List[Dict[int, int]], data_label: List[str], y_label: str = 'Structures'):
    """ Plots grouped bars of saturation counts per quotient size

    One group per vertex count, one bar per census. A census maps the number
    of vertices of a quotient to how many quotients of that size were found.

    This function uses matplotlib and sets the state for the pyplot object.
    This means this function has side-effects

    censuses (list):
        list of dicts from vertex count to count
    data_label (list):
        labels for the censuses
    y_label (String):
        label for the y-axis

    Returns:
        Figure: the matplotlib figure
    """

    assert len(censuses) == len(data_label) and len(censuses) > 0

    sizes = sorted(set().union(*(c.keys() for c in censuses)))
    data = [[c.get(n, 0) for n in sizes] for c in censuses]

    # get the positions for the bars
    x = np.arange(len(sizes))

    # width of a bar
    width = 0.8 / len(data)

    fig, ax = plt.subplots()
    clean_plot(ax, keep_bottom=True)

    plt.tick_params(bottom=True, left=False, top=False, right=False)
    plt.xticks(x, [str(n) for n in sizes], fontsize=10)

    # calculate the spacing for the bars
    if len(data) % 2 == 0:
        border = (len(data)/2)-0.5
    else:
        border = math.floor(len(data)/2)
    bar_offset = width * np.linspace(-border, border, num=len(data))

    palette = colours()
    for i, (d, lbl, offs) in enumerate(zip(data, data_label, bar_offset)):
        bars = ax.bar(x+offs, d, width, label=lbl, color=palette[(2 * i) % len(palette)])
        ax.bar_label(bars, fontsize=8)

    # dashed guides at the y ticks
    loc, _ = plt.yticks()
    for y in loc[1:-1]:
        ax.axhline(y, linestyle='--', lw=0.5, color='black', alpha=0.3)

    plt.xlabel('Vertices', fontsize=12)
    plt.ylabel(y_label, fontsize=12)
    ax.legend(loc='upper right')

    return fig
