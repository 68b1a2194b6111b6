"""This submodule offers the plots of the command line scripts

Using Matplotlib (and seaborn for the heatmaps) this submodule draws
counterexamples and saturation censuses. Matplotlib keeps a global state
object, the plot object, which these functions alter, so they all have side
effects. Each returns its figure for saving.

Functions:
    relation_heatmap(structure, source, target):
        plots every base and derived relation of a structure as a heatmap
    census_barchart(censuses, data_label, y_label):
        plots grouped bars of saturation counts per quotient size
"""

from .heatmap import relation_heatmap
from .barchart import census_barchart
