"""Counts the saturation quotients of the graph languages of terms

For every term the script enumerates the graphs of the term up to a vertex
budget, every quotient of every saturation of them, and counts those quotients
per number of vertices, one per isomorphism class. The counts are written to a
JSON file and optionally drawn as a grouped barchart, one group per vertex
count and one bar per term.

For the term T over the alphabet a the count is 2 quotients with one vertex
and 16 with two.

...

Arguments:
    Terms (str):
        the terms to count for
    sigma (str, optional):
        comma separated alphabet, default: the atoms of all terms (or a)
    budget (int, optional):
        vertex budget for the graphs, default: 1 + the size of each term
    output (str):
        path to the output file. Must end in .json. Default: census.json
    barchart-plot (str, optional):
        if set a barchart of the counts is saved to this directory
    verbose (flag, repeatable):
        -v logs progress, -vv logs search details
"""


import argparse
import json
import logging
import os
import sys

import lib.graphs as graphs
import lib.terms as terms


parser = argparse.ArgumentParser()
parser.add_argument('Terms', nargs='+',
                     help='The terms whose graph languages are counted')
parser.add_argument('--sigma', '-s',
                     help='Comma separated alphabet')
parser.add_argument('--budget', '-b', type=int,
                     help='Vertex budget for the graphs of a term')
parser.add_argument('--output', '-o', default='census.json',
                     help='The output JSON file to store the counts')
parser.add_argument('--barchart-plot', '-bcp',
                     help='Where to save the barchart plot picture if set')
parser.add_argument('--verbose', '-v', action='count', default=0,
                     help='-v logs progress, -vv logs search details')
arguments = parser.parse_args()

logging.basicConfig(
    level=[logging.WARNING, logging.INFO, logging.DEBUG][min(arguments.verbose, 2)],
    stream=sys.stderr,
)

out_file = os.path.abspath(arguments.output)
assert os.path.splitext(out_file)[1] == '.json'

if arguments.barchart_plot:
    assert os.path.exists(arguments.barchart_plot)

# parse everything before the alphabet is fixed
parsed = [terms.converse_normal_form(terms.parse(t, 'infer')) for t in arguments.Terms]

if arguments.sigma:
    sigma = terms.check_alphabet(a.strip() for a in arguments.sigma.split(','))
else:
    sigma = tuple(sorted(set().union(*(terms.atoms(t) for t in parsed)))) or ('a',)

# count the quotients per term
counts = {}
for text, t in zip(arguments.Terms, parsed):
    budget = arguments.budget or 1 + terms.size(t)
    counts[text] = graphs.census(t, budget, sigma)

    total = sum(counts[text].values())
    print('{}: {} quotients {}'.format(text, total, counts[text]))

# json keys have to be strings
with open(out_file, 'w') as f:
    json.dump({
        'sigma': list(sigma),
        'census': {text: {str(n): c for n, c in census.items()} for text, census in counts.items()},
    }, f, indent=2)

print('Saved output to {}'.format(out_file))

if arguments.barchart_plot:
    import matplotlib.pyplot as plt
    import lib.plot as plot

    fig = plot.census_barchart(list(counts.values()), list(counts.keys()), 'Quotients')
    plot_file = os.path.join(os.path.abspath(arguments.barchart_plot), 'census_barchart.png')
    plt.savefig(plot_file)
    print('Saved output to {}'.format(plot_file))
