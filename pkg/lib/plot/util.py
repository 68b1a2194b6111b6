
def colours(n: int = 20):
    """ Returns the first n tableau20 colours as rgb tuples between 0 and 1

        Dark and light shades alternate, so colours()[::2] gives the dark ones

        Returns:
            List: list of (r, g, b) tuples
    """

    assert 1 <= n <= 20

    tableau20 = [(31, 119, 180), (174, 199, 232), (255, 127, 14), (255, 187, 120),
             (44, 160, 44), (152, 223, 138), (214, 39, 40), (255, 152, 150),
             (148, 103, 189), (197, 176, 213), (140, 86, 75), (196, 156, 148),
             (227, 119, 194), (247, 182, 210), (127, 127, 127), (199, 199, 199),
             (188, 189, 34), (219, 219, 141), (23, 190, 207), (158, 218, 229)]

    return [(r/255., g/255., b/255.) for r, g, b in tableau20[:n]]


def clean_plot(ax, keep_bottom: bool = False):
    """ Hides the frame around an axis, all four sides unless keep_bottom
        asks for a baseline under bars
    """

    for side in ('top', 'right', 'left'):
        ax.spines[side].set_visible(False)
    ax.spines['bottom'].set_visible(keep_bottom)
