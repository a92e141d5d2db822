"""SVG plot test module."""


import math

from mobicell import montecarlo, svgplot


def sample_table():
    table = montecarlo.SweepTable()
    for series, scale in (('kappa=0', 1.0), ('kappa=1', 0.8)):
        for value in (-10.0, 0.0, 10.0):
            analytic = scale / (1 + 10 ** (value / 10))
            table.add(series=series, axis='theta', value=value, target='p_bh',
                      analytic=analytic, simulated=analytic + 0.01, ci95=0.02)
    return table


def test_element_markup():
    leaf = svgplot.Element('circle', cx=1.0, cy=2.5, r=3, stroke_width=1.5)
    assert leaf.svg() == '<circle cx="1" cy="2.5" r="3" stroke-width="1.5" />'
    text = svgplot.Element('text', text='a<b', x=0)
    assert text.svg() == '<text x="0">a&lt;b</text>'
    group = svgplot.Element('g', [leaf])
    assert group.svg().startswith('<g>\n<circle')


def test_sweep_plot_contents():
    plot = svgplot.sweep_plot(sample_table(), 'p_bh')
    assert len(plot.series) == 2
    assert plot.xlabel == 'theta'
    svg = plot.svg()
    assert svg.startswith('<svg') and svg.endswith('</svg>\n')
    assert svg.count('<polyline') == 2
    assert svg.count('<circle') == 6
    assert 'kappa=1' in svg


def test_missing_points_are_skipped():
    plot = svgplot.LinePlot()
    plot.add_series('a', [0, 1, 2], analytic=[1.0, math.nan, 0.5],
                    simulated=[math.nan, 0.7, 0.4], ci95=[math.nan, 0.0, 0.1])
    svg = plot.svg()
    assert svg.count('<circle') == 2
    assert 'nan' not in svg


def test_plot_is_deterministic(tmp_path):
    table = sample_table()
    first = tmp_path / 'a.svg'
    second = tmp_path / 'b.svg'
    svgplot.sweep_plot(table, 'p_bh').save(first)
    svgplot.sweep_plot(table, 'p_bh').save(second)
    assert first.read_bytes() == second.read_bytes()
