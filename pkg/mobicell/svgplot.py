"""Self-contained SVG line plots of analytic curves and simulated points."""


import html
import math


ns_svg = 'http://www.w3.org/2000/svg'

PALETTE = ('#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e',
           '#8c564b', '#e377c2', '#17becf')


def rounder(x, prec=4):
    """Shorten coordinates, writing integral floats without decimals.

    >>> rounder(3.0), rounder(2.123456789), rounder('a')
    (3, 2.1235, 'a')

    """
    if isinstance(x, float):
        xr = round(x, ndigits=prec)
        return int(xr) if xr % 1 == 0 else xr
    return x


def props_repr(d):
    return ' '.join(f'{k.replace("_", "-")}="{rounder(v)}"'
                    for k, v in d.items())


class Element:
    """An SVG tag with attributes and optional children or text."""

    def __init__(self, tag, children=(), text=None, **attr):
        self.tag = tag
        self.children = list(children)
        self.text = text
        self.attr = attr

    def svg(self):
        props = props_repr(self.attr)
        pre = ' ' if props else ''
        if self.text is not None:
            return f'<{self.tag}{pre}{props}>{html.escape(self.text)}</{self.tag}>'
        if not self.children:
            return f'<{self.tag}{pre}{props} />'
        inside = '\n'.join(c.svg() for c in self.children)
        return f'<{self.tag}{pre}{props}>\n{inside}\n</{self.tag}>'


def _finite(values):
    return [v for v in values if isinstance(v, (int, float)) and math.isfinite(v)]


def _ticks(lo, hi, n=5):
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


class LinePlot:
    """Analytic lines with simulated markers and 95% confidence whiskers.

    >>> plot = LinePlot(xlabel='θ (dB)')
    >>> plot.add_series('κ=1', [0, 1], analytic=[1.0, 0.5])
    >>> plot.svg().startswith('<svg')
    True

    """

    def __init__(self, title='', xlabel='', ylabel='', size=(640, 420)):
        self.title = title
        self.xlabel = xlabel
        self.ylabel = ylabel
        self.size = size
        self.series = []

    def add_series(self, label, x, analytic=None, simulated=None, ci95=None):
        n = len(x)
        nan = [math.nan] * n
        self.series.append(dict(
            label=label, x=list(x),
            analytic=nan if analytic is None else list(analytic),
            simulated=nan if simulated is None else list(simulated),
            ci95=[0.0] * n if ci95 is None else list(ci95),
        ))

    def limits(self):
        xs, ys = [], []
        for s in self.series:
            xs += _finite(s['x'])
            ys += _finite(s['analytic'])
            for y, c in zip(s['simulated'], s['ci95']):
                c = c if isinstance(c, (int, float)) and math.isfinite(c) else 0
                ys += _finite([y - c, y + c] if _finite([y]) else [])
        xlim = (min(xs, default=0.0), max(xs, default=1.0))
        ylim = (min(ys, default=0.0), max(ys, default=1.0))
        if xlim[0] == xlim[1]:
            xlim = (xlim[0] - 0.5, xlim[1] + 0.5)
        if ylim[0] == ylim[1]:
            ylim = (ylim[0] - 0.5, ylim[1] + 0.5)
        return xlim, ylim

    def _frame(self, xlim, ylim):
        w, h = self.size
        left, right, top, bottom = 70, w - 150, 40, h - 55

        def to_px(x, y):
            px = left + (x - xlim[0]) / (xlim[1] - xlim[0]) * (right - left)
            py = bottom - (y - ylim[0]) / (ylim[1] - ylim[0]) * (bottom - top)
            return float(px), float(py)

        return (left, right, top, bottom), to_px

    def _axes(self, box, to_px, xlim, ylim):
        left, right, top, bottom = box
        items = [Element('rect', x=left, y=top, width=right - left,
                         height=bottom - top, fill='none', stroke='#333')]
        for xv in _ticks(*xlim):
            px, _ = to_px(xv, ylim[0])
            items.append(Element('line', x1=px, y1=bottom, x2=px, y2=bottom + 5,
                                 stroke='#333'))
            items.append(Element('text', text=f'{xv:.3g}', x=px, y=bottom + 18,
                                 text_anchor='middle', font_size=11))
        for yv in _ticks(*ylim):
            _, py = to_px(xlim[0], yv)
            items.append(Element('line', x1=left - 5, y1=py, x2=left, y2=py,
                                 stroke='#333'))
            items.append(Element('text', text=f'{yv:.3g}', x=left - 8, y=py + 4,
                                 text_anchor='end', font_size=11))
        items.append(Element('text', text=self.xlabel, x=(left + right) / 2,
                             y=bottom + 40, text_anchor='middle', font_size=13))
        items.append(Element('text', text=self.ylabel, x=18, y=(top + bottom) / 2,
                             text_anchor='middle', font_size=13,
                             transform=f'rotate(-90 18 {(top + bottom) / 2:g})'))
        if self.title:
            items.append(Element('text', text=self.title, x=(left + right) / 2,
                                 y=top - 15, text_anchor='middle', font_size=14))
        return items

    def _series(self, index, s, to_px, legend_at):
        color = PALETTE[index % len(PALETTE)]
        items = []
        line = [to_px(x, y) for x, y in zip(s['x'], s['analytic'])
                if _finite([x, y]) == [x, y]]
        if line:
            points = ' '.join(f'{rounder(px)},{rounder(py)}' for px, py in line)
            items.append(Element('polyline', points=points, fill='none',
                                 stroke=color, stroke_width=1.5))
        for x, y, c in zip(s['x'], s['simulated'], s['ci95']):
            if _finite([x, y]) != [x, y]:
                continue
            px, py = to_px(x, y)
            if _finite([c]) and c > 0:
                _, lo = to_px(x, y - c)
                _, hi = to_px(x, y + c)
                items.append(Element('line', x1=px, y1=lo, x2=px, y2=hi,
                                     stroke=color))
            items.append(Element('circle', cx=px, cy=py, r=3, fill='none',
                                 stroke=color))
        lx, ly = legend_at
        items.append(Element('line', x1=lx, y1=ly, x2=lx + 20, y2=ly,
                             stroke=color, stroke_width=1.5))
        items.append(Element('text', text=str(s['label']), x=lx + 26, y=ly + 4,
                             font_size=11))
        return Element('g', items)

    def element(self):
        xlim, ylim = self.limits()
        box, to_px = self._frame(xlim, ylim)
        children = self._axes(box, to_px, xlim, ylim)
        for i, s in enumerate(self.series):
            legend_at = (float(box[1] + 12), float(box[2] + 10 + 18 * i))
            children.append(self._series(i, s, to_px, legend_at))
        w, h = self.size
        return Element('svg', children, width=w, height=h, xmlns=ns_svg,
                       font_family='sans-serif')

    def svg(self):
        return self.element().svg() + '\n'

    def save(self, path):
        with open(path, 'w', encoding='utf-8') as fid:
            fid.write(self.svg())


def sweep_plot(table, target, xlabel=None, ylabel=None):
    """Plot of one target of a `SweepTable`, one curve per series value."""
    rows = [row for row in table.rows if row['target'] == target]
    axis = rows[0]['axis'] if rows else ''
    plot = LinePlot(title=target, xlabel=xlabel or axis, ylabel=ylabel or target)
    labels = list(dict.fromkeys(row['series'] for row in rows))
    for label in labels:
        mine = [row for row in rows if row['series'] == label]
        plot.add_series(label or target,
                        [row['value'] for row in mine],
                        analytic=[_as_float(row['analytic']) for row in mine],
                        simulated=[_as_float(row['simulated']) for row in mine],
                        ci95=[_as_float(row['ci95']) for row in mine])
    return plot


def _as_float(value):
    return math.nan if value == '' or value is None else float(value)
