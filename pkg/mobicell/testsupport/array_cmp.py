"""Pytest plugin for numerical comparisons of values, results and estimates.

`ArrayDiff(a, b) < tol` compares numbers, arrays, `AnalyticResult` values and
Monte Carlo `Estimate` means. A dictionary tolerance selects the test:
``{'atol': .., 'rtol': ..}`` for elementwise tolerances and
``{'mc': k, 'floor': f}`` for agreement of a success-probability estimate
with a reference probability `b` within ``max(f, k * sqrt(b(1-b)/n))``.

>>> ArrayDiff([1.0, 2.0], [1.0, 2.0 + 1e-12]) < 1e-9
True

"""


import numpy as np


def unwrap(x):
    """Numerical value of analytic results and Monte Carlo estimates."""
    if hasattr(x, 'mean') and hasattr(x, 'ci95_halfwidth'):
        return x.mean
    if hasattr(x, 'value') and hasattr(x, 'est_error'):
        return x.value
    return x


def broadcastable(a, b):
    try:
        np.broadcast(a, b)
        return True
    except ValueError:
        return False


class ArrayDiff:
    def __init__(self, a, b):
        self.a = a
        self.b = b
        self.n = getattr(a, 'n', None)

    def _convert(self):
        try:
            self.a = np.asarray(unwrap(self.a), float)
            self.b = np.asarray(unwrap(self.b), float)
        except (TypeError, ValueError):
            pass
        self.a_array_convertible = isinstance(self.a, np.ndarray)
        self.b_array_convertible = isinstance(self.b, np.ndarray)
        self.broadcastable = broadcastable(self.a, self.b)
        return (self.broadcastable and self.a_array_convertible
                and self.b_array_convertible)

    def within_tol(self, atol=0, rtol=0, tol=None):
        if tol is not None:
            atol = rtol = tol
        if not self._convert():
            return False

        self.atol = atol
        self.rtol = rtol
        self.summary = f"arrays not within tolerances rtol={rtol} and atol={atol}"
        self.err = np.subtract(self.a, self.b)
        self.ok = np.abs(self.err) <= atol + rtol * np.abs(self.b)
        return bool(np.all(self.ok))

    def within_mc(self, mc=3, floor=0.0):
        if self.n is None or self.n < 1:
            raise ValueError("Monte Carlo comparison needs an Estimate with n > 0")
        if not self._convert():
            return False

        p = np.clip(self.b, 0, 1)
        sigma = np.sqrt(p * (1 - p) / self.n)
        bound = np.maximum(floor, mc * sigma)
        self.atol = bound
        self.rtol = 0
        self.summary = (f"estimate over {self.n} trials not within "
                        f"max({floor}, {mc} sigma) = {bound}")
        self.err = np.subtract(self.a, self.b)
        self.ok = np.abs(self.err) <= bound
        return bool(np.all(self.ok))

    def __lt__(self, other):
        if isinstance(other, dict):
            if 'mc' in other:
                return self.within_mc(**other)
            return self.within_tol(**other)
        elif isinstance(other, (int, float)):
            return self.within_tol(tol=other)
        else:
            raise ValueError("Invalid class for comparison.")

    def report(self, config):
        if not self.a_array_convertible:
            return ["a not convertible to ndarray."]
        if not self.b_array_convertible:
            return ["b not convertible to ndarray."]
        if not self.broadcastable:
            a_shape = np.shape(self.a)
            b_shape = np.shape(self.b)
            return [f"arrays not broadcastable with shapes {a_shape} and {b_shape}."]

        violations = []
        for ind in zip(*np.nonzero(np.atleast_1d(~self.ok))):
            ai = np.atleast_1d(self.a)[ind] if self.a.ndim else self.a
            bi = np.atleast_1d(self.b)[ind] if self.b.ndim else self.b
            ei = np.atleast_1d(self.err)[ind]
            violations.append(f"{ind} a={ai}\tb={bi}\terr={ei}")
        return ([self.summary] +
                ["", "a="] + np.array_str(self.a).splitlines() +
                ["", "b="] + np.array_str(self.b).splitlines() +
                ["", "a-b="] + np.array_str(self.err).splitlines() +
                ["", "violations: "] + violations)


def pytest_assertrepr_compare(config, op, left, right):
    """Return explanation for comparisons in failing ArrayDiff assertions."""
    if isinstance(left, ArrayDiff) and op == "<":
        return left.report(config)
