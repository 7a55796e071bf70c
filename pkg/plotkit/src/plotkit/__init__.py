"""Static figures from spectral-curve sweep CSV files.

Input contract: ``a,degree,real_count,lambda_1..lambda_D`` with one row per
sweep sample; ``real_count`` ascending real values populate the lambda
cells, the rest stay empty, and ``real_count = -1`` marks a failed sample.
"""

from plotkit.render import (
    CurveData,
    CurveFigureSpec,
    CurveFormatError,
    RenderReport,
    main,
    read_curve_csv,
    render,
)

__version__ = "0.1.0"
