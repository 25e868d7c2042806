"""Monthly time-series analysis: trend, normality, stationarity, AR and spectra."""

import json as _json

from ._core import (
    AcfEstimate,
    AicTable,
    ArModel,
    HypothesisTestResult,
    LinearTrendFit,
    PValue,
    RandomWalkMoments,
    SpectrumEstimate,
    analyze_csv,
    ar_psd,
    characteristic_roots,
    daniell_smooth,
    dft,
    difference,
    fit_ar,
    fit_linear_trend,
    integrate,
    jarque_bera,
    kpss_level,
    make_ar_model,
    periodogram,
    psi_weights,
    random_walk_moments,
    sample_acf,
    select_order_aic,
    shapiro_wilk,
    simulate_ar,
    simulate_arima,
    simulate_random_walk,
)


def analyze(input_path, output_dir, **options):
    """Run the full pipeline and return the parsed report."""
    return _json.loads(analyze_csv(str(input_path), str(output_dir), **options))


__all__ = [name for name in dir() if not name.startswith("_")]
