"""
Eigenspectra, PD/CND verdicts and bandwidth sweeps.
"""

from geo_kernel_lab.spectral.SpectrumReport import (
    CrosscheckStatus, LambdaSweep, SchonbergReport, SpectrumReport, SweepVerdict, Verdict)
from geo_kernel_lab.spectral.eigen import (
    cnd_report, cnd_verdict, default_tolerance, eigenspectrum, gram_report,
    pd_verdict, spectrum_report)
from geo_kernel_lab.spectral.sweeps import (
    default_lambda_grid, lambda_sweep, parse_lambda_grid, schonberg_crosscheck)

__all__ = [
    'Verdict', 'SweepVerdict', 'CrosscheckStatus',
    'SpectrumReport', 'LambdaSweep', 'SchonbergReport',
    'eigenspectrum', 'pd_verdict', 'cnd_verdict', 'default_tolerance',
    'spectrum_report', 'cnd_report', 'gram_report',
    'default_lambda_grid', 'parse_lambda_grid', 'lambda_sweep', 'schonberg_crosscheck',
]
