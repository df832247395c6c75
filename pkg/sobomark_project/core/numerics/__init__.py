"""
Numerical core.

- arith: scalar backends (float, mpmath) and running error bounds
- polyfamilies: classical Charlier / Meixner polynomials and kernels
- sobolev: Sobolev-type polynomials, coefficient families, identity checks
- momentbasis: weighted polynomials, moment basis, block transforms
- watermarkcore: chaotic scrambler, zigzag, QIM, embed / extract
- attacks: robustness attack simulators
- metrics: PSNR / MSE and BER
"""
