"""
How far can you see in the rain?
================================

Attenuation coefficients for the built-in weather conditions, the distance
at which contrast drops to 2%, and what is left of a black/white contrast
at a few street-scale distances.
"""
import numpy as np

from weathervg.attenuation import (
    HEAVY_ADVECTION,
    WeatherCondition,
    contrast_ratio,
    koschmieder_distance,
    mie_extinction_efficiency,
    resolve_condition,
)

conditions = ["clear", "rain:2", "rain:8", "rain:25", "snow-wet:4", "snow-dry:1",
              "snow-dry:4", "fog-mr", "fog-ha"]

print(f"{'condition':<12} {'sigma (1/m)':>12} {'V_d (m)':>9}   contrast at 25 / 50 / 100 m")
for text in conditions:
    coef = resolve_condition(WeatherCondition.parse(text))
    cr = contrast_ratio(coef.sigma, np.array([25.0, 50.0, 100.0]))
    print(f"{coef.condition.label:<12} {coef.sigma:12.6f} {koschmieder_distance(coef.sigma):9.1f}"
          f"   {cr[0]:.3f} / {cr[1]:.3f} / {cr[2]:.3f}")

# Fog droplets are comparable to the wavelength, so the extinction efficiency
# swings around 2 before settling; tiny droplets barely scatter at all.
print("\nQ_ext for water droplets at 550 nm")
for r in (0.05, 0.5, 1.0, 5.0, 10.0, 50.0):
    x = 2 * np.pi * r / 0.55
    print(f"  r = {r:5.2f} um   x = {x:7.2f}   Q = {mie_extinction_efficiency(x, 1.333):.4f}")

# The heavy advection profile holds most of its cross-section around 15-20 um.
r = np.linspace(0.0, 60.0, 13)
area = np.pi * r**2 * HEAVY_ADVECTION.a * r**HEAVY_ADVECTION.alpha * np.exp(-HEAVY_ADVECTION.b * r)
print("\nheavy advection fog, pi r^2 N(r) (um^2 cm^-3 um^-1)")
for ri, ai in zip(r, area):
    print(f"  {ri:5.1f}  {'#' * int(60 * ai / area.max())}")
