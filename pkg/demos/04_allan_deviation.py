"""Thermal contribution to the Allan deviation near the turnover."""
import numpy as np

from fesapphire import stability

curve = stability.BASILE_CURVE
f_nom = curve.f_turnover
taus = [0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0]

for setpoint in (8.72, 8.82, 9.22):
    yoyo = stability.YoYo(amplitude=0.1, cycle_freq=1.43, setpoint=setpoint)
    rows = stability.thermal_adev_pipeline(curve, yoyo, f_nom, 400.0, taus)
    print(setpoint, "K:", " ".join(f"{s:.2e}" for _, s in rows))

# A can-to-crystal thermal lag filters the disturbance
yoyo = stability.YoYo(0.1, 1.43, 9.22)
for tc in (None, 0.1, 1.0):
    (row,) = stability.thermal_adev_pipeline(curve, yoyo, f_nom, 400.0, [10.0], lag_time_constant=tc)
    print("lag", tc, "s ->", row[1])

# Estimator sanity: white FM falls as tau^-1/2
rng = np.random.default_rng(1)
white = stability.FracFreqSeries(1.0, rng.normal(0, 1e-13, 200_000))
sig = [stability.adev(white, t) for t in (1.0, 10.0, 100.0)]
print("white FM:", sig, "slope", np.polyfit(np.log10([1, 10, 100]), np.log10(sig), 1)[0])
