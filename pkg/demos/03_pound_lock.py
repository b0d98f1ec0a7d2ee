"""Pound lock of the pump loop under a cryocooler temperature yo-yo."""
import numpy as np

from fesapphire import servo, stability

model = servo.ResonatorModel(f_r=31.34033e9, q_loaded=6e7, beta=1.0)
cfg = servo.PoundConfig(detector_noise=0.8e-9)

print("linewidth", model.linewidth, "Hz")
print("slope", servo.discriminator_slope(model, cfg), "V/Hz")
print("loop rate", servo.loop_rate(model, cfg), "1/s, settles in", servo.settling_time(model, cfg), "s")

# Discriminator curve
x = np.linspace(-3, 3, 13) * model.linewidth
print(np.c_[x, [servo.pound_error(model, cfg, model.f_r + d) for d in x]])

# Acquire from a 100 Hz offset, with and without residual AM
for am in (True, False):
    c = servo.PoundConfig(residual_am_enabled=am)
    tr = servo.simulate(model, c, 1.0, initial_offset=100.0)
    print("AM" if am else "no AM", "locked at", tr.lock_time, "s, residual", tr.loop_freq[-1] - tr.resonance[-1], "Hz")

# At the turnover the error signal rings at twice the cycle frequency;
# half a kelvin away the linear term takes over
for setpoint in (8.72, 9.22):
    _, temp = stability.temperature_series(stability.YoYo(0.1, 1.4, setpoint), 20.0, 1e-3)
    tr = servo.simulate(model, cfg, 20.0, temp, stability.BASILE_CURVE)
    f, snr = servo.dominant_peak(tr)
    print(f"set point {setpoint} K: peak {f:.2f} Hz, {snr:.1f} dB above floor")
