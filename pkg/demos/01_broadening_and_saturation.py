"""Walk through the ESR broadening chain for Fe3+ in sapphire."""
import numpy as np

from fesapphire import cavity, ensemble
from fesapphire.cavity import Convention, Transition, WgMode

# Low-power homogeneous width from a ~80 us dephasing time
t1, t2 = 7e-3, 80e-6
print("homogeneous linewidth:", ensemble.homogeneous_linewidth(t2), "Hz")

# The inhomogeneous line, from T2* ~ 10 ns, next to the catalog values
print("inhomogeneous linewidth:", ensemble.homogeneous_linewidth(10e-9) / 1e6, "MHz")
for e in ensemble.catalog_query("inhomog_linewidth"):
    print("   ", e.source, e.material, e.concentration, e.conc_unit, e.value / 1e6, "MHz")

# Pump mode: 1 mW circulating, Q of a billion, 5 cm^3
pump = WgMode(f0=31.3e9, q_loaded=1e9, v_eff=5e-6)
field = cavity.field_amplitude(pump, 1e-3)
print("H =", field.h, "A/m, B =", field.b, "T")

tr = Transition(amplitude=0.05, f_transition=31.3e9)
for conv in Convention:
    chi = cavity.rabi_frequency(tr, field, conv)
    print(f"{conv.value:>12}: chi = {chi:.3g} Hz, S = {ensemble.saturation(chi, t1, t2):.3g}")
print(cavity.CONVENTION_NOTE)

# Power broadening with the dimensionally consistent drive
state = ensemble.saturation_state(cavity.rabi_frequency(tr, field), t1, t2)
print("effective linewidth:", state.delta_f / 1e6, "MHz")
for sep in (8e6, 10e3):
    print(f"modes {sep:g} Hz apart ->", ensemble.classify_mode_pair(sep, state.delta_f).value)

# How the width grows with saturation; the asymptote is S/(pi T2)
s = np.logspace(-1, 4, 6)
widths = np.array([ensemble.intensity_broadened_linewidth(x, t2) for x in s])
print(np.c_[s, widths, s / (np.pi * t2)])

# T2 scales as 1/sqrt(concentration)
c = ensemble.Concentration
print("ruby T2 at 0.02 wt%:", ensemble.scale_t2(1.5e-6, c(0.005, "wt%"), c(0.02, "wt%")), "s")
