"""Gain ledger of the 31.3 GHz pump loop and which WG modes it can sustain."""
import numpy as np

from fesapphire import pumploop
from fesapphire.fixtures import load_resonators

bom = pumploop.load_table2_bom()
picker = min((c.filter for c in bom if c.filter), key=lambda f: f.bandwidth_3db)

for name, g, total in pumploop.stage_ledger(bom, picker.center):
    print(f"{name:45s} {g:+7.2f} dB  {total:+7.2f} dB")
print("DC power:", pumploop.dc_power_budget(bom), "W")

# Mode-picker response around its centre frequency
offsets = np.array([0, 4.35, 8.7, 17.4, 30.0]) * 1e6
print(np.c_[offsets / 1e6, [pumploop.filter_response(picker, picker.center + d) for d in offsets]])

# Pump modes of the two resonators against the same loop
pumps = {k: r.pump_freq_hz for k, r in load_resonators().items()}
for key, f in pumps.items():
    print(key, f, "Hz ->", round(pumploop.chain_gain(bom, f), 2), "dB")
print("selected:", pumploop.select_pump_modes(list(pumps.values()), bom))

# Retuning both filters brings the other pump mode into band
from dataclasses import replace

retuned = [replace(c, filter=replace(c.filter, center=pumps["leonard"])) if c.filter else c for c in bom]
print("retuned:", pumploop.select_pump_modes(list(pumps.values()), retuned))
