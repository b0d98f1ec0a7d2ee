"""From measured maser output to the active Fe3+ concentration."""
import numpy as np

from fesapphire import ensemble, maser
from fesapphire.fixtures import load_resonators
from fesapphire.units import dbm_to_watts

params = ensemble.RelaxationParams(t1=7e-3, t2=80e-6, t2_star=10e-9, t_d=14e-6)
f_inhom = ensemble.homogeneous_linewidth(params.t2_star)

# Participation at low power and with the pump-broadened packet width
for label, f_hom in (("low power", ensemble.homogeneous_linewidth(params.t2)), ("pumped", 5.9e6)):
    print(label, ensemble.participation_fraction(params, f_inhom, f_hom))

for key, res in load_resonators().items():
    cfg = maser.MaserConfig(
        system=res.three_level_system(0), signal_mode=res.signal_mode(0),
        temperature=8.72, ion_density=0.0, t1=params.t1, t2=params.t2,
    )
    est = maser.infer_concentration(dbm_to_watts(res.output_dbm[0]), cfg)
    print(f"{res.name}: {res.output_dbm[0]} dBm -> {est.ppb:.1f} ppb, "
          f"2 ppm assay is {maser.dark_matter_ratio(2000, est.ppb):.0f}x larger")

# Inversion against temperature; it changes sign near 1.5 K
sys3 = load_resonators()["basile"].three_level_system(0)
temps = np.array([1.0, 1.5, 2.0, 3.0, 4.36, 8.72, 29.5, 77.0])
print(np.c_[temps, [maser.saturated_inversion(sys3, t) for t in temps]])
