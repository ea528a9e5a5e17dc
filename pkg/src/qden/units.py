"""Physical constants and unit conversion factors.

Internal conventions: lengths in integer nm, areas in integer nm^2,
energies in eV, times in seconds.  Conversion to reporting units
(um^2, mm^2, Mqb/cm^2, GHz, hours) happens at the output boundary.
"""

from __future__ import annotations

import math

# Reduced Planck constant in eV s (CODATA, 10 significant digits).
HBAR_EV_S = 6.582119569e-16

# Electron rest mass and elementary charge (CODATA 2018, exact by definition).
ELECTRON_MASS_KG = 9.1093837015e-31
EV_TO_J = 1.602176634e-19

NM2_PER_UM2 = 10**6
NM2_PER_MM2 = 10**12
NM2_PER_CM2 = 10**14
UM2_PER_CM2 = 10**8

SECONDS_PER_HOUR = 3600.0


def round_sig(value: float, digits: int = 3) -> float:
    """Round to the given number of significant digits."""
    if value == 0:
        return 0.0
    return round(value, digits - 1 - math.floor(math.log10(abs(value))))
