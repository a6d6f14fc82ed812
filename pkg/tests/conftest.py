"""Suite-wide guards and shared fixtures.

The orientation convention (volume +e_01234567) is load-bearing for every
sign in the package: the canonical 4-form must be self-dual under it.  If
that ever breaks, nothing downstream is trustworthy, so the whole run is
aborted up front.
"""

import numpy as np
import pytest

from spin7.forms import hodge_star, residual
from spin7.structure import canonical_phi_form

_sd = residual(hodge_star(canonical_phi_form()), canonical_phi_form())
if _sd != 0.0:
    pytest.exit(
        f"orientation convention violated: canonical form is not self-dual "
        f"(residual {_sd}); aborting the suite",
        returncode=3,
    )


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)
