"""
The generalized complex plane ``C_p`` and its p-trigonometry

A single real parameter ``p`` with ``i**2 == p`` selects the geometry:
elliptic for ``p < 0``, parabolic (Galilean) for ``p == 0`` and hyperbolic
(Lorentzian) for ``p > 0``.
"""
