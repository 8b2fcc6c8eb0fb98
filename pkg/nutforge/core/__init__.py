"""Core building blocks (settings, polynomial arithmetic, cyclotomics, circulants)."""

from nutforge.core.circulant import CirculantSpec, adjacency, eigen_poly
from nutforge.core.cyclotomic import divides_phi, phi_poly
from nutforge.core.intpoly import IntPolynomial, divrem_monic
from nutforge.core.settings import get_settings

__all__ = [
    "CirculantSpec",
    "IntPolynomial",
    "adjacency",
    "divides_phi",
    "divrem_monic",
    "eigen_poly",
    "get_settings",
    "phi_poly",
]
