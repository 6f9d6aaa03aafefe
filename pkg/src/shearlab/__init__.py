"""shearlab: simple shear, pure shear stretch and pure shear stress in
isotropic finite elasticity."""

__version__ = "0.1.0"
