"""
ydhopf - exact Yetter-Drinfel'd Hopf algebras over cyclotomic fields.

Builds the crossed-product families over K[Z_p], their Radford biproducts and
the second construction from structure constants, verifies every axiom
exactly, classifies them up to isomorphism and runs their Clifford theory.
"""

__version__ = "0.3.0"
__author__ = "Nicholas"
__email__ = "clearcmos@domain.com"

from ydhopf.core import YDHopfEngine
from ydhopf.config.settings import Settings

__all__ = ["YDHopfEngine", "Settings"]
