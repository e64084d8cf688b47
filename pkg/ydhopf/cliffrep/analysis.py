"""
The whole Clifford pipeline for one commutative YD Hopf algebra A over K[Z_p]:
idempotents, orbits, the simple modules of A (x) K[Z_p], linkage and
orthogonality.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional

from loguru import logger

from ..algebra.cyclonum import CycElement
from ..config.settings import VerificationSettings
from ..constructions.base import YDHopfAlgebra
from ..constructions.biproduct import Biproduct, build_biproduct
from ..utils.report import VerificationReport
from .idempotents import primitive_idempotents
from .linkage import character_orthogonality, linkage_check
from .modules import RepData, simple_modules_of_biproduct
from .orbits import CliffordData, orbit_analysis


@dataclass
class CliffordAnalysis:
    base: YDHopfAlgebra
    biproduct: Biproduct
    data: CliffordData
    modules: List[RepData]
    gram: List[List[CycElement]]
    report: VerificationReport

    @property
    def ok(self) -> bool:
        return self.report.ok

    @property
    def dimensions(self) -> List[int]:
        return [V.dim for V in self.modules]

    def linkage_matrix(self) -> List[List[bool]]:
        """Entry (i, j) is True when V_i and V_j lie over the same orbit."""
        return [[set(V.kappa) == set(W.kappa) for W in self.modules] for V in self.modules]

    def to_dict(self) -> Dict[str, object]:
        return {
            "algebra": self.base.name,
            "biproduct": self.biproduct.hopf.name,
            "conductor": self.base.hopf.field.N,
            "orbits": self.data.to_dict(),
            "modules": [V.to_dict() for V in self.modules],
            "linkage": self.linkage_matrix(),
            "gram_is_identity": all(
                self.gram[i][j] == (1 if i == j else 0)
                for i in range(len(self.gram)) for j in range(len(self.gram))
            ),
            "report": self.report.to_dict(),
        }


def clifford_analysis(
    base: YDHopfAlgebra,
    biproduct: Optional[Biproduct] = None,
    settings: Optional[VerificationSettings] = None,
    verify_modules: bool = True,
) -> CliffordAnalysis:
    """Run the pipeline; SplittingFieldTooSmall propagates with the conductor to retry with."""
    settings = settings or VerificationSettings()
    A, yds = base.hopf, base.yds
    biproduct = biproduct or build_biproduct(base, compare=False)
    B = biproduct.hopf

    E = primitive_idempotents(A.algebra)
    data = orbit_analysis(A, yds, E)
    modules, module_report = simple_modules_of_biproduct(A, yds, B, data, verify=verify_modules)
    gram, orthogonality = character_orthogonality(B, modules, settings)

    report = VerificationReport(f"Clifford analysis of {B.name}")
    report.merge(data.report, prefix="orbits: ")
    report.merge(module_report, prefix="modules: ")
    report.merge(linkage_check(A, yds, B, data, modules), prefix="linkage: ")
    report.merge(orthogonality, prefix="characters: ")
    logger.info(f"Clifford analysis of {B.name}: {'ok' if report.ok else 'FAILED'}")
    return CliffordAnalysis(base, biproduct, data, modules, gram, report)
