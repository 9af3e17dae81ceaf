"""
Сертификаты неизоморфности членов семейства близнецов по счёту дефицитных копий Q
"""
from enum import Enum
from typing import List, Literal, Tuple

from pydantic import BaseModel, Field

from ..core.subgraph_spec import image_spec, spec_contains, spec_disjoint
from ..services.logger_service import logger
from .witness import TwinFamilyEntry, TwinWitness, twin_family


class CopyState(str, Enum):
    """Состояние k-й сдвинутой копии: Q на месте и P удалено, и т.д."""
    DEFICIENT = "deficient"
    INTACT = "intact"
    VANISHED = "vanished"
    MIXED = "mixed"


class DeficiencyCount(BaseModel):
    index: int
    scan_bound: int
    count: int
    states: List[CopyState] = Field(default_factory=list)

    @property
    def mixed(self) -> List[int]:
        return [k for k, state in enumerate(self.states) if state is CopyState.MIXED]


class NonIsoCertificate(BaseModel):
    pair: Tuple[int, int]
    scan_bound: int
    counts: Tuple[int, int]
    verdict: Literal["distinct", "inconclusive"]
    diagnostics: List[str] = Field(default_factory=list)


def _presence(spec, entry: TwinFamilyEntry) -> Literal["present", "absent", "mixed"]:
    """Целиком в G_i, целиком удалено или частично (приближённые ответы дают mixed)"""
    if spec_disjoint(spec, entry.removed).kind == "disjoint":
        return "present"
    if spec_contains(spec, entry.removed).kind == "contained":
        return "absent"
    return "mixed"


def deficiency_count(entry: TwinFamilyEntry, tw: TwinWitness, K: int) -> DeficiencyCount:
    """
    Число k < K, для которых f^k(Q) целиком в G_i, а f^k(P) целиком удалено.

    Raises:
        CertificateInapplicableError: Q не конечно
    """
    tw.require_ordinary()
    f = tw.base.f
    states: List[CopyState] = []
    for k in range(K):
        shifted = f.power(k)
        q_state = _presence(image_spec(shifted, tw.Q), entry)
        p_state = _presence(image_spec(shifted, tw.P), entry)
        if q_state == "present" and p_state == "absent":
            states.append(CopyState.DEFICIENT)
        elif q_state == "present" and p_state == "present":
            states.append(CopyState.INTACT)
        elif q_state == "absent" and p_state == "absent":
            states.append(CopyState.VANISHED)
        else:
            states.append(CopyState.MIXED)
    count = sum(1 for state in states if state is CopyState.DEFICIENT)
    logger.debug(f"Дефицит G{entry.index}", f"K={K}, count={count}")
    return DeficiencyCount(index=entry.index, scan_bound=K, count=count, states=states)


def certify_pairwise_distinct(tw: TwinWitness, up_to: int, K: int) -> List[NonIsoCertificate]:
    """
    Сертификаты для всех пар 1 <= i < j <= up_to.

    Пара различима, если счётчики различны, смешанных индексов нет и K > max(i, j).
    """
    tw.require_ordinary()
    counts = {i: deficiency_count(twin_family(tw, i), tw, K) for i in range(1, up_to + 1)}
    certificates: List[NonIsoCertificate] = []
    for i in range(1, up_to + 1):
        for j in range(i + 1, up_to + 1):
            di, dj = counts[i], counts[j]
            diagnostics = [f"G{i}: mixed copy {k}" for k in di.mixed] + [f"G{j}: mixed copy {k}" for k in dj.mixed]
            if K <= max(i, j):
                diagnostics.append(f"scan bound {K} does not exceed index {max(i, j)}")
            distinct = di.count != dj.count and not diagnostics
            certificates.append(
                NonIsoCertificate(
                    pair=(i, j),
                    scan_bound=K,
                    counts=(di.count, dj.count),
                    verdict="distinct" if distinct else "inconclusive",
                    diagnostics=diagnostics,
                )
            )
    distinct_total = sum(1 for c in certificates if c.verdict == "distinct")
    logger.info(f"Сертификаты близнецов {tw.graph.family_id}", f"{distinct_total}/{len(certificates)} distinct")
    return certificates
