"""
Обзор связности членов семейства близнецов, построенных через f*
"""
from typing import List

from pydantic import BaseModel

from ..core.window import Connectivity, connected_window
from ..selfcontain.alternating import standard_isomorphism_fixing_first
from ..services.logger_service import logger
from .witness import TwinWitness, twin_family


class SurveyEntry(BaseModel):
    index: int
    family_id: str
    window_size: int
    verdict: Connectivity


def connectivity_survey(tw: TwinWitness, up_to: int, n: int) -> List[SurveyEntry]:
    """
    Связность окна размера n для G_1..G_up_to.

    Члены семейства строятся сдвигом f*, фиксирующим f(H); без семейства
    чередующих автоморфизмов используется само f.
    """
    if tw.alternating is not None:
        shift = standard_isomorphism_fixing_first(tw.alternating)
    else:
        logger.warning("Нет чередующих автоморфизмов, обзор строится через f", tw.graph.family_id)
        shift = tw.base.f
    results: List[SurveyEntry] = []
    for i in range(1, up_to + 1):
        entry = twin_family(tw, i, shift=shift)
        verdict = connected_window(entry.graph, n)
        results.append(SurveyEntry(index=i, family_id=entry.graph.family_id, window_size=n, verdict=verdict))
    return results
