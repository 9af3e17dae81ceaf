"""
Взаимные вложения членов семейства близнецов
"""
from typing import NamedTuple, Optional

from ..config import get_config
from ..morphisms.verification import VerificationReport, verify_embedding_window
from ..morphisms.vertex_map import VertexMap, identity_map
from ..services.errors import EmbeddingError, WorkbenchError
from .witness import TwinWitness, twin_family


class MutualEmbeddings(NamedTuple):
    there: VertexMap
    back: VertexMap
    there_report: VerificationReport
    back_report: VerificationReport


def _embedding(tw: TwinWitness, i: int, j: int) -> VertexMap:
    """G_i -> G_j: f^{j-i} при i < j, включение при i > j"""
    source, target = twin_family(tw, i).graph, twin_family(tw, j).graph
    if i < j:
        shifted = tw.base.f.power(j - i)
        return shifted.restricted_to(source, target=target)
    return identity_map(source, target=target)


def mutual_embeddings(tw: TwinWitness, i: int, j: int, n: Optional[int] = None) -> MutualEmbeddings:
    """
    Индуцированные собственные вложения G_i -> G_j и G_j -> G_i, проверенные на окне.

    Raises:
        EmbeddingError: вложение не прошло проверку (отчёт приложен)
    """
    if i == j:
        raise WorkbenchError(f"mutual embeddings need distinct indices, got {i} and {j}")
    size = n if n is not None else get_config().embedding_window
    reports = []
    maps = []
    for a, b in ((i, j), (j, i)):
        m = _embedding(tw, a, b)
        report = verify_embedding_window(m, m.source, m.target, size, subject=f"G{a} -> G{b}")
        if not report.passed:
            raise EmbeddingError((a, b), report)
        maps.append(m)
        reports.append(report)
    return MutualEmbeddings(maps[0], maps[1], reports[0], reports[1])
