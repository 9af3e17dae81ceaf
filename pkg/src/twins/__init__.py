"""
Сильные близнецы: построение, вложения, сертификаты неизоморфности и обзор связности
"""
from .witness import OrdinaryTag, TwinFamilyEntry, TwinWitness, ordinary_twin_witness, strong_twin, twin_family
from .embeddings import MutualEmbeddings, mutual_embeddings
from .certificates import CopyState, DeficiencyCount, NonIsoCertificate, certify_pairwise_distinct, deficiency_count
from .survey import SurveyEntry, connectivity_survey

__all__ = [
    "OrdinaryTag", "TwinFamilyEntry", "TwinWitness", "ordinary_twin_witness", "strong_twin", "twin_family",
    "MutualEmbeddings", "mutual_embeddings",
    "CopyState", "DeficiencyCount", "NonIsoCertificate", "certify_pairwise_distinct", "deficiency_count",
    "SurveyEntry", "connectivity_survey",
]
