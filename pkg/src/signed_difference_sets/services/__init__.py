"""Services package initialization."""

from .classification_service import ClassificationService
from .construction_service import ConstructionResult, ConstructionService
from .document_service import DocumentService, SignedSetDocument
from .export_service import ExportService
from .verification_service import VerificationReport, VerificationService

__all__ = [
    "ClassificationService",
    "ConstructionResult",
    "ConstructionService",
    "DocumentService",
    "ExportService",
    "SignedSetDocument",
    "VerificationReport",
    "VerificationService",
]
