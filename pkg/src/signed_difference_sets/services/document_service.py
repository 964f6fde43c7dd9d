"""Signed-set documents: the JSON file format shared by every command."""

import json
from collections import Counter
from enum import Enum
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..core.designs import SdsParams
from ..core.finite_field import FieldElement, FiniteField
from ..core.groupring import GroupRingElement, SignedSet, to_ring
from ..core.groups import AbelianGroup, group_make
from ..logging_config import StructuredLogger
from ..utils.errors import DocumentError, FieldError, SupportOverlapError
from ..utils.number_theory import is_prime

logger = StructuredLogger("services.document")


class GroupType(str, Enum):
    """Presentation of the ambient group."""

    CYCLIC = "cyclic"
    ELEMENTARY = "elementary"
    PRODUCT = "product"


class FieldDescriptor(BaseModel):
    """Field whose additive group is the ambient group; pins modulus and w."""

    p: int
    n: int = Field(ge=1)
    modulus: list[int]
    w: list[int]


class GroupDescriptor(BaseModel):
    """Z_{d_1} x ... x Z_{d_r}, optionally the additive group of a field."""

    type: GroupType
    orders: list[int] = Field(min_length=1)
    field: FieldDescriptor | None = None

    @model_validator(mode="after")
    def check_presentation(self) -> "GroupDescriptor":
        if any(d < 1 for d in self.orders):
            raise ValueError("orders must be positive")
        if self.type is GroupType.CYCLIC and len(self.orders) != 1:
            raise ValueError("a cyclic group has exactly one order")
        if self.type is GroupType.ELEMENTARY and (len(set(self.orders)) != 1 or not is_prime(self.orders[0])):
            raise ValueError("an elementary abelian group has equal prime orders")
        if self.field is not None and self.orders != [self.field.p] * self.field.n:
            raise ValueError("field descriptor does not match the group orders")
        return self


class DeclaredParams(BaseModel):
    """(v, k, lambda) as recorded by the producer of the document."""

    model_config = ConfigDict(populate_by_name=True)

    v: int
    k: int
    lam: int = Field(alias="lambda")


class SignedSetDocument(BaseModel):
    """
    A signed set (or integer group ring element) with its group presentation.

    A coordinate listed r times in positive (negative) carries coefficient
    +r (-r). A coordinate in both lists is rejected.
    """

    group: GroupDescriptor
    positive: list[list[int]] = Field(default_factory=list)
    negative: list[list[int]] = Field(default_factory=list)
    params: DeclaredParams | None = None
    family: str | None = None


class DocumentService:
    """Serialize, parse and materialize signed-set documents."""

    @staticmethod
    def describe_group(G: AbelianGroup, field: FiniteField | None = None) -> GroupDescriptor:
        """Group descriptor, using the field when G is its additive group."""
        if G.is_cyclic_presentation:
            kind = GroupType.CYCLIC
        elif len(set(G.orders)) == 1 and is_prime(G.orders[0]):
            kind = GroupType.ELEMENTARY
        else:
            kind = GroupType.PRODUCT
        descriptor = None
        if field is not None:
            descriptor = FieldDescriptor(p=field.p, n=field.n, modulus=list(field.modulus), w=list(field.w.coords))
        return GroupDescriptor(type=kind, orders=list(G.orders), field=descriptor)

    @staticmethod
    def to_document(
        element: GroupRingElement | SignedSet,
        params: SdsParams | None = None,
        field: FiniteField | None = None,
        family: str | None = None,
    ) -> SignedSetDocument:
        """
        Build a document from a signed set or group ring element.

        Args:
            element: The element; coefficients of magnitude r become r repeats.
            params: Parameters to declare.
            field: Field pinning the group presentation.
            family: Construction family label.

        Returns:
            The document, with coordinates in ascending element order.
        """
        A = to_ring(element) if isinstance(element, SignedSet) else element
        G = A.group
        positive: list[list[int]] = []
        negative: list[list[int]] = []
        for index in A.support:
            coords = list(G.element(int(index)).coords)
            c = A.coefficient(int(index))
            target = positive if c > 0 else negative
            target.extend([coords] * abs(c))
        declared = DeclaredParams(v=params.v, k=params.k, lam=params.lam) if params is not None else None
        return SignedSetDocument(
            group=DocumentService.describe_group(G, field),
            positive=positive,
            negative=negative,
            params=declared,
            family=family,
        )

    @staticmethod
    def dumps(document: SignedSetDocument) -> str:
        return document.model_dump_json(indent=2, by_alias=True, exclude_none=True)

    @staticmethod
    def parse(text: str) -> SignedSetDocument:
        """Parse JSON text; malformed or invalid content raises DocumentError."""
        try:
            return SignedSetDocument.model_validate(json.loads(text))
        except json.JSONDecodeError as e:
            raise DocumentError("document is not valid JSON", {"line": e.lineno, "column": e.colno}) from e
        except ValidationError as e:
            first = e.errors()[0]
            raise DocumentError("document failed validation", {"at": ".".join(str(x) for x in first["loc"]), "error": first["msg"]}) from e

    @staticmethod
    def read(path: Path) -> SignedSetDocument:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise DocumentError("cannot read document", {"path": str(path), "error": e.strerror}) from e
        logger.debug("Document read", path=str(path), size=len(text))
        return DocumentService.parse(text)

    @staticmethod
    def group_of(document: SignedSetDocument) -> AbelianGroup:
        return group_make(document.group.orders)

    @staticmethod
    def field_of(document: SignedSetDocument) -> FiniteField | None:
        """The pinned field, validated; None when the document has none."""
        descriptor = document.group.field
        if descriptor is None:
            return None
        try:
            return FiniteField(descriptor.p, descriptor.n, tuple(descriptor.modulus), FieldElement(tuple(descriptor.w)))
        except FieldError as e:
            raise DocumentError("invalid field descriptor", e.witness) from e

    @staticmethod
    def element(document: SignedSetDocument) -> GroupRingElement:
        """
        Group ring element of the document.

        Raises:
            SupportOverlapError: A coordinate appears with both signs.
            DocumentError: A coordinate lies outside the group.
        """
        G = DocumentService.group_of(document)

        def _indices(rows: list[list[int]], label: str) -> Counter[int]:
            counts: Counter[int] = Counter()
            for coords in rows:
                if not G.contains(coords):
                    raise DocumentError(f"{label} coordinate outside the group", {"coords": tuple(coords), "orders": G.orders})
                counts[G.index(coords)] += 1
            return counts

        positive = _indices(document.positive, "positive")
        negative = _indices(document.negative, "negative")
        overlap = positive.keys() & negative.keys()
        if overlap:
            raise SupportOverlapError(
                "positive and negative supports overlap",
                {"element": G.element(min(overlap)).coords, "count": len(overlap)},
            )
        coeffs = np.zeros(G.v, dtype=np.int64)
        for index, count in positive.items():
            coeffs[index] = count
        for index, count in negative.items():
            coeffs[index] = -count
        return GroupRingElement(G, coeffs)

    @staticmethod
    def signed_set(document: SignedSetDocument) -> SignedSet | None:
        """The signed set, or None when a coordinate is repeated."""
        A = DocumentService.element(document)
        return SignedSet.from_ring(A) if A.is_signed() else None
