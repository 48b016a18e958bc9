from typing import List, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from app.exactla.int_matrix import IntMatrix

# beyond this magnitude JSON readers may lose precision, so entries go out as strings
_SAFE_INT = 2 ** 53


class MatrixSpec(BaseModel):
    """Wire form of an integer matrix; entries stay as written until to_matrix."""
    rows: int = Field(..., ge=0, description="Number of rows")
    cols: int = Field(..., ge=0, description="Number of columns")
    entries: List[List[Union[int, str]]] = Field(default_factory=list,
                                                 description="Row-major entries; decimal strings allowed")

    @field_validator("entries")
    @classmethod
    def _check_decimal_strings(cls, entries):
        for row in entries:
            for x in row:
                if isinstance(x, str) and not x.strip().lstrip("+-").isdigit():
                    raise ValueError(f"entry {x!r} is not a decimal integer")
        return entries

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.entries) != self.rows:
            raise ValueError(f"{len(self.entries)} entry rows for rows={self.rows}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {i} has {len(row)} entries, cols={self.cols}")
        return self

    def to_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows([[int(x) for x in row] for row in self.entries], cols=self.cols)

    @classmethod
    def from_matrix(cls, m: IntMatrix) -> "MatrixSpec":
        entries = [[x if abs(x) < _SAFE_INT else str(x) for x in row] for row in m.to_lists()]
        return cls(rows=m.rows, cols=m.cols, entries=entries)
