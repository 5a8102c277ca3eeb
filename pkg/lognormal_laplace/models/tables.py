from typing import Literal

from pydantic import BaseModel, root_validator


class GoldenTable(BaseModel):
    id: int
    title: str
    method: str  # evaluator name
    kind: Literal['value', 'absolute_difference']
    mu: float = 0.0
    options: dict = {}  # passed to the evaluator
    z: list[float]  # rows
    sigma: list[float]  # columns
    printed: list[list[float]]  # cells as printed, rows follow z

    @root_validator(skip_on_failure=True)
    def _shape(cls, values):
        rows, cols = len(values['z']), len(values['sigma'])
        if len(values['printed']) != rows or any(len(r) != cols for r in values['printed']):
            raise ValueError(f'printed cells must form a {rows}x{cols} grid')
        return values

    def cell(self, z: float, sigma: float) -> float:
        return self.printed[self.z.index(z)][self.sigma.index(sigma)]
