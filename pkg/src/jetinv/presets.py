"""Built-in Lie algebra bases acting on R^2 = {(x, u)}."""
from __future__ import annotations

from dataclasses import dataclass

from .calculus import VectorField
from .jetspace import JetSpace


@dataclass(frozen=True)
class LieAlgebraBasis:
    name: str
    p: int
    q: int
    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if (g.p, g.q) != (self.p, self.q):
                raise ValueError(f"generator {g} does not act on R^{self.p} x R^{self.q}")

    @property
    def group_dim(self) -> int:
        return len(self.generators)

    def __len__(self):
        return len(self.generators)


def _plane():
    s = JetSpace(1, 1, 0).symbols()
    return s["x"], s["u"]


def sl2() -> LieAlgebraBasis:
    """Projective action ``x -> (ax+b)/(cx+d)`` of SL(2) on x, u untouched."""
    x, u = _plane()
    gens = [
        VectorField(1, 1, (1,), (0,)),
        VectorField(1, 1, (x,), (0,)),
        VectorField(1, 1, (x**2,), (0,)),
    ]
    return LieAlgebraBasis("sl2", 1, 1, gens)


def sl3() -> LieAlgebraBasis:
    """Projective action of SL(3) on the plane."""
    x, u = _plane()
    gens = [
        VectorField(1, 1, (1,), (0,)),
        VectorField(1, 1, (0,), (1,)),
        VectorField(1, 1, (x,), (0,)),
        VectorField(1, 1, (0,), (u,)),
        VectorField(1, 1, (0,), (x,)),
        VectorField(1, 1, (u,), (0,)),
        VectorField(1, 1, (x**2,), (x * u,)),
        VectorField(1, 1, (x * u,), (u**2,)),
    ]
    return LieAlgebraBasis("sl3", 1, 1, gens)


def trivial(p: int = 1, q: int = 1) -> LieAlgebraBasis:
    """The zero algebra: a single vanishing generator."""
    return LieAlgebraBasis("trivial", p, q, [VectorField(p, q, (0,) * p, (0,) * q)])


PRESETS = {"sl2": sl2, "sl3": sl3, "trivial": trivial}


def get_preset(name: str) -> LieAlgebraBasis:
    try:
        return PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
