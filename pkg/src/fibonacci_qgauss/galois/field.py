"""Prime fields GF(p) for desk-scale enumeration."""

from dataclasses import dataclass

from fibonacci_qgauss.errors import NotPrimeError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class PrimeField:
    """Integers modulo a prime p."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrimeError(f"Field size {self.p} is not prime")

    @property
    def elements(self) -> range:
        return range(self.p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def combine(
        self, scalars: tuple[int, ...], vectors: list[tuple[int, ...]], n: int
    ) -> tuple[int, ...]:
        """sum_i scalars[i] * vectors[i] in GF(p)^n."""
        total = [0] * n
        for a, vector in zip(scalars, vectors, strict=True):
            if a:
                for c, v in enumerate(vector):
                    total[c] = self.add(total[c], self.mul(a, v))
        return tuple(total)
