import numpy as np


def ceil_log(base: int, x: int) -> int:
    """Smallest e with base**e >= x, computed exactly on integers (x >= 1)."""
    if x < 1:
        raise ValueError("ceil_log needs x >= 1")
    e, power = 0, 1
    while power < x:
        power *= base
        e += 1
    return e


def is_power_of_two(x: int) -> bool:
    return x >= 1 and (x & (x - 1)) == 0


def popcount(x: int) -> int:
    return x.bit_count()


def parity(x: int) -> int:
    return popcount(x) & 1


def popcount_array(values: np.ndarray) -> np.ndarray:
    """Vectorized popcount for non-negative integer arrays below 2**32."""
    v = values.astype(np.uint32)
    counts = np.zeros(v.shape, dtype=np.int64)
    while np.any(v):
        counts += (v & 1).astype(np.int64)
        v = v >> 1
    return counts


def to_digits(value: int, base: int, width: int) -> tuple[int, ...]:
    """Expansion of value in the given base, least significant digit first."""
    digits = []
    for _ in range(width):
        value, d = divmod(value, base)
        digits.append(d)
    return tuple(digits)


def generator(seed: int) -> np.random.Generator:
    """The toolkit's one PRNG: numpy's PCG64 seeded with an integer."""
    return np.random.Generator(np.random.PCG64(seed))
