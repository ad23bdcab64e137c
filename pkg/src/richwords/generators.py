"""Finite prefixes of morphic, periodic and other infinite words."""

from __future__ import annotations

from dataclasses import dataclass


class MorphismError(ValueError):
    pass


@dataclass(frozen=True)
class Morphism:
    rules: dict[str, str]

    def __post_init__(self):
        if not self.rules:
            raise MorphismError("morphism has no rules")
        for a, img in self.rules.items():
            if len(a) != 1:
                raise MorphismError(f"rule key {a!r} is not a single symbol")
            if not img:
                raise MorphismError(f"image of {a!r} is empty")
            missing = set(img) - self.rules.keys()
            if missing:
                raise MorphismError(f"no rule for {''.join(sorted(missing))!r}")

    @classmethod
    def parse(cls, text: str) -> Morphism:
        """Parse the compact form ``"a=aba;b=bb"``."""
        rules = {}
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            key, sep, img = part.partition("=")
            if not sep:
                raise MorphismError(f"malformed rule {part!r}, expected x=image")
            key, img = key.strip(), img.strip()
            if key in rules:
                raise MorphismError(f"duplicate rule for {key!r}")
            rules[key] = img
        return cls(rules)

    def is_prolongable(self, seed: str) -> bool:
        img = self.rules.get(seed, "")
        return len(img) >= 2 and img[0] == seed

    def apply(self, w: str) -> str:
        return "".join(self.rules[c] for c in w)


FIBONACCI = Morphism({"a": "ab", "b": "a"})


def morphic_prefix(m: Morphism, seed: str, n: int) -> str:
    """Length-``n`` prefix of the fixed point of ``m`` starting with ``seed``."""
    if not m.is_prolongable(seed):
        raise MorphismError(f"morphism is not prolongable at {seed!r}")
    if n < 0:
        raise ValueError("n must be >= 0")
    w = seed
    while len(w) < n:
        # each pass maps a prefix of the fixed point to a longer prefix
        out = []
        size = 0
        for c in w:
            img = m.rules[c]
            out.append(img)
            size += len(img)
            if size >= n:
                break
        w = "".join(out)
    return w[:n]


def fibonacci_word(n: int) -> str:
    return morphic_prefix(FIBONACCI, "a", n)


def periodic_prefix(block: str, n: int) -> str:
    if not block:
        raise ValueError("periodic block must be non-empty")
    if n < 0:
        raise ValueError("n must be >= 0")
    return (block * (n // len(block) + 1))[:n]


def psi_block(k: int) -> str:
    """The block ``aa b^k aabab``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return "aa" + "b" * k + "aabab"


def psi_of_fibonacci(k: int, n: int) -> str:
    """Prefix of the image of the Fibonacci word under a -> aa b^k aabab, b -> bab."""
    if n < 0:
        raise ValueError("n must be >= 0")
    images = {"a": psi_block(k), "b": "bab"}
    out = []
    size = 0
    # every image has length >= 3, so n // 3 + 1 source letters suffice
    for c in fibonacci_word(n // 3 + 1):
        if size >= n:
            break
        out.append(images[c])
        size += len(images[c])
    return "".join(out)[:n]


def kleene_staircase(n: int, mode: int = 2) -> str:
    """Prefix of ``abbb...`` (mode 1) or ``abaabaaab...`` (mode 2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if mode == 1:
        return ("a" + "b" * n)[:n]
    if mode != 2:
        raise ValueError(f"mode must be 1 or 2, got {mode}")
    out = []
    size = 0
    run = 1
    while size < n:
        out.append("a" * run + "b")
        size += run + 1
        run += 1
    return "".join(out)[:n]
