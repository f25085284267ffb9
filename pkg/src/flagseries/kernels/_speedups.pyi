"""Type stubs for the compiled dense-series kernels."""

BACKEND: str

def mul_trunc(a: list, b: list, n: int) -> list: ...
def inv_trunc(a: list, n: int) -> list: ...
def addmul_shifted(dst: list, src: list, shift: int, coef: int, n: int) -> None: ...
