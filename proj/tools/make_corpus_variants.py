#!/usr/bin/env python3
"""Derive the defective mock candidates from each corpus/<routine>/ok.c.

Writes crash.c, loop.c, nomarker.c and wrong.c next to ok.c. Run from the
repository root after editing any ok.c; the outputs are checked in.
"""
import pathlib
import sys

MARKER = '  printf("[gptblas]");\n'
UPLO = "int upper = (*uplo == 'U' || *uplo == 'u');"

# Routine-specific bugs for routines without an uplo parameter.
WRONG = {
    "dasum": ("sum += fabs(x[i * *incx]);", "sum += fabs(x[i]);"),
    "daxpy": ("iy += *incy;", "iy += 1;"),
    "ddot": ("ix += *incx;", "ix += 1;"),
    "idamax": ("double v = fabs(x[i * *incx]);", "double v = fabs(x[i]);"),
    "dnrm2": ("double v = x[i * *incx];", "double v = x[i];"),
    "drot": ("y[iy] = *c * ty - *s * tx;", "y[iy] = *c * ty + *s * tx;"),
    "drotm": ("h21 = -1.0;", "h21 = 1.0;"),
    "dgemv": ("y[i * *incy] = (*beta == 0.0) ? 0.0 : *beta * y[i * *incy];", "y[i * *incy] = 0.0;"),
    "dger": ("double temp = *alpha * y[j * *incy];", "double temp = y[j * *incy];"),
    "dgemm": (
        "C(i, j) = (*beta == 0.0) ? *alpha * temp : *alpha * temp + *beta * C(i, j);",
        "C(i, j) = *alpha * temp + C(i, j);",
    ),
}


def replace_once(text, old, new, where):
    if text.count(old) != 1:
        sys.exit(f"{where}: expected exactly one occurrence of {old!r}")
    return text.replace(old, new)


def main():
    root = pathlib.Path("corpus")
    for ok in sorted(root.glob("*/ok.c")):
        routine = ok.parent.name
        src = ok.read_text()
        replace_once(src, MARKER, MARKER, ok)

        guard = "  if (*n >= 29) "
        (ok.parent / "crash.c").write_text(
            src.replace(MARKER, MARKER + guard + "*(volatile int *)0 = 1;\n"))
        (ok.parent / "loop.c").write_text(
            src.replace(MARKER, MARKER + guard + "{\n    volatile int spin = 1;\n"
                        "    while (spin) {\n    }\n  }\n"))
        (ok.parent / "nomarker.c").write_text(src.replace(MARKER, ""))

        if UPLO in src:
            wrong = replace_once(src, UPLO, "int upper = 0;", ok)
        else:
            old, new = WRONG[routine]
            wrong = replace_once(src, old, new, ok)
        (ok.parent / "wrong.c").write_text(wrong)


if __name__ == "__main__":
    main()
