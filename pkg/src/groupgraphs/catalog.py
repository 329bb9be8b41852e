"""The built-in catalog of groups the verification suite runs over.

It is chosen so that every checked criterion has both a satisfying and a
violating instance where one exists.
"""

BUILTIN_CATALOG = (
    [f"C{n}" for n in range(1, 17)]
    + ["EA(2,2)", "EA(2,3)"]
    + [f"D{n}" for n in range(3, 9)]
    + ["Q8", "Q16", "Q32", "S3", "S4", "S5", "A4", "A5", "SL(2,3)", "Heis(3)", "Heis(5)",
       "SNNC(2,2,1)", "SNNC(2,2,2)", "SNNC(3,1,1)", "SNNC(3,2,1)", "SNNC(5,1,1)",
       "x(Q8,C2)", "x(Q8,C3)", "x(D4,C2)"]
)


def catalog_orders() -> list[tuple[str, int]]:
    from .groupspec import make_family

    return [(spec, make_family(spec).order) for spec in BUILTIN_CATALOG]
