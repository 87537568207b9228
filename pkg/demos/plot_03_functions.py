"""
Functions with definite folds (k = 1)
=====================================

For a map N^n -> R the boundary critical points, read bottom to top, are a
word in (0,+), (0,-), (n-1,+), (n-1,-). The word fixes a handle
decomposition, and with it the diffeomorphism type of N.
"""

from foldchi import (
    CriticalSequence,
    diffeotype,
    euler_from_handles,
    generate_surface_mfunction,
    handle_decomposition,
    validate_sequence,
)

seq = CriticalSequence.parse(3, "min+ max+ min- max+ max-")
print("sequence:", seq)
print("valid:", validate_sequence(seq).ok)

handles = handle_decomposition(seq)
print("handle indices:", handles.handles, " chi =", euler_from_handles(handles))
print("diffeomorphism type:", diffeotype(seq))

# The alternative ball count gives two fewer balls. It is kept for comparison.
print("alternative count:", diffeotype(seq, "theorem_text"))

# Words that cannot come from a connected N are rejected with a reason.
for bad in ("max-", "min+ min+ max- max-", "min+ max+"):
    report = validate_sequence(CriticalSequence.parse(3, bad))
    print(f"{bad!r:>24}: {[str(v) for v in report.violations]}")

# Every compact surface with boundary carries such a function; the blocks
# below are glued bottom to top.
dec = generate_surface_mfunction(g=1, s=1, b=2)
print(" + ".join(f"{b.kind.value}({b.euler:+d})" for b in dec.blocks), "=", dec.euler)
