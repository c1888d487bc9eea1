#!/usr/bin/env python3
"""Print the mod-3 circuit's intermediate states and the final Gram matrix.

Traces |psi1> .. |psi4> for all eight 3-bit inputs with exact algebraic
amplitudes, then prints the 8x8 Gram matrix of final states and checks
it against both sign-vector closed forms.
"""

import sys

from qmodw.fixtures import STATE_TABLE_ORDER
from qmodw.linalg import format_state_table
from qmodw.subroutines import (
    ALL_3BIT, gram_closed_form, gram_matrix, signs_of, trace_mod3,
)


def main() -> int:
    traces = {bits: trace_mod3(bits) for bits in STATE_TABLE_ORDER}
    columns = {bits: traces[bits].as_list() for bits in STATE_TABLE_ORDER}
    print(format_state_table(columns, [f"psi{i}" for i in range(1, 5)]))

    print("\nGram matrix of final states (rows/cols in lexicographic "
          "input order, entries doubled):")
    gram = gram_matrix()
    for row in gram:
        print("  ".join(f"{int(e.as_rational() * 2):3d}" for e in row))

    bad = 0
    for xi, x in enumerate(ALL_3BIT):
        for yi, y in enumerate(ALL_3BIT):
            for variant in ("48", "16"):
                if gram_closed_form(signs_of(x), signs_of(y),
                                    variant) != gram[xi][yi]:
                    bad += 1
    print(f"\nclosed-form check: {128 - bad}/128 evaluations agree")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
