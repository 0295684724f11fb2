"""
Charging every decision a verifier makes
========================================

Each primitive step of applying a move has a price: guarding the move,
swapping cells, computing offsets, relocating the cursor, undoing an
offset.  A ledger adds the prices up, and closed-form budgets cap what
any run may spend.  Staying inside the cap is what makes verification
cheap even when search is not.
"""

from tilelab import (
    MOVES,
    CostLedger,
    budget,
    exhaust_sequences,
    goal,
    instrumented_apply,
    instrumented_verify,
    length,
    new_grid,
    parse_moves,
    polytime_witness,
    solve_optimal,
)

# price of a single legal move, per arm, measured from a center blank
center = new_grid(3, (1, 2, 3, 4, 0, 5, 6, 7, 8))
print("decisions per legal move:")
for m in MOVES:
    ledger = CostLedger()
    instrumented_apply(center, m, ledger)
    print(f"  {m.letter}: {ledger.decisions}  breakdown {ledger.snapshot()}")

# an illegal move costs only its failed guard
corner = goal(2)
ledger = CostLedger()
instrumented_apply(corner, parse_moves("D")[0], ledger)
print("illegal D from the goal costs:", ledger.decisions)

# verifying a full solution stays inside the closed-form cap
start = new_grid(4, (1, 0, 2, 4,
                     5, 6, 3, 8,
                     9, 10, 7, 11,
                     13, 14, 15, 12))
seq = solve_optimal(start).seq
ledger = CostLedger()
accepted = instrumented_verify(start, seq, ledger)
cap = budget("verify", 4, len(seq))
print("\nverifier accepted:", accepted)
print("decisions spent:", ledger.decisions, "of cap", cap.ceiling)

# brute-force search pays exponentially more than verification
worst = new_grid(2, (0, 3, 2, 1))
ledger = CostLedger()
witness = exhaust_sequences(worst, 6, ledger)
cap = budget("search", 2, 6)
print("\nexhaustive search found a", len(witness), "move witness")
print("decisions spent:", ledger.decisions, "of cap", cap.ceiling)
print("verify cap at the same size:", budget("verify", 2, 6).ceiling)

# a verifier is certified cheap when its spend is polynomial in the
# non-whitespace length of the program text it checks
program = "y=3; for(i=1; i<k; i++){ y=y+i;}"
print("\nprogram:", repr(program))
print("length counts non-whitespace only:", length(program))
ledger = CostLedger()
instrumented_verify(start, seq, ledger)
print("witnessed as polynomial:",
      polytime_witness(ledger.decisions, length(program), 4, len(seq)))
