#!/usr/bin/env python3
"""Smoke test for the fibnum_py extension module.

Build the module and place it on the path first, e.g.:

    cargo build --release -p fibnum-py
    cp target/release/libfibnum_py.so python/fibnum_py.so
    python3 python/smoke_test.py
"""

import sys

import fibnum_py as fn


def main() -> int:
    # numeration oracles
    assert fn.zeck_encode(17) == [1, 0, 1, 0, 0, 1]
    assert fn.decode([1, 0, 1, 0, 0, 1]) == 17
    assert fn.cg_encode(5) == [2, 0, 1]
    assert fn.cg_encode(8) == [0, 0, 0, 0, 1]
    assert fn.phi_floor(10) == 16
    assert fn.zeck_valid([1, 0, 1]) and not fn.zeck_valid([1, 1])
    assert fn.cg_valid([2, 0, 1]) and not fn.cg_valid([2, 0, 2])
    assert fn.cg_split([2, 0, 1]) == ([1, 0, 0], [1, 0, 1])

    # synthesized automata and their expected state counts
    cgadd = fn.synth("cgadd")
    assert cgadd.live_states == 33, cgadd.live_states
    assert fn.synth("cgrep").live_states == 42

    # relation application: 5 + 3 = 8 in Chung-Graham digits
    assert cgadd.apply([[2, 0, 1], [0, 0, 1], None]) == [[0, 0, 0, 0, 1]]

    # engine algebra round-trips
    cgval = fn.synth("cgval")
    assert cgval.accepts([[2, 0, 1]])
    assert not cgval.accepts([[2, 0, 2]])
    assert cgval.complement().complement().equivalent(cgval)
    reparsed = fn.Automaton.from_native(cgval.to_native())
    assert reparsed.equivalent(cgval)
    assert cgval.to_dot("cgval").startswith("digraph cgval {")
    assert cgval.intersect(cgval.complement()).is_empty()

    # reduced verification sweep
    ok, lines = fn.run_verification(max_n=20)
    assert ok, "\n".join(lines)
    assert lines[-1].startswith("PASSED ")

    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
