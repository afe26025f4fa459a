"""Acceptance gate: the twelve exact-identity criteria with time budgets.

Every numeric comparison is exact scalar equality in Q(zeta_N); the time
limits are part of the contract and are asserted with a monotonic clock.
"""

import subprocess
import sys
import time

import pytest

from qkirby import corpus, hopf, invariants as inv
from qkirby.cyclotomic import named_constants
from qkirby.sl2 import RESTRICTED, SMALL, TILDE, quantum_group


def run_section(fn, *args):
    rep = inv.Report("acceptance section")
    fn(rep, *args)
    assert rep.ok, rep.failures
    return rep


def timed(limit_seconds):
    start = time.monotonic()

    def check():
        elapsed = time.monotonic() - start
        assert elapsed < limit_seconds, (
            "took %.1fs, budget %.0fs" % (elapsed, limit_seconds))

    return check


def test_01_gauss_sums_exact():
    done = timed(5)
    for p in (2, 3, 4, 5, 6):
        run_section(inv._check_scalars, p)
    done()


def test_02_axiom_suites_p2():
    done = timed(120)
    run_section(inv._check_axioms, 2)
    done()


def test_02_axiom_suites_p4():
    done = timed(900)
    run_section(inv._check_axioms, 4)
    done()


def test_03_oracle_equivalences():
    done = timed(600)
    for p in (2, 3, 4):
        run_section(inv._check_oracles, p)
    for p in (2, 4):
        run_section(inv._check_graded_forms, p)
    done()


def test_04_framed_unknot_value_table():
    for p in (2, 4):
        run_section(inv._check_lambda_table, p)


def test_05_move_invariance_both_variants():
    done = timed(60)
    rep = run_section(inv._check_gk_moves, 2)
    # at least six move pairs, each checked in both variants
    graded = [c for c in rep.checks if c[0].startswith("graded invariance")]
    small = [c for c in rep.checks if c[0].startswith("small-variant")]
    assert len(graded) >= 6 and len(small) >= 6
    done()


def test_06_restricted_membership_on_corpus():
    run_section(inv._check_membership, 2)


def test_07_small_variant_agreement():
    for p in (2, 4):
        rep = run_section(inv._check_restricted_vs_small, p)
        names = [c[0] for c in rep.checks]
        assert any("sqrt(p/2) normalization" in n for n in names)


def test_08_published_bundle_values():
    for p in (2, 4):
        run_section(inv._check_published_values, p)


def test_09_decomposition_identities():
    done = timed(600)
    for p in (2, 4):
        rep = run_section(inv._check_decomposition, p)
        names = [c[0] for c in rep.checks]
        dotted = [n for n in names if "dot" in n]
        dotfree = [n for n in names if "dot" not in n]
        assert len(dotted) >= 2 if p == 4 else len(dotted) >= 3
        assert len(dotfree) >= 3
    done()


def test_10_rescaling_law():
    rep = run_section(inv._check_rescaling, 2)
    names = [c[0] for c in rep.checks if c[0].startswith("rescaling by")]
    assert len(names) >= 12  # three scalars on at least four diagrams
    assert any("dot_cancel" in n for n in names)


def test_11_stabilization_identity():
    for p in (2, 4):
        one = named_constants(p).ctx.one
        assert inv.stabilization_identity(p) == one
        run_section(inv._check_stabilization, p)


def test_12_cli_verify_p2():
    done = timed(300)
    proc = subprocess.run(
        [sys.executable, "-m", "qkirby.cli", "verify", "--p", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "0 failed" in proc.stdout
    done()
