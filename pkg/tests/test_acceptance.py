"""Acceptance gate: the ten criteria, each at its stated tolerance and
runtime budget, one printed line per criterion."""

import time

import pytest

from ellstab.checks import REGISTRY
from ellstab.schemas import RunConfig

_BY_ID = {d.check_id: d for d in REGISTRY}

CRITERIA = [
    ("1", "supersingular [-2] = x^4 and the sixteen addition monomials",
     ["fgl.fc.minus_two_x4", "fgl.fc.addition_monomials"], 1.0),
    ("2", "Catalan coordinate series and integral [-2] closed form",
     ["fgl.cz.w_catalan", "fgl.cz.minus_two"], 1.0),
    ("3", "universal-curve [-2]: closed form, Taylor head, mod-2 form",
     ["fgl.cu.closed_vs_chain", "fgl.cu.taylor_head", "fgl.cu.mod2_form"], 5.0),
    ("4", "lift-coefficient congruence suite: named digits and 20 random triples",
     ["action.appendix_alpha_digits", "action.appendix_random_triples"], 120.0),
    ("5", "alpha-specific: cube-support, t0 shape, pi and alpha^2 triviality",
     ["action.alpha_c3fix", "action.alpha_t0_shape",
      "action.pi_trivial_mod_2u13", "action.alpha_sq_trivial"], 30.0),
    ("6", "the printed lift tuple satisfies all five coefficient relations",
     ["action.weier_f_i"], 1.0),
    ("7", "resolutions: d o d = 0, acyclicity in degrees 1..8, chain map",
     ["coh.resolutions_d_squared", "coh.resolutions_acyclic",
      "coh.chain_map_commutes"], 10.0),
    ("8", "cohomology windows match the independent enumerations",
     ["coh.c6_window", "coh.g24_window", "coh.a4_window"], 120.0),
    ("9", "filtration spectral sequence: key differentials, tables, column sums",
     ["bss.key_differentials", "bss.einf_q8", "bss.einf_v", "bss.column_sums"],
     120.0),
    ("10", "duality-resolution differential checks under the stated ideals",
     ["adrss.partial0_family", "adrss.c4_16_divisibility", "adrss.delta_alpha",
      "adrss.g24_fixes_alpha_delta", "adrss.d123_v13_divisible", "adrss.x0_sum",
      "adrss.tp2_leading_term"], 180.0),
]


@pytest.mark.parametrize("num,desc,ids,budget", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(num, desc, ids, budget):
    cfg = RunConfig()
    t0 = time.monotonic()
    failures = []
    for cid in ids:
        status, computed, expected, idl = _BY_ID[cid].fn(cfg)
        if status != "pass":
            failures.append((cid, computed, expected, idl))
    elapsed = time.monotonic() - t0
    verdict = "PASS" if not failures and elapsed < budget else "FAIL"
    print(f"ACCEPTANCE {num}: {verdict} ({elapsed:.1f}s / {budget:.0f}s) {desc}")
    assert not failures, failures
    assert elapsed < budget, f"criterion {num} exceeded {budget}s: {elapsed:.1f}s"
