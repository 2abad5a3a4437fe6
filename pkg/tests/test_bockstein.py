from ellstab.bockstein import (_Column, base_class_vector, bss_differential,
                               compare_einf, phi_on_associated_graded, run_bss,
                               targets_agree)
from ellstab.grpcoh import cohomology_dims


def test_key_differentials():
    # d1(u^-1) = v1 h11
    col = _Column("q8", 2, 14, 4)
    r, tgt = bss_differential(col, 0, base_class_vector(col, 0, 0))
    assert r == 1
    h11_off = len(col.slots[1][0])
    assert [i for i, v in enumerate(tgt) if v] == [h11_off + 1]
    # d1(u^-3) = u^-2 v1 h11
    col6 = _Column("q8", 6, 14, 4)
    r, tgt = bss_differential(col6, 0, base_class_vector(col6, 0, 0))
    assert r == 1 and [i for i, v in enumerate(tgt) if v] == [h11_off + 1]
    # d2(u^-2) = v1^2 h10
    col4 = _Column("q8", 4, 14, 4)
    r, tgt = bss_differential(col4, 0, base_class_vector(col4, 0, 0))
    assert r == 2 and [i for i, v in enumerate(tgt) if v] == [2]
    # d2(u^-3 h10) = u^-1 v1^2 h10^2
    r, tgt = bss_differential(col6, 1, base_class_vector(col6, 1, 0))
    assert r == 2 and [i for i, v in enumerate(tgt) if v] == [2]


def test_unit_class_permanent():
    col = _Column("q8", 0, 12, 4)
    r, tgt = bss_differential(col, 0, base_class_vector(col, 0, 0))
    assert r is None


def test_lift_independence():
    import random
    rng = random.Random(5)
    col = _Column("q8", 4, 14, 4)
    base = base_class_vector(col, 0, 0)
    r0, t0 = bss_differential(col, 0, base)
    for _ in range(6):
        pert = [0] * col.dim(0)
        for i, e in enumerate(col.degs[0]):
            if e >= 1 and rng.random() < 0.4:
                pert[i] = rng.randrange(4)
        r, t = bss_differential(col, 0, base, perturb=pert)
        assert r == r0 and targets_agree(col, 0, r0, t0, t)


def test_einf_q8_matches():
    st = run_bss("q8", s_max=8, t_min=-16, t_max=16, b=12)
    assert compare_einf(st) == []


def test_einf_v_matches():
    st = run_bss("v", s_max=3, t_min=-16, t_max=16, b=12)
    assert compare_einf(st) == []


def test_column_sums_equal_cohomology():
    st = run_bss("q8", s_max=6, t_min=-8, t_max=8, b=12)
    q = cohomology_dims("q8", s_max=6, t_min=-8, t_max=8, b=12)
    for t in range(-8, 9, 2):
        for s in range(7):
            assert st.column_sum(s, t) == q.dim(s, t), (s, t)


def test_internal_periodicity():
    st = run_bss("q8", s_max=4, t_min=-16, t_max=16, b=10)
    for s in range(5):
        for t in range(-16, 9, 2):
            for w in range(10):
                assert st.einf.get((s, t, w), 0) == st.einf.get((s, t + 8, w), 0)


def test_pages_monotone_and_stabilize():
    col = _Column("q8", 4, 12, 4)
    for s in (0, 1, 2):
        for w in (0, 1, 2):
            dims = [col.page_dim(s, w, r) for r in range(1, 6)]
            assert all(dims[i] >= dims[i + 1] for i in range(len(dims) - 1))
            assert dims[-1] == col.einf_dim(s, w)


def test_phi_graded_map():
    out = phi_on_associated_graded(3, -8, 8, 12)
    da4, dg24, rank = out[(0, 0)]
    assert da4 == dg24 == rank
    assert out[(1, 0)][2] >= 1
