"""Determinism and distribution sanity for the seeded generator."""

from hypercut import DEFAULT_SEED, SplitMix64, derive_seed


def test_same_seed_same_stream():
    a = SplitMix64(123)
    b = SplitMix64(123)
    assert [a.next_u64() for _ in range(50)] == [b.next_u64() for _ in range(50)]


def test_different_seeds_diverge():
    a = SplitMix64(1)
    b = SplitMix64(2)
    assert [a.next_u64() for _ in range(10)] != [b.next_u64() for _ in range(10)]


def test_u64_range():
    g = SplitMix64(7)
    for _ in range(1000):
        v = g.next_u64()
        assert 0 <= v < 2**64


def test_randrange_bounds_and_coverage():
    g = SplitMix64(0)
    seen = set()
    for _ in range(500):
        v = g.randrange(7)
        assert 0 <= v < 7
        seen.add(v)
    assert seen == set(range(7))


def test_randrange_rejects_nonpositive():
    g = SplitMix64(0)
    for bad in (0, -3):
        try:
            g.randrange(bad)
        except ValueError:
            continue
        raise AssertionError("expected ValueError")


def test_random_unit_interval():
    g = SplitMix64(99)
    xs = [g.random() for _ in range(2000)]
    assert all(0.0 <= x < 1.0 for x in xs)
    # crude uniformity: mean of U(0,1) is 0.5
    assert abs(sum(xs) / len(xs) - 0.5) < 0.05


def test_choice_and_shuffle_deterministic():
    g1 = SplitMix64(5)
    g2 = SplitMix64(5)
    pool = list(range(20))
    assert [g1.choice(pool) for _ in range(10)] == [g2.choice(pool) for _ in range(10)]
    a, b = list(range(30)), list(range(30))
    g1.shuffle(a)
    g2.shuffle(b)
    assert a == b
    assert sorted(a) == list(range(30))


def test_sample_distinct():
    g = SplitMix64(11)
    for _ in range(200):
        picked = g.sample_distinct(10, 4)
        assert len(picked) == 4
        assert len(set(picked)) == 4
        assert all(0 <= x < 10 for x in picked)
    try:
        g.sample_distinct(3, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_derive_seed_spreads_streams():
    base = DEFAULT_SEED
    seeds = {derive_seed(base, k) for k in range(100)}
    assert len(seeds) == 100
    assert derive_seed(base, 3) == derive_seed(base, 3)
