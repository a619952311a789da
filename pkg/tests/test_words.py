import random

import pytest

from coxwords.field import context_for
from coxwords.heaps import HeapWord, fc_reduced, find_pattern_chain, \
    witness_with_block
from coxwords.system import INF, build_system, named_system, parse_word
from coxwords.words import (
    Band, CapExceeded, Outcome, Reason, braid_closure, canonical_form,
    commutation_class, cyclic_shifts, decide_logarithmic, detect_bands,
    is_cfc, is_cyclically_reduced, is_fc, is_fc_brute, is_full_support,
    is_torsion_free, support,
)
from helpers import naive_commutation_class, naive_is_fc, random_word

A2 = named_system("A2")
A3 = named_system("A3")
AFFA2 = named_system("affA2")
AFFC2 = named_system("affC2")
AFFC4 = named_system("affC4")
AFFE6 = named_system("affE6")
H3 = named_system("H3")

E6_WORD = parse_word(AFFE6, "1 3 2 4 3 5 4 6 0 3 2 6")


def test_cyclic_shifts():
    w = parse_word(A3, "2 1 3 2")
    shifts = cyclic_shifts(w)
    assert len(shifts) == 4
    assert shifts[1] == parse_word(A3, "1 3 2 2")
    ww = (0, 1) * 3
    assert cyclic_shifts(ww)[2] == ww  # palindromic power returns to itself


def test_commutation_class_examples():
    assert commutation_class(A3, (0, 2)) == {(0, 2), (2, 0)}
    assert commutation_class(A2, (0, 1)) == {(0, 1)}
    w = parse_word(A3, "2 1 3 2")
    assert commutation_class(A3, w) == {w, parse_word(A3, "2 3 1 2")}
    with pytest.raises(CapExceeded):
        commutation_class(named_system("D4"), (0, 2, 3) * 3, cap=4)


def test_commutation_class_matches_naive():
    rng = random.Random(2718)
    for system in (A3, AFFC2, named_system("B3"), named_system("D4")):
        for _ in range(40):
            w = random_word(rng, system.rank, rng.randint(0, 7))
            assert commutation_class(system, w) == \
                naive_commutation_class(system, w)


def test_canonical_form():
    w = parse_word(A3, "2 3 1 2")
    assert canonical_form(A3, w) == parse_word(A3, "2 1 3 2")
    rng = random.Random(14)
    for system in (A3, AFFC4):
        for _ in range(30):
            w = random_word(rng, system.rank, rng.randint(0, 8))
            cls = commutation_class(system, w)
            forms = {canonical_form(system, u) for u in cls}
            assert len(forms) == 1
            assert forms.pop() in cls


def test_is_fc_examples():
    assert is_fc(A3, parse_word(A3, "2 1 3 2"))
    assert not is_fc(AFFA2, (0, 2, 0, 1))  # s1 s3 s1 s2 has a braid block
    modified = AFFA2.with_bond(0, 2, INF)
    assert is_fc(modified, (0, 2, 0, 1))
    assert not is_fc(A2, (0, 0))
    assert is_fc(A2, ())


def test_is_fc_matches_brute_oracle():
    rng = random.Random(5)
    systems = [A3, AFFA2, AFFC2, H3, named_system("B3"), named_system("D4")]
    for _ in range(300):
        system = rng.choice(systems)
        w = random_word(rng, system.rank, rng.randint(0, 8))
        assert is_fc(system, w) == is_fc_brute(system, w)
        assert is_fc(system, w) == naive_is_fc(system, w)


def test_is_cyclically_reduced_examples():
    assert not is_cyclically_reduced(A3, context_for(A3),
                                     parse_word(A3, "2 1 3 2"))
    assert is_cyclically_reduced(AFFA2, context_for(AFFA2), (0, 2, 0, 1))
    assert is_cyclically_reduced(A2, context_for(A2), (0,))
    with pytest.raises(ValueError):
        is_cyclically_reduced(A2, context_for(A2), (0, 0))


def test_is_cfc_examples():
    # any Coxeter element is CFC
    for system in (A3, AFFC4, H3):
        assert is_cfc(system, tuple(system.generators()))
    modified = AFFA2.with_bond(0, 2, INF)
    assert not is_cfc(modified, (0, 2, 0, 1))
    assert is_cfc(AFFE6, E6_WORD)
    assert not is_cfc(A3, parse_word(A3, "2 1 3 2"))


def test_is_cfc_exhaustive_agrees():
    rng = random.Random(23)
    systems = [A3, AFFA2, AFFC2, H3, named_system("B3")]
    checked = 0
    for _ in range(250):
        system = rng.choice(systems)
        w = random_word(rng, system.rank, rng.randint(0, 7))
        if not is_fc(system, w):
            continue
        checked += 1
        assert is_cfc(system, w) == is_cfc(system, w, exhaustive=True)
    assert checked >= 60


def test_braid_closure_matsumoto():
    ctx = context_for(A3)
    from coxwords.roots import equal_elements, is_reduced
    for w in [(0, 1, 0), (0, 1, 2, 0, 1), parse_word(A3, "2 1 3 2")]:
        closure = braid_closure(A3, w)
        assert all(len(u) == len(w) for u in closure)
        assert all(is_reduced(A3, ctx, u) for u in closure)
        assert all(equal_elements(A3, ctx, u, w) for u in closure)
    # the two long braids of I2(4)
    i24 = named_system("I2(4)")
    assert braid_closure(i24, (0, 1, 0, 1)) == {(0, 1, 0, 1), (1, 0, 1, 0)}


def test_support_and_torsion_free():
    assert support(E6_WORD) == frozenset(range(7))
    assert is_full_support(AFFE6, E6_WORD)
    assert is_torsion_free(AFFE6, E6_WORD)
    assert not is_torsion_free(A3, (0, 1, 2))
    assert is_torsion_free(AFFC2, parse_word(AFFC2, "0 1 0 1 2"))
    # mixed support: one finite component, one infinite
    mixed = build_system([(0, 1, INF), (2, 3, 3)], 4)
    assert not is_torsion_free(mixed, (0, 1, 2, 3))
    assert is_torsion_free(mixed, (0, 1))


def test_detect_bands_examples():
    bands = detect_bands(A3, (0, 1, 2))
    pairs = {frozenset((b.s, b.t)) for b in bands}
    assert pairs == {frozenset((0, 1)), frozenset((1, 2))}
    assert all(not b.is_large and b.strength == 3 for b in bands)

    assert detect_bands(AFFE6, E6_WORD) == []

    bands = detect_bands(H3, (0, 1, 0, 1, 2))
    assert {frozenset((b.s, b.t)) for b in bands} == {frozenset((0, 1))}
    assert all(b.is_large and b.strength == 5 and b.s == 0 for b in bands)
    with pytest.raises(ValueError):
        detect_bands(A3, parse_word(A3, "2 1 3 2"))  # not CFC


def test_band_witness_structure():
    for system, w in [(A3, (0, 1, 2)), (H3, (0, 1, 0, 1, 2)),
                      (named_system("B3"), (0, 1, 2))]:
        for b in detect_bands(system, w):
            k, witness = b.witness
            assert sorted(witness) == sorted(cyclic_shifts(w)[k])
            # the alternating block is a consecutive subword of the witness
            m = b.strength
            first = b.s if b.direction == "st" else b.t
            second = b.t if b.direction == "st" else b.s
            block = tuple(first if i % 2 == 0 else second
                          for i in range(m - 1))
            assert any(witness[i:i + m - 1] == block
                       for i in range(len(witness) - m + 2))
            # letter multiplicities: block letters never appear elsewhere
            assert w.count(b.s) == block.count(b.s)
            assert w.count(b.t) == block.count(b.t)


def test_pattern_chain_search_matches_naive():
    from helpers import contains_block
    rng = random.Random(808)
    systems = [A3, H3, named_system("B3"), AFFC2]
    for _ in range(300):
        system = rng.choice(systems)
        w = random_word(rng, system.rank, rng.randint(2, 7))
        h = HeapWord.of(system, w)
        a, b = rng.sample(range(system.rank), 2)
        if system.bond(a, b) == 2:  # block search needs noncommuting letters
            continue
        r = rng.randint(2, 4)
        block = tuple(a if i % 2 == 0 else b for i in range(r))
        chain = find_pattern_chain(h, a, b, r)
        assert (chain is not None) == contains_block(system, w, block)
        if chain is not None:
            witness = witness_with_block(h, chain)
            assert witness in naive_commutation_class(system, w)
            assert any(witness[i:i + r] == block
                       for i in range(len(witness) - r + 1))


def test_decide_logarithmic_examples():
    v = decide_logarithmic(AFFE6, context_for(AFFE6), E6_WORD)
    assert v.outcome is Outcome.LOGARITHMIC
    assert v.reason is Reason.CFC_NO_LARGE_BANDS

    w = parse_word(AFFC2, "0 1 0 1 2")
    v = decide_logarithmic(AFFC2, context_for(AFFC2), w)
    assert v.outcome is Outcome.NOT_LOGARITHMIC
    assert v.reason is Reason.BOUNDED_CHECK_FAILED and v.k == 2

    for text in ["0 1 2 3 4 3 2 1", "0 2 4 1 3"]:
        v = decide_logarithmic(AFFC4, context_for(AFFC4), parse_word(AFFC4, text))
        assert v.outcome is Outcome.LOGARITHMIC

    # not cyclically reduced
    v = decide_logarithmic(A3, context_for(A3), parse_word(A3, "2 1 3 2"))
    assert v.outcome is Outcome.NOT_LOGARITHMIC
    assert v.reason is Reason.NOT_CYCLICALLY_REDUCED

    # cyclically reduced but finite support
    v = decide_logarithmic(A3, context_for(A3), (0, 1, 2))
    assert v.outcome is Outcome.NOT_LOGARITHMIC
    assert v.reason is Reason.NOT_TORSION_FREE

    # torsion-free CFC with a large band: deliberately unknown
    sysx = build_system([(0, 1, 5), (1, 2, 3), (2, 3, INF)], 4)
    wx = (0, 1, 0, 1, 2, 3)
    assert is_cfc(sysx, wx)
    bands = detect_bands(sysx, wx)
    assert any(b.is_large for b in bands)
    v = decide_logarithmic(sysx, context_for(sysx), wx, bound=4)
    assert v.outcome is Outcome.UNKNOWN
    assert v.reason is Reason.BOUNDED_CHECK_INCONCLUSIVE and v.k == 4


def test_decide_logarithmic_requires_reduced():
    with pytest.raises(ValueError):
        decide_logarithmic(A2, context_for(A2), (0, 0))
