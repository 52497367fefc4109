import math
import random

import pytest

from groupvc import make_cyclic, translate_family, vc_dim
from groupvc.cayley import neighborhood_family
from groupvc.residues import (
    is_prime,
    paley_digraph,
    power_residues,
    residue_cayley_digraph,
    residue_experiment,
)


def _sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            for j in range(i * i, limit + 1, i):
                flags[j] = False
    return [i for i, f in enumerate(flags) if f]


class TestIsPrime:
    def test_small_cases(self):
        assert is_prime(2)
        assert not is_prime(1)
        assert not is_prime(0)

    def test_carmichael_numbers_rejected(self):
        for n in (561, 1105, 1729, 2465, 2821, 6601):
            assert not is_prime(n)

    def test_agrees_with_sieve(self):
        primes = set(_sieve(5000))
        for n in range(5000):
            assert is_prime(n) == (n in primes)

    def test_large_values(self):
        assert is_prime((1 << 61) - 1)  # Mersenne prime
        assert not is_prime((1 << 62) + 1)
        with pytest.raises(ValueError):
            is_prime(1 << 63)
        with pytest.raises(ValueError):
            is_prime(-3)


class TestPowerResidues:
    def test_quadratic_mod_5(self):
        assert sorted(power_residues(5, 2).members) == [1, 4]

    def test_cubic_mod_13(self):
        rs = power_residues(13, 3)
        assert sorted(rs.members) == [1, 5, 8, 12]
        assert len(rs) == (13 - 1) // 3

    def test_exponent_reduces_by_gcd(self):
        rs = power_residues(7, 5)
        assert sorted(rs.members) == [1, 2, 3, 4, 5, 6]
        assert rs.effective_exponent == 1

    def test_rejects_composite_modulus(self):
        with pytest.raises(ValueError):
            power_residues(15, 2)

    def test_cardinality_formula(self):
        for n in _sieve(300):
            for r in (2, 3, 4, 5):
                assert len(power_residues(n, r)) == (n - 1) // math.gcd(r, n - 1)

    def test_gcd_reduction_same_set(self):
        rnd = random.Random(6)
        for _ in range(25):
            n = rnd.choice(_sieve(200)[1:])
            r = rnd.randint(2, 12)
            assert (
                power_residues(n, r).members
                == power_residues(n, math.gcd(r, n - 1)).members
            )

    def test_zero_never_a_residue(self):
        for n in (3, 11, 97):
            assert 0 not in power_residues(n, 2).members


class TestPaley:
    def test_neighborhood_of_zero(self):
        assert sorted(paley_digraph(5).adjacency[0]) == [1, 4]

    def test_vc_dimension_of_paley_5(self):
        assert vc_dim(neighborhood_family(paley_digraph(5))) == 2

    def test_paley_3_is_directed_cycle(self):
        d = paley_digraph(3)
        assert [sorted(nb) for nb in d.adjacency] == [[1], [2], [0]]

    def test_edge_symmetry_by_residue_class(self):
        # n = 1 mod 4: -1 is a QR, edges symmetric; n = 3 mod 4: antisymmetric
        for n in (13, 17):
            d = paley_digraph(n)
            for u in range(n):
                for v in d.adjacency[u]:
                    assert u in d.adjacency[v]
        for n in (7, 11, 19):
            d = paley_digraph(n)
            for u in range(n):
                for v in d.adjacency[u]:
                    if u != v:
                        assert u not in d.adjacency[v]

    def test_vc_bound(self):
        for n in (5, 7, 11, 13, 17, 23):
            value = vc_dim(neighborhood_family(paley_digraph(n)))
            assert 0 <= value <= math.floor(math.log2(n))


class TestResidueExperiment:
    def test_paley_5_record(self):
        recs = residue_experiment([5], 2)
        assert len(recs) == 1
        rec = recs[0]
        assert rec.vcdim == 2
        assert rec.N == 5 and rec.r == 2.0
        assert abs(rec.vcdim / rec.log_r_N - 2 / math.log2(5)) < 1e-12

    def test_congruence_filter(self):
        # 13 = 1 mod 3 accepted; 7 with r=5 rejected; 11 with r=5 accepted
        recs = residue_experiment([13], 3, require_congruence=True)
        assert recs[0].vcdim is not None
        recs = residue_experiment([7, 11], 5, require_congruence=True)
        by_n = {r.N: r for r in recs}
        assert by_n[7].error == "congruence" and by_n[7].vcdim is None
        assert by_n[11].vcdim is not None

    def test_rejects_composites_and_large_primes(self):
        with pytest.raises(ValueError):
            residue_experiment([9], 2)
        with pytest.raises(ValueError):
            residue_experiment([1013], 2)  # above the default desk-scale cap

    def test_sorted_and_deterministic(self):
        recs1 = residue_experiment([13, 5, 11], 2)
        recs2 = residue_experiment([5, 11, 13], 2)
        assert recs1 == recs2
        assert [r.N for r in recs1] == [5, 11, 13]

    def test_residue_graph_uses_power_residues(self):
        d = residue_cayley_digraph(13, 3)
        assert sorted(d.adjacency[0]) == [1, 5, 8, 12]

    def test_matches_direct_translate_computation(self):
        for n, r in ((11, 2), (13, 3), (17, 2)):
            rec = residue_experiment([n], r)[0]
            direct = vc_dim(
                translate_family(make_cyclic(n), power_residues(n, r).members)
            )
            assert rec.vcdim == direct
