"""
Test domain value types
"""
import pytest

from app.exceptions import ComputationError, IncompatibleCaseError, InvalidOrbitError
from app.models import (
    FrobeniusOrbit,
    MultiPartition,
    OrbitTable,
    OrbitTag,
    Partition,
    QuotientKind,
    SignedTableau,
    SymmetricSpaceCase,
    Twist,
)


class TestPartition:
    def test_parse_canonical_text(self):
        """Test parsing "[3,1]" and printing it back"""
        mu = Partition.parse("[3,1]")
        assert mu.parts == (3, 1)
        assert str(mu) == "[3,1]"
        assert Partition.parse("[]") == Partition()

    def test_rejects_increasing_parts(self):
        """Test that non-partitions are rejected"""
        with pytest.raises(ComputationError):
            Partition.of(1, 2)
        with pytest.raises(ComputationError):
            Partition.of(2, 0)
        with pytest.raises(ComputationError):
            Partition.parse("[3,")

    def test_multiplicities(self):
        """Test size, length and m_i"""
        mu = Partition.of(3, 3, 1)
        assert mu.size == 7
        assert mu.length == 3
        assert mu.multiplicity(3) == 2
        assert mu.multiplicity(2) == 0
        assert not mu.is_even
        assert Partition.of(4, 2).is_even


class TestSignedTableau:
    def test_signature_counts_odd_rows_only(self):
        """Test that even rows do not contribute to the signature"""
        tableau = SignedTableau(Partition.of(2, 1, 1), ((2, 1), (1, 2)))
        assert tableau.signature == 2
        assert tableau.rows() == [(2, 1), (1, 1), (1, 1)]


class TestOrbitTable:
    def test_dual_pair_needs_mutual_partner(self):
        """Test that partners must point at each other"""
        orbits = (
            FrobeniusOrbit("a", OrbitTag.DUAL_PAIR, 1, 1, Twist.SPLIT, partner="b"),
            FrobeniusOrbit("b", OrbitTag.DUAL_PAIR, 1, 1, Twist.SPLIT, partner="c"),
            FrobeniusOrbit("c", OrbitTag.DUAL_PAIR, 1, 1, Twist.SPLIT, partner="b"),
        )
        with pytest.raises(InvalidOrbitError):
            OrbitTable(Twist.SPLIT, orbits)

    def test_self_dual_needs_even_degree(self):
        """Test that self-dual orbits other than 1 and -1 have even m"""
        with pytest.raises(InvalidOrbitError):
            OrbitTable(Twist.NONSPLIT, (FrobeniusOrbit("s", OrbitTag.SELF_DUAL, 3, 1, Twist.NONSPLIT),))

    def test_orbit_of_one(self):
        """Test that the orbit of 1 has m = 1 and d = +1"""
        with pytest.raises(InvalidOrbitError):
            OrbitTable(Twist.SPLIT, (FrobeniusOrbit("1", OrbitTag.ONE, 1, -1, Twist.SPLIT),))


class TestMultiPartition:
    def test_degree_and_empty_parts(self, split_table):
        """Test n = sum m |rho| and that empty assignments are dropped"""
        rho = MultiPartition.build(split_table, {"one": Partition.of(2), "sd": Partition.of(1, 1), "a": Partition()})
        assert rho.n == 2 + 2 * 2
        assert rho.support == ("one", "sd")
        assert rho["a"] == Partition()
        assert rho.tagged(OrbitTag.MINUS_ONE) == Partition()

    def test_unknown_orbit(self, split_table):
        """Test assigning to an orbit that is not in the table"""
        with pytest.raises(InvalidOrbitError):
            MultiPartition.build(split_table, {"nope": Partition.of(1)})


class TestSymmetricSpaceCase:
    def test_from_key(self):
        """Test building cases from their keys"""
        case = SymmetricSpaceCase.from_key("u-uu", 3, 2, 1)
        assert case.kind is QuotientKind.LEVI
        assert case.twist is Twist.NONSPLIT
        assert case.signature == 1

    @pytest.mark.parametrize(
        "key,n,kwargs",
        [
            ("gl-sp", 3, {}),
            ("u-uq4", 5, {}),
            ("gl-glgl", 3, {"n_plus": 1, "n_minus": 1}),
            ("gl-o", 4, {}),
            ("gl-o", 3, {"epsilon": 1}),
            ("gl-sp", 2, {"special": True}),
        ],
    )
    def test_invalid_parameters(self, key, n, kwargs):
        """Test parity and parameter checks"""
        with pytest.raises(IncompatibleCaseError):
            SymmetricSpaceCase.from_key(key, n, **kwargs)

    def test_unknown_key(self):
        """Test an unknown case key"""
        with pytest.raises(IncompatibleCaseError):
            SymmetricSpaceCase.from_key("gl-xyz", 2)
