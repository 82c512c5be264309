"""
Test the symmetric-group identity suite
"""
import pytest

from app.exceptions import BoundExceededError, ComputationError, UnknownNameError
from app.models import Partition
from app.services.identity_service import (
    CLOSED_FORM_FAMILIES,
    IDENTITIES,
    IdentityCase,
    check_identity,
    closed_form_enumeration,
    multiplicative_closed_form,
    signature_classes,
)


class TestIdentities:
    def test_registry(self):
        """Test that all eleven identities are registered"""
        assert len(IDENTITIES) == 11
        assert {name for name, identity in IDENTITIES.items() if identity.signed} == {"glnglngln", "ununun"}

    def test_ff_inv_small_case(self):
        """Test both sides of the fixed-point-free identity at (1,1)"""
        result = check_identity(IdentityCase("ff-inv", Partition.of(1, 1)))
        assert (result.lhs, result.rhs) == (1, 1)

    def test_levi_identity_counts_double_cosets(self):
        """Test the signed identity at (1,1) with signature 0"""
        result = check_identity(IdentityCase("glnglngln", Partition.of(1, 1), 0))
        assert result.lhs == result.rhs == 3

    def test_signed_identity_needs_signature(self):
        """Test that a signed identity requires a signature class"""
        with pytest.raises(ComputationError):
            check_identity(IdentityCase("ununun", Partition.of(2)))

    def test_unknown_identity(self, identity_service):
        """Test an unknown identity name"""
        with pytest.raises(UnknownNameError):
            list(identity_service.cases(["no-such-identity"]))

    def test_signature_classes(self):
        """Test the signature classes of size 3"""
        assert signature_classes(3) == [-3, -1, 1, 3]

    def test_full_suite(self, identity_service):
        """Test every identity over every case within the default bounds"""
        results = identity_service.run_suite()
        failures = [r for r in results if not r.equal]
        assert results
        assert failures == []

    def test_bound(self, identity_service, test_settings):
        """Test the plain identity bound"""
        nu = Partition.of(test_settings.identity_plain_bound + 1)
        with pytest.raises(BoundExceededError):
            identity_service.check_identity(IdentityCase("ff-inv", nu))

    def test_max_size_over_bound(self, identity_service, test_settings):
        """Test max_size above the plain or signed bound raises instead of being clipped"""
        with pytest.raises(BoundExceededError):
            list(identity_service.cases(["ff-inv"], test_settings.identity_plain_bound + 1))
        with pytest.raises(BoundExceededError):
            list(identity_service.cases(["glnglngln"], test_settings.identity_signed_bound + 1))
        assert len(list(identity_service.cases(["ff-inv"], 2))) == 4


class TestClosedForms:
    @pytest.mark.parametrize("family", sorted(CLOSED_FORM_FAMILIES))
    def test_rectangles(self, family):
        """Test (a^b) closed forms against enumeration for a*b <= 12"""
        for a in range(1, 13):
            for b in range(1, 12 // a + 1):
                nu = Partition((a,) * b)
                value = multiplicative_closed_form(nu, family)
                assert closed_form_enumeration(nu, family) == (value, value)

    def test_mixed_parts(self):
        """Test multiplicativity over distinct parts"""
        nu = Partition.of(3, 2, 2, 1, 1)
        for family in CLOSED_FORM_FAMILIES:
            value = multiplicative_closed_form(nu, family)
            assert closed_form_enumeration(nu, family) == (value, value)

    def test_unknown_family(self):
        """Test an unknown closed-form family"""
        with pytest.raises(UnknownNameError):
            multiplicative_closed_form(Partition.of(2), "odd-fixed")
