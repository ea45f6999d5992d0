import pytest

from perfectcodes.bitcode import LinearCode, is_perfect, rank
from perfectcodes.design import lin_nu, sts_of_code
from perfectcodes.errors import TheoryViolation
from perfectcodes.linearity import (
    check_hamming_on_linmu,
    check_linmu_subset_linnu,
    hamming_subcode_on_linmu,
    lin_mu,
    mu,
    mu_profile,
    subcode_on,
)

from conftest import brute_kernel


def brute_mu(code):
    ker = brute_kernel(code.words())
    out = [0] * (code.n + 1)
    for w in ker:
        if w.bit_count() == 3:
            for i in range(code.n):
                if w >> i & 1:
                    out[i + 1] += 1
    return out


def test_linear_codes_all_linear(h3, h7, h15):
    assert mu(h3, 1) == 1 and lin_mu(h3) == frozenset({1, 2, 3})
    assert all(mu(h7, i) == 3 for i in range(1, 8))
    assert lin_mu(h15) == frozenset(range(1, 16))


def test_vasilev_profile_against_brute(v15):
    assert list(mu_profile(v15).values[1:]) == brute_mu(v15)[1:]
    L = lin_mu(v15)
    assert L and L < frozenset(range(1, 16))
    assert any(mu(v15, i) < 7 for i in range(1, 16))


@pytest.mark.parametrize("name", ["h3", "h7", "v15"])
def test_linmu_inside_linnu(request, name):
    code = request.getfixturevalue(name)
    assert check_linmu_subset_linnu(code)
    assert lin_mu(code) <= lin_nu(sts_of_code(code))


@pytest.mark.parametrize("name", ["h3", "h7", "h15", "v15"])
def test_hamming_on_linmu(request, name):
    code = request.getfixturevalue(name)
    assert check_hamming_on_linmu(code)
    sub = hamming_subcode_on_linmu(code)
    k = len(lin_mu(code))
    assert sub.n == k and is_perfect(sub)
    assert rank(sub) == k - (k + 1).bit_length() + 1


def test_subcode_on_all_coordinates_is_the_code(h7):
    assert set(subcode_on(h7, range(1, 8)).words()) == set(h7.words())
    assert subcode_on(h7, []) is None


def test_bad_linmu_size_raises():
    # triples 123, 124, 125 span a code where only coordinates 1 and 2 reach three kernel triples
    code = LinearCode(7, [0b0000111, 0b0001011, 0b0010011])
    assert lin_mu(code) == frozenset({1, 2})
    with pytest.raises(TheoryViolation):
        check_hamming_on_linmu(code)
