import json
from fractions import Fraction

import pytest

from optsl2.cochar import Cocharacter
from optsl2.errors import DomainError
from optsl2.jordan import jordan_block
from optsl2.literals import (additive_from_literal, additive_to_literal,
                             cochar_from_literal, cochar_to_literal,
                             domain_from_literal, domain_to_literal,
                             mat_from_literal, mat_to_literal,
                             scalar_from_literal, scalar_to_literal,
                             springer_from_literal, springer_to_literal)
from optsl2.matrices import Mat
from optsl2.scalars import Fp, QQ
from optsl2.springer import AdditiveHom, SpringerCoeffs

F3 = Fp(3)
F5 = Fp(5)


def test_scalar_literals():
    assert scalar_to_literal(F5, F5.of(7)) == 2
    assert scalar_to_literal(QQ, Fraction(3, 2)) == "3/2"
    assert scalar_to_literal(QQ, Fraction(4, 2)) == 2
    assert scalar_from_literal(F5, 7) == 2
    assert scalar_from_literal(QQ, "3/2") == Fraction(3, 2)
    assert scalar_from_literal(QQ, -4) == Fraction(-4)
    with pytest.raises(DomainError):
        scalar_from_literal(F5, "2")
    with pytest.raises(DomainError):
        scalar_from_literal(QQ, 1.5)


def test_domain_literals():
    assert domain_to_literal(F3) == {"domain": "Fp", "p": 3}
    assert domain_to_literal(QQ) == {"domain": "Q"}
    assert domain_from_literal({"domain": "Fp", "p": 3}) is F3
    assert domain_from_literal({"domain": "Q"}) is QQ
    with pytest.raises(DomainError):
        domain_from_literal({"domain": "Fp"})
    with pytest.raises(DomainError):
        domain_from_literal({"domain": "R"})


def test_matrix_literal_round_trip():
    M = Mat.from_rows(F3, [[1, 2], [0, 1]])
    lit = mat_to_literal(M)
    assert lit == {"domain": "Fp", "p": 3, "rows": 2, "cols": 2,
                   "entries": [[1, 2], [0, 1]]}
    assert mat_from_literal(lit) == M
    R = Mat.from_rows(QQ, [[Fraction(1, 2), 3]])
    lit_q = mat_to_literal(R)
    assert lit_q == {"domain": "Q", "rows": 1, "cols": 2,
                     "entries": [["1/2", 3]]}
    assert mat_from_literal(lit_q) == R
    # the literal is honest JSON
    assert mat_from_literal(json.loads(json.dumps(lit_q))) == R


def test_matrix_literal_validation():
    with pytest.raises(DomainError):
        mat_from_literal({"domain": "Fp", "p": 3, "rows": 2, "cols": 2,
                          "entries": [[1, 2]]})


def test_cochar_literal_round_trip():
    diag = Cocharacter.diagonal(F3, (1, 0, -1))
    lit = cochar_to_literal(diag)
    assert lit == {"weights": [1, 0, -1], "basis": "identity"}
    assert cochar_from_literal(lit, domain=F3) == diag
    with pytest.raises(DomainError):
        cochar_from_literal(lit)

    basis = Mat.from_rows(QQ, [[1, 1], [0, 1]])
    psi = Cocharacter(basis, (1, -1))
    lit2 = cochar_to_literal(psi)
    assert lit2["basis"]["entries"] == [[1, 1], [0, 1]]
    back = cochar_from_literal(lit2)
    assert back == psi
    with pytest.raises(DomainError):
        cochar_from_literal(lit2, domain=F3)


def test_springer_literal_round_trip():
    c = SpringerCoeffs(F5, (2, 0, 1))
    lit = springer_to_literal(c)
    assert lit == {"p": 5, "a": [2, 0, 1]}
    assert springer_from_literal(lit) == c
    cq = SpringerCoeffs(QQ, (1, "1/2"))
    lit_q = springer_to_literal(cq)
    assert lit_q == {"p": "Q", "a": [1, "1/2"]}
    assert springer_from_literal(lit_q) == cq


def test_additive_literal_round_trip():
    N = jordan_block(F3, 3)
    h = AdditiveHom(F3, (N, N * N))
    lit = additive_to_literal(h)
    assert isinstance(lit, list) and len(lit) == 2
    assert additive_from_literal(lit) == h
    with pytest.raises(DomainError):
        additive_from_literal([])
    with pytest.raises(DomainError):
        additive_from_literal({"domain": "Fp"})
