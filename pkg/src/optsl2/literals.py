"""JSON literal formats shared by the CLI and the tests.

Matrices: {"domain": "Fp"|"Q", "p": <prime, Fp only>, "rows": R,
"cols": C, "entries": [[..]]} with rationals written "a/b" (plain ints
stay ints).  Cocharacters: {"weights": [..], "basis": matrix literal
or "identity"}.  Springer coefficient families: {"p": prime or "Q",
"a": [scalars]}.  Additive homomorphisms: list of matrix literals.
"""

from __future__ import annotations

from fractions import Fraction

from .cochar import Cocharacter
from .errors import DomainError
from .matrices import Mat
from .scalars import Fp, FpDomain, QQ, format_rational, parse_rational
from .springer import AdditiveHom, SpringerCoeffs


def scalar_to_literal(domain, x):
    if isinstance(domain, FpDomain):
        return int(x)
    return format_rational(x)


def scalar_from_literal(domain, v):
    if isinstance(domain, FpDomain):
        if not isinstance(v, int):
            raise DomainError("mod-p entries must be integers, got %r" % (v,))
        return domain.of(v)
    if isinstance(v, str):
        return parse_rational(v)
    if isinstance(v, int):
        return Fraction(v)
    raise DomainError("rational entries must be ints or 'a/b' strings, "
                      "got %r" % (v,))


def domain_to_literal(domain) -> dict:
    if isinstance(domain, FpDomain):
        return {"domain": "Fp", "p": domain.p}
    return {"domain": "Q"}


def domain_from_literal(obj):
    kind = obj.get("domain")
    if kind == "Fp":
        if "p" not in obj:
            raise DomainError("Fp literal needs a prime p")
        return Fp(obj["p"])
    if kind == "Q":
        return QQ
    raise DomainError("unknown domain %r" % (kind,))


def mat_to_literal(M: Mat) -> dict:
    lit = domain_to_literal(M.domain)
    lit["rows"] = M.rows
    lit["cols"] = M.cols
    lit["entries"] = [[scalar_to_literal(M.domain, M[i, j])
                       for j in range(M.cols)] for i in range(M.rows)]
    return lit


def mat_from_literal(obj) -> Mat:
    dom = domain_from_literal(obj)
    rows, cols = obj["rows"], obj["cols"]
    entries = obj["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise DomainError("entry grid does not match rows x cols")
    data = [scalar_from_literal(dom, v) for row in entries for v in row]
    return Mat(dom, rows, cols, data)


def cochar_to_literal(psi: Cocharacter) -> dict:
    n = psi.n
    if psi.basis == Mat.identity(psi.domain, n):
        basis = "identity"
    else:
        basis = mat_to_literal(psi.basis)
    return {"weights": list(psi.weights), "basis": basis}


def cochar_from_literal(obj, domain=None) -> Cocharacter:
    weights = obj["weights"]
    basis = obj["basis"]
    if basis == "identity":
        if domain is None:
            raise DomainError(
                "cocharacter literal with identity basis needs a domain")
        return Cocharacter.diagonal(domain, weights)
    B = mat_from_literal(basis)
    if domain is not None and B.domain != domain:
        raise DomainError("basis domain disagrees with the requested one")
    return Cocharacter(B, weights)


def springer_to_literal(f: SpringerCoeffs) -> dict:
    dom = f.domain
    p = dom.p if isinstance(dom, FpDomain) else "Q"
    return {"p": p, "a": [scalar_to_literal(dom, x) for x in f.a]}


def springer_from_literal(obj) -> SpringerCoeffs:
    p = obj["p"]
    dom = QQ if p == "Q" else Fp(p)
    return SpringerCoeffs(dom, [scalar_from_literal(dom, v)
                                for v in obj["a"]])


def additive_to_literal(h: AdditiveHom) -> list:
    return [mat_to_literal(C) for C in h.coeffs]


def additive_from_literal(obj) -> AdditiveHom:
    if not isinstance(obj, list) or not obj:
        raise DomainError("additive homomorphism literal must be a "
                          "non-empty list of matrix literals")
    mats = [mat_from_literal(o) for o in obj]
    return AdditiveHom(mats[0].domain, mats)
