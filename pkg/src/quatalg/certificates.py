"""Independent verification of serialized chain certificates.

The checker shares no code with the chain constructors: it rebuilds the
algebra from the certificate, re-derives element classes from raw
products, and re-checks every claimed identity.  It returns a verdict
together with the first failing identity, so a tampered certificate is
rejected with a concrete reason.
"""

from __future__ import annotations


class CertificateError(ValueError):
    pass


def _is_central(A, v):
    return all(v * b == b * v for b in A.basis())


def _scalar_part(A, v):
    """c with v = c*1, or None."""
    F = A.field
    for i, u in enumerate(A.unit_coords):
        if not F.is_zero(u):
            c = F.div(v.coords[i], u)
            return c if v == A.scalar(c) else None
    return None


def _is_square_central(A, v):
    if _is_central(A, v):
        return False
    c = _scalar_part(A, v * v)
    return c is not None and not A.field.is_zero(c)


def _is_artin_schreier(A, v):
    if A.field.char != 2 or _is_central(A, v):
        return False
    return _scalar_part(A, v * v + v) is not None


def check_chain_certificate(cert):
    """Verify an element-chain certificate.

    Returns (True, None) or (False, reason).  Raises CertificateError on
    malformed input.
    """
    from .algebras import algebra_from_json

    if not isinstance(cert, dict) or cert.get("kind") != "element-chain":
        raise CertificateError("not an element-chain certificate")
    try:
        A = algebra_from_json(cert["algebra"])
        F = A.field
        nodes = [A.element([F.parse(s) for s in v]) for v in cert["nodes"]]
        links = [A.element([F.parse(s) for s in v]) for v in cert["links"]]
        char2 = bool(cert["char2"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError("malformed certificate: %s" % exc)
    if char2 != (F.char == 2):
        return False, "characteristic flag disagrees with the field"
    if not nodes:
        return False, "empty chain"

    if char2:
        if len(links) != len(nodes) - 1:
            return False, "link count does not match node count"
        if len(links) > 3:
            return False, "chain exceeds the six-step bound"
        for i, v in enumerate(nodes):
            if not _is_artin_schreier(A, v):
                return False, ("node %d is not Artin-Schreier "
                               "(x^2 + x central, x noncentral)" % i)
        for i, y in enumerate(links):
            if not _is_square_central(A, y):
                return False, ("link %d is not square-central "
                               "(y^2 a central unit, y noncentral)" % i)
            u, v = nodes[i], nodes[i + 1]
            if u * y + y * u != y:
                return False, ("identity x_%d y_%d + y_%d x_%d = y_%d fails"
                               % (i, i, i, i, i))
            if v * y + y * v != y:
                return False, ("identity x_%d y_%d + y_%d x_%d = y_%d fails"
                               % (i + 1, i, i, i + 1, i))
        return True, None

    if links:
        return False, "links are not used in characteristic != 2 chains"
    if len(nodes) > 5:
        return False, "chain exceeds the four-link bound"
    for i, v in enumerate(nodes):
        if not _is_square_central(A, v):
            return False, ("node %d is not square-central "
                           "(x^2 a central unit, x noncentral)" % i)
    for i, (u, v) in enumerate(zip(nodes, nodes[1:])):
        if u * v != -(v * u):
            return False, ("identity x_%d x_%d = -x_%d x_%d fails"
                           % (i, i + 1, i + 1, i))
    return True, None
