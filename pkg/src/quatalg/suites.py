"""Named verification suites.

Each suite is a deterministic, seeded property check over a pinned
instance population, returning (ok, detail).  The suites double as the
acceptance gate (run via the test suite) and as the CLI surface
``verify suite <name>``.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import linalg
from .algebras import find_isomorphism, is_division, verify_isomorphism
from .certificates import check_chain_certificate
from .chains import (
    ElementClass,
    chain,
    classify,
    decompose_wrt,
    find_anticommuting_link,
    mixed_link,
)
from .clifford import clifford_algebra, extract_E
from .fields import FiniteField, FunctionField, Rationals
from .forms import (
    QuadraticForm,
    adjoin_root,
    discriminant,
    is_isotropic,
    quaternion_norm_form,
    trivialize_discriminant,
    witt_decompose,
)
from .localglobal import Place, bad_places, hilbert_symbol, is_isotropic_global
from .quaternions import (
    CommonSlotChain,
    QuaternionSymbol,
    TensorPresentation,
    common_slot_chain,
    common_slot_chain_tensor,
    realize,
)

Q = Rationals()
F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(2, 2)
F5 = FiniteField(5)


def _nonzero(F, rng, bound=20):
    while True:
        c = F.random_element(rng, bound)
        if not F.is_zero(c):
            return c


def _random_form(F, rng, max_blocks=3, bound=20):
    m = rng.randint(1, max_blocks)
    if F.char == 2:
        pairs = tuple((F.random_element(rng, bound),
                       F.random_element(rng, bound)) for _ in range(m))
        return QuadraticForm(F, pairs, True)
    diag = tuple(_nonzero(F, rng, bound) for _ in range(2 * m))
    return QuadraticForm(F, diag, False)


def _random_symbol(F, rng, bound=10):
    if F.char == 2:
        return QuaternionSymbol(F, F.random_element(rng, bound),
                                _nonzero(F, rng, bound), char2=True)
    return QuaternionSymbol(F, _nonzero(F, rng, bound),
                            _nonzero(F, rng, bound))


def _has_zero_exhaustive(form):
    F = form.field
    for v in itertools.product(F.elements(), repeat=form.dim):
        if all(F.is_zero(c) for c in v):
            continue
        if F.is_zero(form.evaluate(list(v))):
            return True
    return False


def _random_invertible(A, rng, bound=4):
    while True:
        u = A.random_element(rng, bound) if bound else A.random_element(rng)
        inv = u.inverse()
        if inv is not None:
            return u, inv


# -- suite 1: discriminant additivity --------------------------------------


def suite_invariants(count=500):
    """Discriminant multiplicativity/additivity under orthogonal sum."""
    for F in (F2, F3, F4, F5, Q):
        rng = random.Random(101)
        for i in range(count):
            f = _random_form(F, rng)
            g = _random_form(F, rng)
            df, dg = discriminant(f), discriminant(g)
            ds = discriminant(f.orthogonal_sum(g))
            if F.char == 2:
                diff = F.add(ds.representative,
                             F.add(df.representative, dg.representative))
                ok = F.artin_schreier_solve(diff)[0]
            else:
                ratio = F.div(ds.representative,
                              F.mul(df.representative, dg.representative))
                ok = F.is_square(ratio)[0]
            if not ok:
                return False, ("discriminant identity fails over %s at "
                               "instance %d" % (F.name, i))
    return True, "5 x %d instances, exact" % count


# -- suite 2: discriminant trivialization ----------------------------------


def suite_trivialize(count=100):
    """Trivialized form has trivial discriminant and extends isometrically
    to the form over the splitting quadratic extension."""
    done = 0
    for F in (F2, F3, F5):
        rng = random.Random(202)
        while done < count * (1 if F is F2 else 2 if F is F3 else 3) // 3:
            f = _random_form(F, rng, max_blocks=2, bound=None)
            ext = adjoin_root(F, discriminant(f).representative)
            fp, hyperbolic = trivialize_discriminant(f, ext)
            if not discriminant(fp).trivial:
                return False, "output discriminant nontrivial over %s" % F.name
            fK = f.extend(ext.ext, ext.embed)
            fpK = fp.extend(ext.ext, ext.embed)
            from .forms import is_isometric

            if not is_isometric(fK, fpK):
                return False, ("trivialized form is not isometric over the "
                               "extension (%s)" % F.name)
            done += 1
    return True, "%d instances, exact" % done


# -- suite 3: Witt decomposition over F_3, exhaustive ----------------------


def suite_witt():
    """All diagonal forms of dimension <= 6 over F_3 up to scaling:
    witness re-evaluates, anisotropic part has no nonzero zero."""
    total = 0
    for d in (2, 4, 6):
        for rest in itertools.product((1, 2), repeat=d - 1):
            f = QuadraticForm(F3, (1,) + rest, False)
            w = witt_decompose(f)
            if not w.verify():
                return False, "witness fails for %r" % (f,)
            if w.anisotropic.dim and _has_zero_exhaustive(w.anisotropic):
                return False, "anisotropic part has a zero for %r" % (f,)
            total += 1
    return True, "%d forms, exhaustive" % total


# -- suite 4: local-global over Q ------------------------------------------


def _brute_force_zero(diag, height):
    """Integer isotropy search for a diagonal rational form; returns a
    vector or None.  Signs are irrelevant for diagonal forms."""
    den = 1
    for a in diag:
        den = den * a.denominator // _gcd(den, a.denominator)
    coeffs = [int(a * den) for a in diag]
    squares = {k * k: k for k in range(height + 1)}
    n = len(coeffs)
    if n == 2:
        for x in range(1, height + 1):
            for y in range(height + 1):
                if coeffs[0] * x * x + coeffs[1] * y * y == 0:
                    return [x, y]
        return None
    # n == 4: solve for the last coordinate
    c1, c2, c3, c4 = coeffs
    for x1 in range(height + 1):
        s1 = c1 * x1 * x1
        for x2 in range(height + 1):
            s2 = s1 + c2 * x2 * x2
            for x3 in range(height + 1):
                s = s2 + c3 * x3 * x3
                if s % c4 == 0:
                    val = -s // c4
                    x4 = squares.get(val)
                    if x4 is not None and (x1 or x2 or x3 or x4):
                        return [x1, x2, x3, x4]
    return None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def suite_local_global(count=200, height=50):
    """Hasse-Minkowski agreement with bounded search, plus the Hilbert
    product formula."""
    rng = random.Random(404)
    for i in range(count):
        dim = rng.choice((2, 4))
        diag = [_nonzero(Q, rng, 20) for _ in range(dim)]
        glob = is_isotropic_global(Q, diag)
        if not glob:
            found = _brute_force_zero(diag, height)
            if found is not None:
                return False, ("global says anisotropic but %r is a zero of "
                               "%r" % (found, diag))
        else:
            res = is_isotropic(QuadraticForm(Q, tuple(diag), False))
            if res.status is not True:
                return False, "global/direct disagreement on %r" % (diag,)
    rng = random.Random(405)
    for i in range(count):
        a, b = _nonzero(Q, rng, 20), _nonzero(Q, rng, 20)
        prod = 1
        for place in bad_places(Q, [a, b]):
            prod *= hilbert_symbol(Q, a, b, place)
        if prod != 1:
            return False, "Hilbert product formula fails for (%s, %s)" % (a, b)
    return True, "%d isotropy + %d product-formula instances" % (count, count)


# -- suite 5: Clifford correctness -----------------------------------------


def suite_clifford():
    """Exhaustive small-field norm forms: dim C(f) = 16 and
    E(norm form of s) isomorphic to the realization of s; plus the
    rational example E(<1,1,1,1>) ~ (-1,-1)."""
    total = 0
    populations = [(F2, [(a, F2.one()) for a in (F2.zero(), F2.one())]),
                   (F3, [(a, b) for a in F3.nonzero_elements()
                         for b in F3.nonzero_elements()]),
                   (F5, [(a, b) for a in F5.nonzero_elements()
                         for b in F5.nonzero_elements()])]
    for F, pop in populations:
        for a, b in pop:
            s = QuaternionSymbol(F, a, b, char2=(F.char == 2))
            nf = s.norm_form()
            C = clifford_algebra(nf)
            if C.algebra.dim != 16:
                return False, "dim C(f) != 16 for %r" % (s,)
            E = extract_E(nf)
            A = realize(s)
            phi = find_isomorphism(E, A)
            if phi is None or not verify_isomorphism(E, A, phi):
                return False, "E(norm form) !~ realization for %r" % (s,)
            total += 1
    f = QuadraticForm(Q, (Fraction(1),) * 4, False)
    E = extract_E(f)
    A = realize(QuaternionSymbol(Q, Fraction(-1), Fraction(-1)))
    phi = find_isomorphism(E, A)
    if phi is None or not verify_isomorphism(E, A, phi):
        return False, "E(<1,1,1,1>/Q) !~ (-1,-1)"
    return True, "%d exhaustive symbols + rational example" % total


# -- suite 6: division <-> anisotropy over F_3(t) ---------------------------


def suite_division_equivalence(count=50):
    """dim-4 trivial-discriminant forms over F_3(t): E(f) is division
    iff f is anisotropic, both sides decided independently."""
    F = FunctionField(F3)
    rng = random.Random(606)

    def random_poly():
        t = F.t()
        while True:
            c = F.from_int(rng.randrange(3))
            for e in range(1, 3):
                term = F.from_int(rng.randrange(3))
                for _ in range(e):
                    term = F.mul(term, t)
                c = F.add(c, term)
            if not F.is_zero(c):
                return c

    for i in range(count):
        a, b, c = random_poly(), random_poly(), random_poly()
        d = F.mul(F.mul(a, b), c)
        f = QuadraticForm(F, (a, b, c, d), False)
        E = extract_E(f)
        division = is_division(E)
        if division.status is None:
            return False, "division status undecided at instance %d" % i
        iso = is_isotropic(f)
        if iso.status is None:
            return False, "isotropy undecided at instance %d" % i
        if division.status != (iso.status is False):
            return False, ("division/anisotropy mismatch at instance %d: "
                           "%r" % (i, f))
    return True, "%d instances, both routes agree" % count


# -- suite 7: decompositions with respect to a pivot ------------------------


def suite_decompositions(count=500):
    """t = t0 + t1 identities, plus the structural identity
    t1 t0 + t0 t1 = 0 (char != 2) / = t1 (char 2) when t itself is
    square-central resp. Artin-Schreier."""
    cases = [
        (F3, QuaternionSymbol(F3, F3.from_int(2), F3.from_int(1))),
        (F5, QuaternionSymbol(F5, F5.from_int(2), F5.from_int(3))),
        (Q, QuaternionSymbol(Q, Fraction(-1), Fraction(-1))),
        (F2, QuaternionSymbol(F2, F2.one(), F2.one(), char2=True)),
        (F4, QuaternionSymbol(F4, F4.generator(), F4.one(), char2=True)),
    ]
    for F, s in cases:
        A = realize(s)
        x = A.symbol_generators[0]
        rng = random.Random(707)
        special = ElementClass.ARTIN_SCHREIER if F.char == 2 \
            else ElementClass.SQUARE_CENTRAL
        for i in range(count):
            t = A.random_element(rng)
            t0, t1 = decompose_wrt(t, x)  # identities re-verified inside
            if t0 + t1 != t:
                return False, "split does not sum over %s" % F.name
            if classify(t).kind == special:
                lhs = t1 * t0 + t0 * t1
                want = t1 if F.char == 2 else A.zero()
                if lhs != want:
                    return False, ("structural identity fails over %s at "
                                   "instance %d" % (F.name, i))
    return True, "5 fields x %d instances" % count


# -- suite 8: link constructions --------------------------------------------


def _conjugated_presentation(P, rng):
    A = P.algebra
    u, uinv = _random_invertible(A, rng)
    gens = [(u * x * uinv, u * y * uinv) for (x, y) in P.generators]
    return TensorPresentation(P.symbols, algebra=A, generators=gens)


def _check_link_relations(F, z, x, xp):
    if classify(z).kind != ElementClass.SQUARE_CENTRAL:
        return False
    if F.char == 2:
        return x * z + z * x == z and xp * z + z * xp == z
    return x * z == -(z * x) and xp * z == -(z * xp)


def suite_links(count=100):
    """Anticommuting and mixed links in seeded tensor presentations with
    canonical and conjugated markings."""
    configs = [(F3, 2), (F3, 3), (F4, 2), (F5, 2), (F5, 3), (Q, 2)]
    done = 0
    idx = 0
    while done < count:
        F, nfac = configs[idx % len(configs)]
        idx += 1
        rng = random.Random(808 + idx)
        syms = [_random_symbol(F, rng, 6) for _ in range(nfac)]
        P = TensorPresentation(syms)
        if idx % 2 == 0:
            P = _conjugated_presentation(P, rng)
        i, j = rng.sample(range(nfac), 2)
        x, xp = P.generators[i][0], P.generators[j][0]
        z = find_anticommuting_link(P, x, xp)
        if not _check_link_relations(F, z, x, xp):
            return False, "link relations fail (%s, %d factors)" % (F.name,
                                                                    nfac)
        if F.char == 2:
            x_sc = P.generators[i][1]
            z2, w = mixed_link(P, x_sc, xp)
            ok = (classify(w).kind == ElementClass.ARTIN_SCHREIER
                  and w * x_sc + x_sc * w == x_sc
                  and classify(z2).kind == ElementClass.SQUARE_CENTRAL
                  and w * z2 + z2 * w == z2 and xp * z2 + z2 * xp == z2)
            if not ok:
                return False, "mixed link relations fail (%s)" % F.name
        done += 1
    return True, "%d presentations, all relations re-checked" % done


# -- suite 9: chains ---------------------------------------------------------


def _random_marked_pair(P, rng):
    """Two marked square-central / Artin-Schreier elements inside one
    conjugated copy of the presentation: generators, or a generator
    shifted by its own twisted partner (also of the special class)."""
    A = P.algebra
    F = A.field
    u, uinv = _random_invertible(A, rng)
    (x1, y1), (x2, y2) = P.generators[0], P.generators[1]
    menu = [(x1, x2)]
    if not F.is_zero(F.add(classify(x1).value, classify(y1).value)):
        menu.append((x1, x1 + y1))
    if not F.is_zero(F.add(classify(x2).value, classify(y2).value)):
        menu.append((x2 + y2, x1))
    menu.append((x1, x2 + A.one() if F.char == 2 else x2.scale(
        _nonzero(F, rng, 5))))
    a, b = menu[rng.randrange(len(menu))]
    if F.char == 2 and classify(b).kind != ElementClass.ARTIN_SCHREIER:
        a, b = menu[0]
    if F.char != 2 and classify(b).kind != ElementClass.SQUARE_CENTRAL:
        a, b = menu[0]
    return u * a * uinv, u * b * uinv


def suite_chains(count=100):
    """Chains between conjugated marked elements validate end to end
    within the length bounds."""
    fields = [F3, F5, F2, F4, Q]
    done = 0
    idx = 0
    while done < count:
        F = fields[idx % len(fields)]
        idx += 1
        rng = random.Random(909 + idx)
        syms = [_random_symbol(F, rng, 4) for _ in range(2)]
        P = TensorPresentation(syms)
        x, xp = _random_marked_pair(P, rng)
        c = chain(x, xp)
        if not c.verify():
            return False, "chain fails verification over %s" % F.name
        if c.nodes[0] != x or c.nodes[-1] != xp:
            return False, "chain endpoints drifted over %s" % F.name
        if F.char == 2:
            if 2 * len(c.links) > 6:
                return False, "char-2 chain exceeds six steps"
        elif len(c.nodes) - 1 > 4:
            return False, "chain exceeds four links"
        done += 1
    return True, "%d chains, verified with length bounds" % done


# -- suite 10: common slot chains --------------------------------------------


def suite_common_slot(count=50):
    """Single-quaternion and tensor common-slot chains."""
    for F in (F3, F5):
        rng = random.Random(111 + F.char)
        for _ in range(count // 2):
            s, sp = _random_symbol(F, rng, 6), _random_symbol(F, rng, 6)
            ch = common_slot_chain(s, sp)
            if not ch.verify():
                return False, "single chain fails over %s" % F.name
    s = QuaternionSymbol(Q, Fraction(-1), Fraction(-1))
    sp = QuaternionSymbol(Q, Fraction(-2), Fraction(-2))
    ch = common_slot_chain(s, sp)
    if not ch.verify():
        return False, "rational chain fails"
    beta = Fraction(-2)
    explicit = CommonSlotChain(
        [s, QuaternionSymbol(Q, Fraction(-1), beta),
         QuaternionSymbol(Q, Fraction(-2), beta), sp], beta)
    if not explicit.verify():
        return False, "beta'' = -2 chain fails verification"
    for F in (F3, F5):
        rng = random.Random(113 + F.char)
        for _ in range(count // 2):
            tail = _random_symbol(F, rng, 6)
            P = TensorPresentation([_random_symbol(F, rng, 6), tail])
            Pp = TensorPresentation([_random_symbol(F, rng, 6), tail])
            sc = common_slot_chain_tensor(P, Pp)
            if not sc.verify() or len(sc.nodes) > 4:
                return False, "tensor chain fails over %s" % F.name
    return True, ("%d single + %d tensor chains + rational beta''=-2 "
                  "instance" % (count, count))


# -- suite 11: tamper detection ----------------------------------------------


def suite_tamper(count=50):
    """Certificates with one corrupted coefficient are all rejected with
    a named failing identity."""
    fields = [F3, F5, F2, F4]
    rejected = 0
    idx = 0
    while rejected < count:
        F = fields[idx % len(fields)]
        idx += 1
        rng = random.Random(1111 + idx)
        syms = [_random_symbol(F, rng, 4) for _ in range(2)]
        P = TensorPresentation(syms)
        x, xp = _random_marked_pair(P, rng)
        c = chain(x, xp)
        cert = c.to_json()
        ok, _ = check_chain_certificate(cert)
        if not ok:
            return False, "genuine certificate rejected over %s" % F.name
        # corrupt one coefficient by a unit bump
        if F.char == 2:
            if not cert["links"]:
                continue
            coords = cert["links"][0]
        else:
            if len(cert["nodes"]) < 2:
                continue
            coords = cert["nodes"][1]
        bumped = F.add(F.parse(coords[0]), F.one())
        coords[0] = F.fmt(bumped)
        ok, reason = check_chain_certificate(cert)
        if ok or not reason:
            return False, ("tampered certificate accepted over %s" % F.name)
        rejected += 1
    return True, "%d tampered certificates rejected, reasons named" % rejected


SUITES = {
    "invariants": suite_invariants,
    "trivialize": suite_trivialize,
    "witt": suite_witt,
    "local-global": suite_local_global,
    "clifford": suite_clifford,
    "division-equivalence": suite_division_equivalence,
    "decompositions": suite_decompositions,
    "links": suite_links,
    "chains": suite_chains,
    "common-slot": suite_common_slot,
    "tamper": suite_tamper,
}
