"""Obstructions for rational homology spheres bounding balls or definite
4-manifolds.

Heegaard Floer d-invariants are ingested as data files, never computed; a
table keys exact rational values by discriminant-group elements (the
Poincaré duals of first Chern classes).  When |H₁| is even that keying is
not a bijection, so every verdict on such input carries an explicit caveat
and is reported as inconclusive rather than trusted.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from . import corrterm, discgroup, lattice as lattice_mod
from .overlattice import overlattice as build_overlattice
from .errors import GroupMismatch, IncompleteTable, InputError

EVEN_ORDER_CAVEAT = (
    "some group order is even, so spin^c structures are not in bijection "
    "with group elements via PD(c1); results on this input are inconclusive")


@dataclass(frozen=True)
class FillingPresentation:
    lattice: object            # normalized positive definite Lattice
    group: object              # disc group of the normalized lattice
    boundary_pairing: tuple    # linking pairing of the boundary, sign-correct
    negated: bool


@dataclass(frozen=True)
class DInvariantTable:
    orders: tuple
    pairing: tuple             # linking pairing table, Fractions in [0, 1)
    values: dict               # element tuple -> Fraction d(Y, t)
    z2_homology_sphere: bool

    @property
    def complete(self):
        n = 1
        for d in self.orders:
            n *= d
        return len(self.values) == n

    def group(self):
        return discgroup.group_from_table(self.orders, self.pairing)


@dataclass(frozen=True)
class MetabolizerRecord:
    metabolizer: object
    d_values: tuple = None        # (element, d(Y,t)) over the metabolizer
    d_over: Fraction = None       # d_{U(M)}
    constrained: Fraction = None  # constrained characteristic minimum
    table_min: Fraction = None
    chain_holds: bool = None
    failure: str = None


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str  # "obstructed" | "unobstructed" | "inconclusive"
    evidence: tuple
    reason: str = None
    caveat: str = None
    orientation_note: str = None


def _parse_rational(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad rational value {s!r}: {e}")


def load_dtable(path):
    """Load a d-invariant table from its JSON file format."""
    try:
        with open(path) as f:
            obj = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read d-table file {path}: {e}")
    for key in ("orders", "pairing", "d", "z2_homology_sphere"):
        if key not in obj:
            raise InputError(f"d-table file is missing the '{key}' key")
    orders = tuple(int(d) for d in obj["orders"])
    pairing = tuple(tuple(_parse_rational(x) for x in row)
                    for row in obj["pairing"])
    discgroup.group_from_table(orders, pairing)  # validates
    values = {}
    for rec in obj["d"]:
        elem = tuple(int(a) for a in rec["elem"])
        if len(elem) != len(orders) or any(
                not 0 <= a < d for a, d in zip(elem, orders)):
            raise InputError(f"d-table element {elem} out of range")
        if elem in values:
            raise InputError(f"duplicate d-table element {elem}")
        values[elem] = _parse_rational(rec["value"])
    z2 = bool(obj["z2_homology_sphere"])
    if z2 != all(d % 2 == 1 for d in orders):
        raise InputError(
            "z2_homology_sphere flag contradicts the group orders")
    return DInvariantTable(orders=orders, pairing=pairing, values=values,
                           z2_homology_sphere=z2)


def linking_form_of_filling(q):
    """Boundary group and linking pairing of a definite filling with
    H₁(X) = 0, from its intersection form.

    The linking pairing is the discriminant form of Q_X itself; when the
    input is negative definite the lattice is normalized to positive
    definite and the pairing sign flipped back accordingly.
    """
    lat = lattice_mod.make_lattice(q)
    grp = discgroup.disc_group(lat)
    if lat.negated:
        boundary = tuple(tuple((-x) % 1 for x in row) for row in grp.pairing)
    else:
        boundary = grp.pairing
    return FillingPresentation(lattice=lat, group=grp,
                               boundary_pairing=boundary, negated=lat.negated)


def _orientation_note(negated):
    if negated:
        return ("input form was negative definite; computations ran on its "
                "negation and the pairing sign was adjusted")
    return None


def donaldson_obstruction(q, cap=discgroup.DEFAULT_GROUP_CAP, threads=1):
    """Does the filling lattice embed in Zⁿ?  If not, the boundary cannot
    bound a rational homology ball alongside this filling."""
    lat = lattice_mod.make_lattice(q)
    ds = corrterm.d_set(lat, cap=cap, threads=threads)
    evidence = tuple(MetabolizerRecord(metabolizer=m, d_over=d)
                     for m, d in ds.entries)
    verdict = "unobstructed" if ds.contains_zero else "obstructed"
    reason = None
    if not ds.entries:
        reason = "no metabolizer exists, so the lattice cannot embed"
    return ObstructionReport(verdict=verdict, evidence=evidence, reason=reason,
                             orientation_note=_orientation_note(lat.negated))


def _require_complete(table):
    if not table.complete:
        raise IncompleteTable(
            "d-table does not key every element of the group")


def _metabolizer_values(table, m):
    return tuple((e, table.values[e]) for e in m.elements)


def rb_correction_obstruction(table, cap=discgroup.DEFAULT_GROUP_CAP):
    """Correction-term obstruction to bounding a rational homology ball:
    unobstructed iff some metabolizer carries d ≡ 0."""
    _require_complete(table)
    grp = table.group()
    mets = discgroup.metabolizers_of_group(grp, cap=cap)
    evidence = tuple(
        MetabolizerRecord(metabolizer=m, d_values=_metabolizer_values(table, m))
        for m in mets)
    if not mets:
        verdict, reason = "obstructed", "no metabolizer exists"
    elif any(all(v == 0 for _, v in rec.d_values) for rec in evidence):
        verdict, reason = "unobstructed", None
    else:
        verdict, reason = "obstructed", \
            "every metabolizer carries a nonzero correction term"
    if not table.z2_homology_sphere:
        return ObstructionReport(verdict="inconclusive", evidence=evidence,
                                 reason=reason, caveat=EVEN_ORDER_CAVEAT)
    return ObstructionReport(verdict=verdict, evidence=evidence, reason=reason)


def definite_filling_obstruction(table, cap=discgroup.DEFAULT_GROUP_CAP):
    """Obstruction to bounding a positive definite filling with H₁ = 0:
    fires iff some metabolizer carries strictly positive d everywhere."""
    _require_complete(table)
    grp = table.group()
    mets = discgroup.metabolizers_of_group(grp, cap=cap)
    evidence = tuple(
        MetabolizerRecord(metabolizer=m, d_values=_metabolizer_values(table, m))
        for m in mets)
    fires = any(all(v > 0 for _, v in rec.d_values) for rec in evidence)
    caveat = None if table.z2_homology_sphere else EVEN_ORDER_CAVEAT
    if fires and caveat:
        # a keyed table may miss spin^c structures, so a firing test on
        # even-order input cannot be trusted
        return ObstructionReport(verdict="inconclusive", evidence=evidence,
                                 caveat=caveat)
    verdict = "obstructed" if fires else "unobstructed"
    return ObstructionReport(verdict=verdict, evidence=evidence, caveat=caveat)


def chain_check(q, table, cap=discgroup.DEFAULT_GROUP_CAP, threads=1):
    """Verify 0 ≥ d_{U(M)} ≥ constrained min ≥ min d(Y,t) per metabolizer.

    A violated inequality means the d-table cannot belong to the boundary
    of the given filling.  When some metabolizer has min d(Y,t) ≥ 0 and the
    chain holds, the filling lattice embeds in the standard lattice.
    """
    _require_complete(table)
    filling = linking_form_of_filling(q)
    lat = filling.lattice
    if table.orders != filling.group.orders or \
            table.pairing != filling.boundary_pairing:
        raise GroupMismatch(
            "d-table group or pairing does not match the filling boundary")
    if filling.negated:
        # orientation reversal: d(-Y, t) = -d(Y, t), elements conjugate
        grp = filling.group
        values = {discgroup.neg(grp, e): -v for e, v in table.values.items()}
    else:
        values = table.values
    mets = discgroup.metabolizers(lat, cap=cap)
    records = []
    embeds = False
    for m in mets:
        d_over = corrterm.d_lattice(build_overlattice(lat, m))
        cmin = corrterm.constrained_min(lat, m)
        tmin = min(values[e] for e in m.elements)
        failure = None
        if d_over > 0:
            failure = f"0 >= d_U(M) fails: d_U(M) = {d_over}"
        elif d_over < cmin:
            failure = f"d_U(M) >= constrained min fails: {d_over} < {cmin}"
        elif cmin < tmin:
            failure = f"constrained min >= min d(Y,t) fails: {cmin} < {tmin}"
        if failure is None and tmin >= 0:
            embeds = True  # forces d_U(M) = 0 along the chain
        records.append(MetabolizerRecord(
            metabolizer=m, d_over=d_over, constrained=cmin, table_min=tmin,
            d_values=tuple((e, values[e]) for e in m.elements),
            chain_holds=failure is None, failure=failure))
    consistent = all(r.chain_holds for r in records)
    verdict = "unobstructed" if consistent else "obstructed"
    reason = None
    if not consistent:
        reason = ("chain inequality violated: the d-table is inconsistent "
                  "with the boundary of this filling")
    elif embeds:
        reason = ("some metabolizer has min d(Y,t) >= 0, so the filling "
                  "lattice embeds in the standard lattice")
    return ObstructionReport(verdict=verdict, evidence=tuple(records),
                             reason=reason,
                             orientation_note=_orientation_note(lat.negated))
