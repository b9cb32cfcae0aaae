from dataclasses import dataclass
from math import comb
from typing import Callable, List, Optional, Sequence, Set, Tuple

import numpy as np

from core.characters.abelian import sigma_label
from core.characters.class_function import CharacterTable, ClassFunction, VirtualRep
from core.characters.cyclotomic import Cyclotomic
from core.characters.explicit import INF
from core.characters.operations import character_table, decompose, exterior_power, restrict
from core.groups import FiniteMatrixGroup, named_subgroup
from core.utils import GroupFamily

"""
乘積、外冪與限制的恆等式目錄

每一條都是兩個虛擬表示的等式，在特徵標上逐類比對。expected=None 的條目照原樣抄錄，
只回報成立與否；不成立時另有一條重新推導過的條目（expected=True）。
"""


@dataclass(frozen=True)
class CharacterIdentity:
    key: str
    claim: str
    lhs: VirtualRep
    rhs: VirtualRep
    expected: Optional[bool] = True

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def consistent(self) -> bool:
        return self.expected is None or self.holds == self.expected

    @property
    def discrepancy(self) -> bool:
        """照抄的式子與特徵標不符"""

        return self.expected is None and not self.holds


# (n, k) 代表 F_p ∪ {∞} 上的點 nk^{-1}
def _projective(p: int) -> List[Tuple[object, Tuple[int, int]]]:
    return [(r, (r, 1)) for r in range(p)] + [(INF, (1, 0))]


def _sum(table: CharacterTable, labels: Sequence[str]) -> VirtualRep:
    total: VirtualRep = VirtualRep.zero(table)
    for label in labels:
        total = total + table.rep(label)
    return total


# -----------------------------------------------------------------------------
# U(3,p)
# -----------------------------------------------------------------------------


def h_identities(table: CharacterTable) -> List[CharacterIdentity]:
    p: int = table.group.p

    def f(a: int, b: int) -> VirtualRep:
        return table.rep(f"f({a % p},{b % p})")

    def phi(i: int) -> VirtualRep:
        return table.rep(f"phi({i % p})")

    all_f: VirtualRep = _sum(table, [f"f({a},{b})" for a in range(p) for b in range(p)])
    items: List[CharacterIdentity] = [
        CharacterIdentity("H.f-product", "f(1,0) f(0,1) = f(1,1)", f(1, 0) * f(0, 1), f(1, 1))
    ]
    for i in range(1, p):
        items.append(
            CharacterIdentity(f"H.phi{i}-phi{-i % p}", f"phi_{i} phi_{-i % p} = sum f", phi(i) * phi(-i), all_f)
        )
        for j in range(1, p):
            if (i + j) % p:
                items.append(
                    CharacterIdentity(f"H.phi{i}-phi{j}", f"phi_{i} phi_{j} = p phi_{(i + j) % p}", phi(i) * phi(j), phi(i + j) * p)
                )
        for k in range(1, p):
            items.append(
                CharacterIdentity(
                    f"H.lambda{k}-phi{i}",
                    f"lambda^{k} phi_{i} = C(p,{k})/p phi_{k * i % p}",
                    exterior_power(phi(i), k),
                    phi(k * i) * (comb(p, k) // p),
                )
            )
        top: VirtualRep = f(1, 1) if p == 2 else table.one()
        items.append(
            CharacterIdentity(f"H.lambda{p}-phi{i}", f"lambda^p phi_{i} = {'f(1,1)' if p == 2 else '1'}", exterior_power(phi(i), p), top)
        )
    return items


def h_restrictions(group: FiniteMatrixGroup) -> List[CharacterIdentity]:
    """C^{H,nk^{-1}}_p 與 Z(H) 上的限制"""

    table: CharacterTable = character_table(group)
    p: int = group.p
    items: List[CharacterIdentity] = []

    for ell, (n, k) in _projective(p):
        sub: FiniteMatrixGroup = named_subgroup(group, f"C_H({n},{k})")
        sub_table: CharacterTable = character_table(sub)
        cyclic_four: bool = sub.order == 4
        modulus: int = sub.order
        scale: int = modulus // p
        for a in range(p):
            for b in range(p):
                target: VirtualRep = sub_table.rep(sigma_label([(a * n + b * k) * scale % modulus]))
                items.append(
                    CharacterIdentity(
                        f"H.res.C({ell}).f({a},{b})",
                        f"f({a},{b}) restricts to sigma^(an+bk) on C^(H,{ell})",
                        restrict(table.rep(f"f({a},{b})"), sub, sub_table),
                        target,
                    )
                )
        for i in range(1, p):
            powers: List[int] = [1, 3] if cyclic_four else list(range(p))
            items.append(
                CharacterIdentity(
                    f"H.res.C({ell}).phi({i})",
                    f"phi_{i} restricts to {'sigma + sigma^3' if cyclic_four else 'sum sigma^j'} on C^(H,{ell})",
                    restrict(table.rep(f"phi({i})"), sub, sub_table),
                    _sum(sub_table, [sigma_label([j]) for j in powers]),
                )
            )

    center: FiniteMatrixGroup = named_subgroup(group, "Z")
    center_table: CharacterTable = character_table(center)
    for i in range(1, p):
        items.append(
            CharacterIdentity(
                f"H.res.Z.phi({i})",
                f"phi_{i} restricts to p tau^{i} on Z(H)",
                restrict(table.rep(f"phi({i})"), center, center_table),
                center_table.rep(sigma_label([i])) * p,
            )
        )
    items.append(
        CharacterIdentity(
            "H.res.Z.f",
            "f(a,b) restricts to the trivial character of Z(H)",
            restrict(_sum(table, [f"f({a},{b})" for a in range(p) for b in range(p)]), center, center_table),
            center_table.one() * (p * p),
        )
    )
    return items


# -----------------------------------------------------------------------------
# L_0 ⊆ U(4,p)
# -----------------------------------------------------------------------------


def l_identities(table: CharacterTable) -> List[CharacterIdentity]:
    p: int = table.group.p

    def f(a: int, b: int, c: int) -> VirtualRep:
        return table.rep(f"f({a % p},{b % p},{c % p})")

    def phi(ell: object, i: int) -> VirtualRep:
        return table.rep(f"phi({ell},{i % p})")

    items: List[CharacterIdentity] = []
    for ell, (n, k) in _projective(p):
        for i in range(1, p):
            square: VirtualRep = phi(ell, i) * phi(ell, -i)
            printed = _sum_reps([f(k * x, n * x, y) for x in range(p) for y in range(p)], table)
            stabilizer = _sum_reps([f(k * x, -n * x, y) for x in range(p) for y in range(p)], table)
            items.append(
                CharacterIdentity(
                    f"L.phi({ell},{i})-phi({ell},{-i % p}).printed",
                    f"phi_(l,i) phi_(l,-i) = sum f(kx,nx,y), l = {ell}",
                    square,
                    printed,
                    expected=None,
                )
            )
            items.append(
                CharacterIdentity(
                    f"L.phi({ell},{i})-phi({ell},{-i % p})",
                    f"phi_(l,i) phi_(l,-i) = sum over the stabilizer f(kx,-nx,y), l = {ell}",
                    square,
                    stabilizer,
                )
            )
            for j in range(1, p):
                if (i + j) % p:
                    items.append(
                        CharacterIdentity(
                            f"L.phi({ell},{i})-phi({ell},{j})",
                            f"phi_(l,i) phi_(l,j) = p phi_(l,i+j), l = {ell}",
                            phi(ell, i) * phi(ell, j),
                            phi(ell, i + j) * p,
                        )
                    )
            for e in range(1, p):
                items.append(
                    CharacterIdentity(
                        f"L.lambda{e}-phi({ell},{i})",
                        f"lambda^{e} phi_(l,i) = C(p,{e})/p phi_(l,{e}i)",
                        exterior_power(phi(ell, i), e),
                        phi(ell, e * i) * (comb(p, e) // p),
                    )
                )
            top: VirtualRep = f(k, n, 1) if p == 2 else table.one()
            items.append(
                CharacterIdentity(
                    f"L.lambda{p}-phi({ell},{i})",
                    f"lambda^p phi_(l,i) = {'f(k,n,1)' if p == 2 else '1'}",
                    exterior_power(phi(ell, i), p),
                    top,
                )
            )

    items.extend(_l_mixed_products(table))
    if p == 2:
        items.extend(_cross_products(table, ["A", "B", "C"], 3, "L"))
    return items


def _l_mixed_products(table: CharacterTable) -> List[CharacterIdentity]:
    """
    - Description:
        不同斜率的 φ 相乘。兩條支撐線只交於 a = b = 0，乘積落在中心上，
        以 Σ_x f 把另一個 φ 截到原點：
            φ_{r,i} φ_{r',i'} = Σ_x f(0,x,0) φ_{(ir+i'r')/(i+i'), i+i'}    (i+i' ≠ 0)
            φ_{r,i} φ_{r',-i} = Σ_x f(x,0,0) φ_{∞, i(r−r')}
            φ_{r,i} φ_{∞,i'}  = Σ_x f(0,x,0) φ_{r+i'/i, i}
        照抄的三族式子一併列出，只回報。
    """

    p: int = table.group.p

    def f(a: int, b: int, c: int) -> VirtualRep:
        return table.rep(f"f({a % p},{b % p},{c % p})")

    def phi(ell: object, i: int) -> VirtualRep:
        return table.rep(f"phi({ell if ell == INF else ell % p},{i % p})")

    def cut(a: int, b: int) -> VirtualRep:
        return _sum_reps([f(a * x, b * x, 0) for x in range(p)], table)

    items: List[CharacterIdentity] = []
    units: List[int] = list(range(1, p))
    for r in range(p):
        for s in range(r + 1, p):
            for i in units:
                for j in units:
                    lhs: VirtualRep = phi(r, i) * phi(s, j)
                    key: str = f"L.phi({r},{i})-phi({s},{j})"
                    if (i + j) % p:
                        slope: int = (i * r + j * s) * pow(i + j, -1, p)
                        items.append(CharacterIdentity(key, "distinct finite slopes, i+i' != 0", lhs, cut(0, 1) * phi(slope, i + j)))
                        printed_slope: int = (r + s) * pow(i + j, -1, p)
                        items.append(
                            CharacterIdentity(
                                key + ".printed",
                                "sum f(k(i+i')x,(n+n')x,0) phi_((n+n')k^-1(i+i')^-1, i+i')",
                                lhs,
                                _sum_reps([f((i + j) * x, (r + s) * x, 0) for x in range(p)], table) * phi(printed_slope, i + j),
                                expected=None,
                            )
                        )
                    else:
                        items.append(CharacterIdentity(key, "distinct finite slopes, i' = -i", lhs, cut(1, 0) * phi(INF, i * (r - s))))
                        index: int = (i + r + j * s) % p
                        if index:
                            items.append(
                                CharacterIdentity(
                                    key + ".printed",
                                    "sum f(0,x,0) phi_(inf, i + nk^-1 + i'n'k^-1)",
                                    lhs,
                                    cut(0, 1) * phi(INF, index),
                                    expected=None,
                                )
                            )
        for i in units:
            for j in units:
                lhs = phi(r, i) * phi(INF, j)
                key = f"L.phi({r},{i})-phi(inf,{j})"
                slope = (r + j * pow(i, -1, p)) % p
                items.append(CharacterIdentity(key, "finite slope times infinite slope", lhs, cut(0, 1) * phi(slope, i)))
                printed_slope = (r + j) * pow(i, -1, p)
                items.append(
                    CharacterIdentity(
                        key + ".printed",
                        "sum f(ix,(nk^-1+i')x,0) phi_((nk^-1+i')i^-1, i)",
                        lhs,
                        _sum_reps([f(i * x, (r + j) * x, 0) for x in range(p)], table) * phi(printed_slope, i),
                        expected=None,
                    )
                )
    return items


def l_printed_discrepancies(p: int) -> Set[str]:
    """
    - Description:
        照抄的 L 式子中依特徵標公式不成立者（r < s 為有限斜率，i, j 為單位）：
            φ_{ℓ,i}φ_{ℓ,-i}：Σ f(kx,nx,y) 只在 p = 2 或 nk = 0 時是穩定子之和
            φ_{r,i}φ_{s,j}，i+j ≠ 0：需 r+s ≡ ir+js 且 2(r+s) ≢ 0
            φ_{r,i}φ_{s,-i}：f(0,x,0) 固定 φ_∞，一律不成立（指標為 0 者不列出）
            φ_{r,i}φ_{∞,j}：需 r = 0 或 i = 1，且 2(r+j) ≢ 0
    - Parameters:
        - p: int
    - Return:
        - Set[str]
            CharacterIdentity.key
    """

    keys: Set[str] = set()
    units: List[int] = list(range(1, p))
    for ell, (n, k) in _projective(p):
        for i in units:
            if p != 2 and n * k % p:
                keys.add(f"L.phi({ell},{i})-phi({ell},{-i % p}).printed")
    for r in range(p):
        for s in range(r + 1, p):
            for i in units:
                for j in units:
                    key: str = f"L.phi({r},{i})-phi({s},{j}).printed"
                    if (i + j) % p:
                        if (r + s - i * r - j * s) % p or 2 * (r + s) % p == 0:
                            keys.add(key)
                    elif (i + r + j * s) % p:
                        keys.add(key)
        for i in units:
            for j in units:
                if (r and i != 1) or 2 * (r + j) % p == 0:
                    keys.add(f"L.phi({r},{i})-phi(inf,{j}).printed")
    return keys


G_PRINTED_DISCREPANCIES: Set[str] = {"G.psi^2-printed"}


def printed_discrepancies(table: CharacterTable) -> Set[str]:
    """已知不成立的照抄式；verify 以此比對實際的 discrepancy 集合"""

    if table.group.family == GroupFamily.L:
        return l_printed_discrepancies(table.group.p)
    if table.group.family == GroupFamily.G:
        return set(G_PRINTED_DISCREPANCIES)
    return set()


def _cross_products(table: CharacterTable, names: Sequence[str], rank: int, prefix: str) -> List[CharacterIdentity]:
    # φ_{ℓ1} φ_{ℓ2} = φ_{ℓ3} + f φ_{ℓ3}，f 取使 f φ_{ℓ3} ≠ φ_{ℓ3} 的一次表示（存在即可）
    linear: List[str] = [
        "f(" + ",".join(str((v >> (rank - 1 - j)) & 1) for j in range(rank)) + ")" for v in range(2**rank)
    ]
    items: List[CharacterIdentity] = []
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            third: str = next(name for t, name in enumerate(names) if t not in (a, b))
            lhs: VirtualRep = table.rep(names[a]) * table.rep(names[b])
            base: VirtualRep = table.rep(third)
            rhs: VirtualRep = base * 2
            for label in linear:
                moved: VirtualRep = table.rep(label) * base
                if moved != base and base + moved == lhs:
                    rhs = base + moved
                    break
            items.append(
                CharacterIdentity(
                    f"{prefix}.{names[a]}-{names[b]}",
                    f"{names[a]} {names[b]} = {third} + f {third} with f {third} != {third}",
                    lhs,
                    rhs,
                )
            )
    return items


def l_restrictions(group: FiniteMatrixGroup) -> List[CharacterIdentity]:
    """C_p^{4,L}、C_p^{3,L} 與中心上的限制（基底依具名子群的生成元順序）"""

    table: CharacterTable = character_table(group)
    p: int = group.p
    items: List[CharacterIdentity] = []

    c4: FiniteMatrixGroup = named_subgroup(group, "C4L")
    c3: FiniteMatrixGroup = named_subgroup(group, "C3L")
    center: FiniteMatrixGroup = named_subgroup(group, "ZL")
    t4, t3, tz = character_table(c4), character_table(c3), character_table(center)

    def sig(t: CharacterTable, *exps: int) -> VirtualRep:
        return t.rep(sigma_label([e % p for e in exps]))

    for a in range(p):
        for b in range(p):
            for c in range(p):
                label: str = f"f({a},{b},{c})"
                items.append(CharacterIdentity(f"L.res.C4.{label}", f"{label} -> s1^a s2^b", restrict(table.rep(label), c4, t4), sig(t4, a, b, 0, 0)))
                items.append(CharacterIdentity(f"L.res.C3.{label}", f"{label} -> s1^c", restrict(table.rep(label), c3, t3), sig(t3, c, 0, 0)))
                items.append(CharacterIdentity(f"L.res.Z.{label}", f"{label} -> 1", restrict(table.rep(label), center, tz), tz.one()))

    for ell, (n, k) in _projective(p):
        for i in range(1, p):
            label = f"phi({ell},{i})"
            rep: VirtualRep = table.rep(label)
            if k:
                slope: int = n * pow(k, -1, p) % p
                on_c4 = _sum_reps([sig(t4, k * j, -n * j, i, -i * slope) for j in range(p)], t4)
                on_c3 = _sum_reps([sig(t3, j, -i * slope, i) for j in range(p)], t3)
                on_z = sig(tz, i, -i * slope) * p  # ZL 的基底為 (E14, E24)
            else:
                on_c4 = _sum_reps([sig(t4, 0, j, 0, -i) for j in range(p)], t4)
                on_c3 = _sum_reps([sig(t3, j, -i, 0) for j in range(p)], t3)
                on_z = sig(tz, 0, -i) * p
            items.append(CharacterIdentity(f"L.res.C4.{label}", f"{label} on C_p^(4,L)", restrict(rep, c4, t4), on_c4))
            items.append(CharacterIdentity(f"L.res.C3.{label}", f"{label} on C_p^(3,L)", restrict(rep, c3, t3), on_c3))
            items.append(CharacterIdentity(f"L.res.Z.{label}", f"{label} on Z(L)", restrict(rep, center, tz), on_z))
    return items


def _sum_reps(reps: Sequence[VirtualRep], table: CharacterTable) -> VirtualRep:
    total: VirtualRep = VirtualRep.zero(table)
    for rep in reps:
        total = total + rep
    return total


# -----------------------------------------------------------------------------
# U(4,2)
# -----------------------------------------------------------------------------


def g_identities(table: CharacterTable) -> List[CharacterIdentity]:
    """p = 2 的生成元關係與 ψ 的外冪"""

    def f(a: int, b: int, c: int) -> VirtualRep:
        return table.rep(f"f({a % 2},{b % 2},{c % 2})")

    phi0, phi1, phiinf, psi = (table.rep(name) for name in ("phi0", "phi1", "phiinf", "psi"))
    items: List[CharacterIdentity] = []

    for name, rep, (n, k) in (("phi0", phi0, (0, 1)), ("phi1", phi1, (1, 1)), ("phiinf", phiinf, (1, 0))):
        squares: VirtualRep = _sum_reps([f(k * a, b, -n * a) for a in range(2) for b in range(2)], table)
        items.append(CharacterIdentity(f"G.{name}^2", f"{name}^2 = sum f(ka,b,-na)", rep * rep, squares))
        items.append(CharacterIdentity(f"G.{name}-psi", f"{name} psi = psi + f(0,1,0) psi", rep * psi, psi + f(0, 1, 0) * psi))
    items.extend(_cross_products(table, ["phi0", "phi1", "phiinf"], 3, "G"))

    full_square: VirtualRep = (
        _sum_reps([f(a, 0, b) for a in range(2) for b in range(2)], table)
        + _sum_reps([f(0, 0, a) * rep for a in range(2) for rep in (phi0, phi1)], table)
        + _sum_reps([f(a, 0, 0) * phiinf for a in range(2)], table)
    )
    items.append(CharacterIdentity("G.psi^2", "psi psi_{-1} = sum f(a,0,b) + sum f(0,0,a) phi_(1,l,inf) + sum f(a,0,0) phi_(1,inf,0)", psi * psi, full_square))
    items.append(CharacterIdentity("G.psi^2-printed", "psi^2 = 3 psi + f(0,1,0) psi", psi * psi, psi * 3 + f(0, 1, 0) * psi, expected=None))

    items.append(CharacterIdentity("G.lambda2-phi0", "lambda^2 phi0 = f(1,1,0)", exterior_power(phi0, 2), f(1, 1, 0)))
    items.append(CharacterIdentity("G.lambda2-phiinf", "lambda^2 phiinf = f(0,1,1)", exterior_power(phiinf, 2), f(0, 1, 1)))
    items.append(
        CharacterIdentity(
            "G.lambda2-psi",
            "lambda^2 psi = f(0,0,1) phi0 + f(0,0,1) phi1 + f(1,0,0) phiinf",
            exterior_power(psi, 2),
            f(0, 0, 1) * phi0 + f(0, 0, 1) * phi1 + f(1, 0, 0) * phiinf,
        )
    )
    items.append(CharacterIdentity("G.lambda3-psi", "lambda^3 psi = f(0,1,0) psi", exterior_power(psi, 3), f(0, 1, 0) * psi))
    items.append(CharacterIdentity("G.lambda4-psi", "lambda^4 psi = f(0,1,0)", exterior_power(psi, 4), f(0, 1, 0)))
    return items


ElementFormula = Callable[[np.ndarray], int]


def _formula_rep(sub: FiniteMatrixGroup, formula: ElementFormula) -> VirtualRep:
    chi: ClassFunction = ClassFunction.from_element_function(
        sub, lambda idx: Cyclotomic.from_int(formula(sub.matrix(idx).astype(np.int64)))
    )
    return decompose(chi, character_table(sub))


def _sign(value: int) -> int:
    return -1 if value % 2 else 1


def _d8(first: Tuple[int, int], second: Tuple[int, int], corner: Tuple[int, int]):
    # 嵌入的 D_8：f(1,0)、f(0,1) 讀兩個生成元座標，φ 在兩者皆 0 時為 2·(−1)^{角落}
    def f(a: int, b: int) -> ElementFormula:
        return lambda m: _sign(a * m[first] + b * m[second])

    def phi(m: np.ndarray) -> int:
        return 0 if m[first] % 2 or m[second] % 2 else 2 * _sign(m[corner])

    return f, phi


def g_restrictions(group: FiniteMatrixGroup) -> List[CharacterIdentity]:
    """H_0、H_∞、I_0、I_∞ 與 C_2^{2,G} 上的限制（p = 2）"""

    table: CharacterTable = character_table(group)
    reps = {name: table.rep(name) for name in ("phi0", "phi1", "phiinf", "psi")}
    one: ElementFormula = lambda m: 1

    def plus(*formulas: ElementFormula) -> ElementFormula:
        return lambda m: sum(formula(m) for formula in formulas)

    def times(c: int, formula: ElementFormula) -> ElementFormula:
        return lambda m: c * formula(m)

    catalog = {}
    f, phi = _d8((1, 2), (2, 3), (1, 3))
    catalog["H0"] = {"phi0": plus(one, f(1, 0)), "phi1": phi, "phiinf": phi, "psi": plus(one, f(0, 1), phi)}
    f, phi = _d8((0, 1), (1, 2), (0, 2))
    catalog["Hinf"] = {"phi0": phi, "phi1": phi, "phiinf": plus(one, f(0, 1)), "psi": plus(one, f(1, 0), phi)}
    f, phi = _d8((0, 2), (2, 3), (0, 3))
    catalog["I0"] = {"phi0": times(2, f(1, 0)), "phi1": plus(f(1, 0), f(1, 1)), "phiinf": plus(one, f(0, 1)), "psi": times(2, phi)}
    f, phi = _d8((0, 1), (1, 3), (0, 3))
    catalog["Iinf"] = {"phi0": plus(one, f(1, 0)), "phi1": plus(f(0, 1), f(1, 1)), "phiinf": times(2, f(0, 1)), "psi": times(2, phi)}
    f, _ = _d8((0, 1), (2, 3), (0, 3))
    catalog["C2_2G"] = {
        "phi0": plus(one, f(1, 0)),
        "phi1": plus(one, f(1, 1)),
        "phiinf": plus(one, f(0, 1)),
        "psi": plus(one, f(1, 0), f(0, 1), f(1, 1)),
    }

    items: List[CharacterIdentity] = []
    for label, expectations in catalog.items():
        sub: FiniteMatrixGroup = named_subgroup(group, label)
        sub_table: CharacterTable = character_table(sub)
        for name, formula in expectations.items():
            items.append(
                CharacterIdentity(
                    f"G.res.{label}.{name}",
                    f"{name} restricted to {label}",
                    restrict(reps[name], sub, sub_table),
                    _formula_rep(sub, formula),
                )
            )
    return items
