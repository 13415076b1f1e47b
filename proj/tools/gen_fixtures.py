# Copyright 2026 The uccc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Writes the bundled model fixtures under fixtures/.

Integrals are hand-built active-space stand-ins. Each model keeps the
orbital irreps of its molecule and a core energy chosen so that the
ground state of the reference symmetry sector lands on a target energy.
"""

import argparse
import json
import pathlib

import numpy as np

GROUPS = {
    "C2v": (["A1", "B1", "B2", "A2"], [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]]),
    "D2": (["A", "B3", "B2", "B1"], [[1, 1, 1, 1], [1, -1, -1, 1], [1, -1, 1, -1], [1, 1, -1, -1]]),
    "D2h": (
        ["Ag", "B3u", "B2u", "B1g", "B1u", "B2g", "B3g", "Au"],
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, -1, -1, 1, -1, 1, 1, -1],
            [1, -1, 1, -1, -1, 1, -1, 1],
            [1, 1, -1, -1, 1, 1, -1, -1],
            [1, 1, -1, -1, -1, -1, 1, 1],
            [1, -1, 1, -1, 1, -1, 1, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, 1, 1, 1, -1, -1, -1, -1],
        ],
    ),
}


def characters(group, irreps):
    names, table = GROUPS[group]
    return np.array([table[names.index(x)] for x in irreps])


def symmetrize(g):
    out = np.zeros_like(g)
    for perm in ["pqrs", "qprs", "pqsr", "qpsr", "rspq", "srpq", "rsqp", "srqp"]:
        out += np.einsum("pqrs->" + perm, g)
    return out / 8.0


def jk_integrals(n, J, K):
    """(pp|qq) = J[p,q] and (pq|pq) = (pq|qp) = K[p,q] for p != q."""
    g = np.zeros((n, n, n, n))
    for p in range(n):
        for q in range(n):
            g[p, p, q, q] = J[p][q]
            if p != q:
                g[p, q, p, q] = g[p, q, q, p] = K[p][q]
    return g


def fock_hamiltonian(h, g, core):
    """Dense Hamiltonian on 2n qubits, spin orbitals interleaved alpha/beta."""
    n = h.shape[0]
    m = 2 * n
    dim = 1 << m
    I2 = np.eye(2)
    Z = np.diag([1.0, -1.0])
    lower = np.array([[0.0, 1.0], [0.0, 0.0]])

    def ann(j):
        mat = np.array([[1.0]])
        for q in reversed(range(m)):
            f = Z if q < j else (lower if q == j else I2)
            mat = np.kron(mat, f)
        return mat

    a = [ann(j) for j in range(m)]
    ad = [x.T for x in a]
    H = core * np.eye(dim)
    for p in range(m):
        for q in range(m):
            if p % 2 == q % 2 and h[p // 2, q // 2] != 0.0:
                H += h[p // 2, q // 2] * ad[p] @ a[q]
    for p in range(m):
        for q in range(m):
            for r in range(m):
                for s in range(m):
                    if p % 2 != q % 2 or r % 2 != s % 2:
                        continue
                    v = g[p // 2, q // 2, r // 2, s // 2]
                    if v != 0.0:
                        H += 0.5 * v * ad[p] @ ad[r] @ a[s] @ a[q]
    return H


def sector_basis(n, occ, chars):
    m = 2 * n
    ref = sum(1 << i for i, o in enumerate(occ) if o)

    def key(b):
        na = sum((b >> (2 * p)) & 1 for p in range(n))
        nb = sum((b >> (2 * p + 1)) & 1 for p in range(n))
        sym = np.ones(chars.shape[1], dtype=int)
        for i in range(m):
            if (b >> i) & 1:
                sym = sym * chars[i // 2]
        return na, nb, tuple(sym)

    want = key(ref)
    return [b for b in range(1 << m) if key(b) == want]


def sector_ground(model):
    n = model["n_spin_orbitals"] // 2
    h = np.array(model["h_pq"])
    g = np.array(model["g_pqrs"])
    H = fock_hamiltonian(h, g, model["core_energy"])
    basis = sector_basis(n, model["hf_occupation"], characters(model["point_group"], model["irreps"]))
    w, v = np.linalg.eigh(H[np.ix_(basis, basis)])
    return w, v, basis, H


def finish(name, group, irreps, occ, h, g, target, dipoles=None):
    model = {
        "name": name,
        "n_spin_orbitals": 2 * len(irreps),
        "hf_occupation": occ,
        "point_group": group,
        "irreps": irreps,
        "core_energy": 0.0,
        "integral_convention": "chemist",
        "h_pq": h.tolist(),
        "g_pqrs": g.tolist(),
    }
    w, _, _, _ = sector_ground(model)
    model["core_energy"] = float(target - w[0])
    if dipoles is not None:
        for axis, mat in zip("xyz", dipoles):
            model["dipole_" + axis] = mat.tolist()
    return model


def h2():
    h = np.array([[-1.252477495, 0.0], [0.0, -0.475934275]])
    J = [[0.674493166, 0.663472101], [0.663472101, 0.697398010]]
    K = [[0.0, 0.181287518], [0.181287518, 0.0]]
    g = jk_integrals(2, J, K)
    z = np.zeros((2, 2))
    mu_z = np.array([[0.0, 0.9278], [0.9278, 0.0]])
    m = finish("H2", "D2h", ["Ag", "B1u"], [1, 1, 0, 0], h, g, -1.137270174, (z, z, mu_z))
    return m


def ch4():
    # Relative to the reference determinant: singlet single excitations at
    # 0.8594, pair states at 1.6706 +- K12, pair coupling sqrt(2) K01.
    e_up, corr, s_anti = 1.715 - 0.0026, -0.0026, 1.634 - 0.0026
    k01 = np.sqrt(-corr * e_up / 2.0)
    d_sym = e_up + corr
    d = 0.5 * (d_sym + s_anti)
    k12 = 0.5 * (d_sym - s_anti)
    h00, j00, j11, j12 = -1.45, 0.62, 0.56, 0.50
    h11 = 0.5 * (d - j11 + 2 * h00 + j00)
    j01 = (0.862 + corr) - (h11 - h00) - k01 + j00
    h = np.diag([h00, h11, h11])
    J = [[j00, j01, j01], [j01, j11, j12], [j01, j12, j11]]
    K = [[0.0, k01, k01], [k01, 0.0, k12], [k01, k12, 0.0]]
    g = jk_integrals(3, J, K)
    model = finish("CH4", "D2", ["B3", "B1", "B2"], [1, 1, 0, 0, 0, 0], h, g, -39.7302)
    # Transition dipoles sized so the two degenerate singlets carry 0.59 together.
    eps = 0.862
    w, v, basis, H = sector_ground(model)
    psi0 = np.zeros(H.shape[0])
    psi0[basis] = v[:, 0]
    unit = np.zeros((3, 3))
    unit[0, 1] = unit[1, 0] = 1.0
    mu = fock_hamiltonian(unit, np.zeros((3, 3, 3, 3)), 0.0)
    ew, ev = np.linalg.eigh(H)
    block = ev[:, np.abs(ew - (w[0] + eps)) < 1e-8]
    t2 = float(np.sum((block.T @ mu @ psi0) ** 2))
    dval = np.sqrt(0.295 / (2.0 * eps / 3.0 * t2))
    mx = np.zeros((3, 3))
    my = np.zeros((3, 3))
    mx[0, 1] = mx[1, 0] = dval
    my[0, 2] = my[2, 0] = dval
    for axis, mat in zip("xyz", (mx, my, np.zeros((3, 3)))):
        model["dipole_" + axis] = mat.tolist()
    return model


def generic(name, group, irreps, occ, diag, target, seed, scale=0.03):
    """Diagonal-dominant integrals with symmetry-allowed off-diagonal noise."""
    rng = np.random.default_rng(seed)
    n = len(irreps)
    chars = characters(group, irreps)
    h = np.diag(diag)
    for p in range(n):
        for q in range(p):
            if np.all(chars[p] * chars[q] == 1):
                h[p, q] = h[q, p] = scale * rng.uniform(-1, 1)
    J = [[0.65 - 0.04 * abs(p - q) - 0.02 * (p + q) for q in range(n)] for p in range(n)]
    K = np.zeros((n, n))
    for p in range(n):
        for q in range(p):
            K[p, q] = K[q, p] = 0.06 + 0.02 * rng.uniform()
    base = jk_integrals(n, J, K)
    noise = rng.uniform(-1, 1, size=(n, n, n, n)) * scale * 0.5
    for idx in np.ndindex(n, n, n, n):
        if not np.all(np.prod(chars[list(idx)], axis=0) == 1):
            noise[idx] = 0.0
    g = base + symmetrize(noise)
    return finish(name, group, irreps, occ, h, g, target)


def fcidump(model, orbsym):
    n = model["n_spin_orbitals"] // 2
    h = np.array(model["h_pq"])
    g = np.array(model["g_pqrs"])
    nelec = sum(model["hf_occupation"])
    lines = [" &FCI NORB=%d,NELEC=%d,MS2=0," % (n, nelec), "  ORBSYM=" + ",".join(map(str, orbsym)) + ",", "  ISYM=1,", " &END"]
    for i in range(n):
        for j in range(i + 1):
            for k in range(n):
                for l in range(k + 1):
                    if i * (i + 1) // 2 + j < k * (k + 1) // 2 + l:
                        continue
                    if g[i, j, k, l] != 0.0:
                        lines.append("%.17g %d %d %d %d" % (g[i, j, k, l], i + 1, j + 1, k + 1, l + 1))
    for i in range(n):
        for j in range(i + 1):
            if h[i, j] != 0.0:
                lines.append("%.17g %d %d 0 0" % (h[i, j], i + 1, j + 1))
    lines.append("%.17g 0 0 0 0" % model["core_energy"])
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures"))
    ap.add_argument("--check", action="store_true", help="print sector spectra")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    models = {
        "h2": h2(),
        "ch4": ch4(),
        "ch3": generic("CH3", "C2v", ["A1", "B1", "A1"], [1, 1, 1, 0, 0, 0], [-1.60, -1.15, -0.35], -39.08, 3),
        "oh": generic("OH", "C2v", ["A1", "B1", "A1"], [1, 1, 1, 0, 0, 0], [-1.70, -1.25, -0.30], -74.36, 5),
        "h2o": generic("H2O", "C2v", ["B1", "A1", "B2"], [1, 1, 0, 0, 0, 0], [-1.55, -0.42, -0.30], -75.01, 7),
        "ts": generic("CH3-H-OH", "C2v", ["A1", "B1", "A1"], [1, 1, 1, 0, 0, 0], [-1.50, -1.05, -0.45], -113.97, 11),
    }
    for key, model in models.items():
        (out / (key + ".json")).write_text(json.dumps(model, indent=1) + "\n")
        if args.check:
            w, _, basis, H = sector_ground(model)
            full = np.linalg.eigvalsh(H)
            print(key, "sector dim", len(basis), "E", np.round(w - w[0], 6)[:6], "E0 %.6f" % w[0], "full min %.6f" % full[0])
    (out / "h2.fcidump").write_text(fcidump(models["h2"], [1, 5]))


if __name__ == "__main__":
    main()
