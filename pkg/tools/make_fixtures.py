"""Regenerate the bundled zero fixtures.

Zeros of zeta_K for K = Q(sqrt5), Q(i) are the union of the zeros of zeta and
of L(s, chi) for the quadratic character of K. L-zeros are located as sign
changes of the (real) completed L-function on the critical line and refined
with an Anderson bracketing step.
"""

import json
import sys
from pathlib import Path

from mpmath import mp, mpf, mpc, dirichlet, gamma, pi, findroot, zetazero, nstr, log, e

mp.dps = 30
HEIGHT = 40
OUT = Path(__file__).resolve().parents[1] / "src" / "zetax" / "zerodata" / "fixtures"


def riemann_zeros(height):
    out, n = [], 1
    while True:
        g = zetazero(n).imag
        if g > height:
            return out
        out.append(g)
        n += 1


def completed_l(chi, q, parity):
    def lam(t):
        s = mpc(0.5, t)
        v = (q / pi) ** ((s + parity) / 2) * gamma((s + parity) / 2) * dirichlet(s, chi)
        return v.real
    return lam


def l_zeros(chi, q, parity, height, step=mpf("0.01")):
    lam = completed_l(chi, q, parity)
    out = []
    t, prev = mpf("0.05"), lam(mpf("0.05"))
    while t < height:
        t2 = t + step
        cur = lam(t2)
        if prev * cur < 0:
            out.append(findroot(lam, (t, t2), solver="anderson"))
        t, prev = t2, cur
    return out


def smooth_count(q, height):
    # (T/2pi) log(qT/(2 pi e)) for primitive chi mod q
    return height / (2 * pi) * log(q * height / (2 * pi * e))


def dump(name, label, n_k, r1, r2, d_k, ordinates, source):
    doc = {
        "label": label,
        "n_K": n_k,
        "r1": r1,
        "r2": r2,
        "log_disc": {"d_K": d_k},
        "completeness_height": float(HEIGHT),
        "ordinates": [float(nstr(g, 15)) for g in sorted(ordinates)],
        "real_ordinate_multiplicity": 0,
        "source": source,
    }
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    print(path, len(ordinates), file=sys.stderr)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    zeta_zeros = riemann_zeros(HEIGHT)
    dump("riemann", "1.1.1.1", 1, 1, 0, 1, zeta_zeros, "mpmath.zetazero, 30 digits")
    chi5 = l_zeros([0, 1, -1, -1, 1], 5, 0, HEIGHT)
    print("chi5", len(chi5), nstr(smooth_count(5, HEIGHT), 5), file=sys.stderr)
    dump("q_sqrt5", "2.2.5.1", 2, 2, 0, 5, zeta_zeros + chi5,
         "zeta zeros (mpmath.zetazero) + L(s, chi_5) critical-line sign-change scan, step 0.01")
    chi4 = l_zeros([0, 1, 0, -1], 4, 1, HEIGHT)
    print("chi4", len(chi4), nstr(smooth_count(4, HEIGHT), 5), file=sys.stderr)
    dump("q_i", "2.0.4.1", 2, 0, 1, 4, zeta_zeros + chi4,
         "zeta zeros (mpmath.zetazero) + L(s, chi_-4) critical-line sign-change scan, step 0.01")


if __name__ == "__main__":
    main()
