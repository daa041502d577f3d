#!/usr/bin/env python3
"""Smoke test for the `recipro` Python extension.

Builds the extension with cargo, loads it, and spot-checks each family of
bindings against hand values. Run from anywhere:

    python3 python/smoke_test.py
"""

import json
import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build_and_import():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "recipro-python"],
        cwd=REPO,
        check=True,
    )
    built = REPO / "target" / "release" / "librecipro.so"
    if not built.exists():  # macOS fallback
        built = REPO / "target" / "release" / "librecipro.dylib"
    staging = Path(tempfile.mkdtemp(prefix="recipro-py-"))
    shutil.copy(built, staging / "recipro.so")
    sys.path.insert(0, str(staging))
    import recipro

    return recipro


CHECKS = []


def check(name):
    def wrap(fn):
        CHECKS.append((name, fn))
        return fn

    return wrap


def close(a, b, tol=1e-12):
    scale = max(abs(a), abs(b), 1e-300)
    assert abs(a - b) <= tol * scale, f"{a!r} != {b!r} (tol {tol})"


@check("scalar composition")
def _(r):
    close(r.add_velocity(0.5, 0.5), 0.8)
    close(r.add_slowness(2.0, 2.0), 1.25)
    assert r.add_velocity(1.0, 0.3) == 1.0
    close(r.reciprocate_velocity(0.5), 2.0)
    assert r.reciprocate_velocity(0.0) == math.inf
    close(r.scale_velocity(2.0, 0.5), 0.8)
    close(r.scale_slowness(2.0, 2.0), 1.25)
    try:
        r.add_velocity(1.0, -1.0)
    except ValueError as e:
        assert "DegenerateSum" in str(e)
    else:
        raise AssertionError("degenerate pair must raise")


@check("transfer rates")
def _(r):
    close(r.rate_of_transfer(0.5, 1.0, 1.0), 0.5)
    close(r.reciprocal_rate(2.0, 1.0, 1.0), 2.0)
    assert r.heisenberg_holds(2.0, 1.0, 1.0)
    assert not r.heisenberg_holds(2.0, 0.1, 1.0)


@check("symmetric difference and solution families")
def _(r):
    d = r.symmetric_difference([0j, 1 + 0j, 2 + 0j, 3 + 0j], 0.25, 1)
    close(d.real, 4.0)
    decay = r.BoundedDecay(1.0, 1e6)
    close(decay.f1(1.0), math.exp(-1.0), 1e-11)
    close(decay.effective_energy(), 1.0, 1e-11)
    osc = r.Oscillator(1.0, 1e-4)
    g1 = osc.g1(1.0)
    assert abs(g1 - complex(math.cos(1.0), -math.sin(1.0))) < 1e-7
    close(abs(osc.g2(17.3)), 1.0)
    close(r.well_energy(1, 1.0, 1.0, 1.0), math.pi**2 / 2)
    y2, cross, w2 = r.oscillator_energy_terms(0, 1.0, 1.0)
    close(y2 + cross + w2, r.effective_frequency(0, 1.0, 1.0) ** 2)


@check("radiation")
def _(r):
    close(r.average_energy_planck(1.0, 1.0), 1.0 / (math.e - 1.0))
    close(r.average_energy_fermi(1.0, 1.0, "odd"), 1.0 / (math.e + 1.0))
    bounded = r.average_energy_bounded(1.0, 1.0, 1e3)
    assert abs(bounded - 1.0 / (math.e - 1.0)) < 1e-3
    close(r.spectral_intensity(1.0, 1.0), 1.0 / math.pi**2)
    rows = r.spectrum_rows(1.0, 4.0, 3, 1.0, "planck")
    assert [row[0] for row in rows] == [1.0, 2.0, 4.0]
    csv = r.spectrum_csv(1.0, 4.0, 3, 1.0, "planck")
    assert csv.splitlines()[0] == "omega,avg_energy,intensity"


@check("vector composition")
def _(r):
    w = r.compose_vectors((0.5, 0, 0), (0, 0.5, 0), difference=True)
    close(w[0].real, 0.5)
    close(w[1].real, -0.5)
    close(w[2].imag, -0.25)
    wt = r.reciprocal_vector((0.3, -0.2, 0.5), (0, 0.6, 0.8))
    dot = sum(a * b for a, b in zip((0.3, -0.2, 0.5), wt))
    close(dot.real, 1.0)
    assert abs(dot.imag) < 1e-12
    residual = r.associativity_residual(
        (0.5, 0.1, -0.3), (-0.2, 0.6, 0.1), (0.3, -0.3, 0.4)
    )
    assert residual <= 1e-12
    same = r.general_compose((0.3, 0.1, -0.2), (0.3, 0.1, -0.2), (0, 0, 1), 0.7)
    assert max(abs(z) for z in same) < 1e-13


@check("verification report")
def _(r):
    report = json.loads(r.verify_json(seed=42, trials=2000))
    assert report["seed"] == 42
    statuses = {entry["id"]: entry["status"] for entry in report["entries"]}
    assert "fail" not in statuses.values()
    assert statuses["tilde_per_vector"] == "ambiguous"
    assert r.verify_json(seed=42, trials=2000) == r.verify_json(seed=42, trials=2000)


def main():
    recipro = build_and_import()
    for name, fn in CHECKS:
        fn(recipro)
        print(f"ok: {name}")
    print(f"all {len(CHECKS)} smoke checks passed")


if __name__ == "__main__":
    main()
