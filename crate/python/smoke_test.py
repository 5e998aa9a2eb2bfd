"""Smoke test for the pynsfam extension module.

Build the module first, e.g. with `maturin develop -m crates/py/Cargo.toml`,
or copy the cdylib from `cargo build --release -p nsfam-python --features
extension-module` next to this script as `pynsfam.so`.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

import pynsfam  # noqa: E402

DATA = pathlib.Path(__file__).resolve().parents[1] / "crates" / "core" / "tests" / "data"


def main():
    cubic = pynsfam.RationalMap.from_file(str(DATA / "eqH.json"))
    surface = pynsfam.Surface.analyze(cubic)
    assert str(surface.h) == "3e0-e1-e2-e3-e4-e5", surface.h
    assert surface.sigma == list(range(6))

    lines = surface.families(1, 1, 0)
    assert len(lines) == 8, lines
    assert sum(not f.reachable for f in lines) == 4

    conics = surface.families(2, 2, 0)
    assert {str(f.cls) for f in conics} >= {"e0-e1", "e0-e4"}

    h = pynsfam.DivClass.parse("4e0-e1-e2-e3-e4-e5-e6-e7-e8")
    assert len(pynsfam.classes(h, 2, -1)) == 28

    roman = pynsfam.RationalMap(["x0^2+x1^2+x2^2", "-x0*x1", "-x1*x2", "x0*x2"])
    sphere = roman.to_sphere()
    assert len(sphere.components) == 5 and sphere.degree == 4
    circles = pynsfam.Surface.analyze(sphere).families(2, 1, 0, real=True)
    assert sorted(str(f.cls) for f in circles) == ["e0-e1-e2", "e0-e3-e4", "e0-e5-e6", "e0-e7-e8"]

    report = json.loads(pynsfam.Surface.analyze(sphere).families_json(2, 1, 0, real=True))
    assert report["surface"]["field"] == "t^2-t+1"

    try:
        pynsfam.RationalMap(["x0+", "x1", "x2"])
    except pynsfam.NsfamError:
        pass
    else:
        raise AssertionError("parse error not raised")

    print("ok")


if __name__ == "__main__":
    main()
