"""Write a realization document for every family into docs/examples/."""

import argparse
from pathlib import Path

from koebe.documents import save_realization
from koebe.families import EXACT_BIPYRAMIDS, FAMILY_NAMES, family


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "docs" / "examples"))
    out = Path(p.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)
    for name in FAMILY_NAMES:
        if name == "bipyramid":
            for k in EXACT_BIPYRAMIDS:
                save_realization(family(name, k=k, exact=True), out / f"bipyramid_{k}_exact.json")
            save_realization(family(name, k=5), out / "bipyramid_5_float.json")
            continue
        save_realization(family(name, exact=True), out / f"{name}_exact.json")
        save_realization(family(name), out / f"{name}_float.json")
    (out / "stack_program.json").write_text('{"base": "tetrahedron", "steps": [[0, 1, 2], [0, 1, 4], [1, 2, 4]]}\n')
    print(f"wrote {len(list(out.glob('*.json')))} documents to {out}")


if __name__ == "__main__":
    main()
