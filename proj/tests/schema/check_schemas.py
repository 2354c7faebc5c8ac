"""Run the curvepi CLI in JSON mode and validate every document against the
shipped schemas. Usage: check_schemas.py CURVEPI SCHEMA_DIR FIXTURE_DIR"""

import json
import pathlib
import subprocess
import sys

import jsonschema


def run(binary, args, stdin=None):
    proc = subprocess.run([binary, *args], input=stdin, capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout


def main():
    binary, schema_dir, fixture_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}

    cases = [
        ("ab", ["ab", "<a,b | b=a b^4 a, a^2=b^2 a^3 b^2>", "--json"], 0),
        ("ab", ["ab", "<a,b,c | >", "--json"], 0),
        ("tc", ["tc", "<a,b | a^2, b^3, (ab)^5>", "--json"], 0),
        ("tc", ["tc", "<a,b | a^2, b^3, (ab)^5>", "--subgroup", "a", "--json"], 0),
        ("tc", ["tc", "<a,b | >", "--max-cosets", "40", "--json"], 1),
        ("rs", ["rs", "<a,b | >", "--subgroup", "a,b^2,b a b^-1", "--json"], 0),
        ("rs", ["rs", "<a,b,x | [a,b], x^2>", "--subgroup", "a,b,x^2,x a x^-1,x b x^-1", "--simplify", "--json"], 0),
        ("rs", ["rs", "<a | >", "--subgroup", "a^2", "--max-cosets", "1", "--json"], 1),
        ("verify", ["verify", "--json"], 0),
        ("verify", ["verify", "--only", "V2", "--json", "--timings"], 0),
        ("verify", ["verify", "--only", "V3", "--budget", "10", "--json"], 1),
    ]
    for tag in ["free:3", "braid:4", "spherebraid3", "artin:333", "coxeter:233", "raag:3:0-1,1-2",
                "toric:3,4", "toriceven:2", "gpoly:1,1,1", "gpolymod:3:1,1", "gr:2,3,5", "triangle:2,3,7",
                "surface:2", "surfext:1,2", "cyclic:5", "abelian:1:2,4", "prod(free:2;cyclic:3)",
                "fprod(cyclic:2;cyclic:3)", "quintic:C4_3A2"]:
        cases.append(("catalog", ["catalog", tag, "--json"], 0))
    for script in sorted((fixture_dir / "blowup").glob("*.json")):
        cases.append(("blowup", ["blowup", "--script", str(script), "--json"], None))
    for ct in sorted((fixture_dir / "types").glob("*.json")) + [fixture_dir / "four_concurrent_lines.json"]:
        cases.append(("classify", ["classify", "--type", str(ct), "--json"], None))

    failures = 0
    for schema, args, want_exit in cases:
        code, out = run(binary, args)
        label = " ".join(args)
        try:
            doc = json.loads(out)
            jsonschema.validate(doc, schemas[schema])
            if want_exit is not None and code != want_exit:
                raise AssertionError(f"exit {code}, expected {want_exit}")
        except Exception as exc:  # noqa: BLE001
            failures += 1
            print(f"FAIL {label}: {exc}")
            continue
        print(f"ok   {label}")

    # Text and JSON modes carry the same content.
    for pres in ["<a,b | [a,b], a^6, b^4>", "<a | a^5>", "<a,b | b=a b^4 a, a^2=b^2 a^3 b^2>"]:
        _, text = run(binary, ["ab", pres])
        _, js = run(binary, ["ab", pres, "--json"])
        if text.strip() != json.loads(js)["text"]:
            failures += 1
            print(f"FAIL ab text/json disagree on {pres}")

    print(f"{len(cases)} documents checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
