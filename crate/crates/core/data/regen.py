#!/usr/bin/env python3
"""Regenerate the embedded Unicode tables.

Usage:
    python3 regen.py --scripts Scripts.txt --confusables confusables.txt

Inputs are the official Unicode Character Database `Scripts.txt` and the
UTS #39 `confusables.txt` (https://www.unicode.org/Public/). Outputs:

    ../src/unicode/script_table.rs   interval table for the tracked scripts
    confusables.txt                  curated confusables subset

The curated subset keeps single code points from the Latin, Greek and
Cyrillic scripts (plus ASCII) whose prototype is a short ASCII
alphanumeric sequence and that are stable under canonical decomposition.
"""

import argparse
import os
import unicodedata

TRACKED = ["Latin", "Greek", "Cyrillic", "Arabic", "Hebrew", "Han", "Common", "Inherited"]
CONFUSABLE_SOURCE_SCRIPTS = {"Latin", "Greek", "Cyrillic"}

HERE = os.path.dirname(os.path.abspath(__file__))


def parse_scripts(path):
    ranges = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            cps, script = [p.strip() for p in line.split(";")[:2]]
            if ".." in cps:
                lo, hi = cps.split("..")
            else:
                lo = hi = cps
            ranges.append((int(lo, 16), int(hi, 16), script))
    ranges.sort()
    return ranges


def merge(ranges):
    out = []
    for lo, hi, s in ranges:
        if out and out[-1][2] == s and out[-1][1] + 1 == lo:
            out[-1] = (out[-1][0], hi, s)
        else:
            out.append((lo, hi, s))
    return out


def script_lookup(ranges):
    import bisect

    starts = [r[0] for r in ranges]

    def lookup(cp):
        i = bisect.bisect_right(starts, cp) - 1
        if i >= 0 and ranges[i][0] <= cp <= ranges[i][1]:
            return ranges[i][2]
        return "Unknown"

    return lookup


def write_script_table(ranges, version):
    tracked = merge([r for r in ranges if r[2] in TRACKED])
    out = os.path.join(HERE, "..", "src", "unicode", "script_table.rs")
    with open(out, "w", encoding="utf-8") as f:
        f.write("// Generated by data/regen.py from Unicode Scripts.txt")
        f.write(f" ({version}). Do not edit.\n\n" if version else ". Do not edit.\n\n")
        f.write("use super::script::Script;\n\n")
        f.write("pub(crate) const SCRIPT_RANGES: &[(u32, u32, Script)] = &[\n")
        for lo, hi, s in tracked:
            f.write(f"    (0x{lo:04X}, 0x{hi:04X}, Script::{s}),\n")
        f.write("];\n")
    return len(tracked)


def parse_confusables(path):
    entries = []
    with open(path, encoding="utf-8-sig") as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = [p.strip() for p in line.split(";")]
            src = int(fields[0], 16)
            tgt = [int(t, 16) for t in fields[1].split()]
            entries.append((src, tgt))
    return entries


def keep(src, tgt, lookup):
    if src > 0xFFFF:
        return False
    ch = chr(src)
    if unicodedata.normalize("NFD", ch) != ch:
        return False
    if src >= 0x80 and lookup(src) not in CONFUSABLE_SOURCE_SCRIPTS:
        return False
    if not (1 <= len(tgt) <= 2):
        return False
    return all(t < 0x80 and chr(t).isalnum() for t in tgt)


def write_confusables(entries, lookup, version):
    kept = [(s, t) for s, t in entries if keep(s, t, lookup)]
    out = os.path.join(HERE, "confusables.txt")
    with open(out, "w", encoding="utf-8") as f:
        f.write("# Curated confusables subset for identifier skeletons.\n")
        f.write(f"# Source: Unicode confusables.txt {version}\n" if version else "# Source: Unicode confusables.txt\n")
        f.write("# Format: <source hex>;<space-separated prototype hex list>\n")
        f.write("# Regenerate with data/regen.py.\n")
        for s, t in kept:
            names = " ".join(unicodedata.name(chr(c), "?") for c in t)
            f.write(f"{s:04X};{' '.join('%04X' % c for c in t)}\t# {unicodedata.name(chr(s), '?')} -> {names}\n")
    return len(kept)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--scripts", required=True)
    ap.add_argument("--confusables", required=True)
    ap.add_argument("--scripts-version", default="")
    ap.add_argument("--confusables-version", default="")
    args = ap.parse_args()
    ranges = parse_scripts(args.scripts)
    n = write_script_table(ranges, args.scripts_version)
    m = write_confusables(parse_confusables(args.confusables), script_lookup(ranges), args.confusables_version)
    print(f"script intervals: {n}, confusable entries: {m}")


if __name__ == "__main__":
    main()
