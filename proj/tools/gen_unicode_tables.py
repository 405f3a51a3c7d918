#!/usr/bin/env python3
"""Generates src/unicode_tables.inc from Python's unicodedata.

Emits two tables:
  * coarse general-category ranges (letter, mark, digit, punctuation,
    symbol, space) used by the classifier and the tokenizer;
  * compatibility folds for the Arabic presentation-form blocks
    (U+FB50..U+FDFF, U+FE70..U+FEFF).

Usage: gen_unicode_tables.py > src/unicode_tables.inc
"""

import sys
import unicodedata


def coarse(cp):
    ch = chr(cp)
    cat = unicodedata.category(ch)
    if cat[0] == "L":
        return "kLetter"
    if cat[0] == "M":
        return "kMark"
    if cat == "Nd":
        return "kDigit"
    if cat[0] == "P":
        return "kPunct"
    if cat[0] == "S" or cat in ("No", "Nl"):
        return "kSymbol"
    if cat in ("Zs", "Zl", "Zp") or ch in "\t\n\v\f\r\x1c\x1d\x1e\x1f\x85":
        return "kSpace"
    return None


def ranges():
    out = []
    start, cur = None, None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            c = None
        else:
            c = coarse(cp)
        if c != cur:
            if cur is not None:
                out.append((start, cp - 1, cur))
            start, cur = cp, c
    if cur is not None:
        out.append((start, 0x10FFFF, cur))
    return out


def presentation_folds():
    folds = []
    blocks = list(range(0xFB50, 0xFE00)) + list(range(0xFE70, 0xFF00))
    for cp in blocks:
        dec = unicodedata.decomposition(chr(cp))
        if not dec.startswith("<"):
            continue
        tag, _, rest = dec.partition(" ")
        if tag not in ("<initial>", "<medial>", "<final>", "<isolated>", "<compat>"):
            continue
        seq = [int(h, 16) for h in rest.split()]
        # Forms whose fold carries a space (isolated harakat, long
        # honorific ligatures) would change word boundaries; skip them.
        if 0x20 in seq:
            continue
        folds.append((cp, seq))
    return folds


def main():
    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py from Unicode %s. Do not edit.\n\n"
      % unicodedata.unidata_version)
    w("constexpr CategoryRange kCategoryRanges[] = {\n")
    for lo, hi, c in ranges():
        w("    {0x%04X, 0x%04X, %s},\n" % (lo, hi, c))
    w("};\n\n")
    folds = presentation_folds()
    flat = []
    w("constexpr PresentationFold kPresentationFolds[] = {\n")
    for cp, seq in folds:
        w("    {0x%04X, %d, %d},\n" % (cp, len(flat), len(seq)))
        flat.extend(seq)
    w("};\n\n")
    w("constexpr char32_t kPresentationFoldData[] = {\n")
    for i in range(0, len(flat), 10):
        w("    " + ", ".join("0x%04X" % c for c in flat[i:i + 10]) + ",\n")
    w("};\n")


if __name__ == "__main__":
    main()
