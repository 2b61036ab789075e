#!/usr/bin/env python3
"""Print the bidegree (3,3) classification table for the ellipsoid.

Every rooted oval scheme up to five ovals is run through the halves
congruence; the table marks rejected schemes with the rejecting theorem
and annotates survivors against the construction catalog.
"""

import argparse

from realcurves.classify import classify_ellipsoid


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=3, help="odd bidegree entry")
    parser.add_argument("--jmax", type=int, default=None)
    args = parser.parse_args()

    result = classify_ellipsoid(args.d, jmax=args.jmax)
    width = max(len(e.scheme) for e in result.entries)
    for entry in result.entries:
        flag = "admissible" if entry.admissible else "rejected  "
        notes = ";".join(entry.notes)
        print(f"{entry.scheme.ljust(width)}  ovals={entry.ovals}  {flag}  {notes}")
    print()
    print(f"{len(result.survivors())} admissible, {len(result.rejected())} rejected")


if __name__ == "__main__":
    main()
