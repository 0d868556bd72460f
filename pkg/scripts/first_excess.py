#!/usr/bin/env python3
"""Compare quotient characters with the closed forms for the first excess degree."""

from hopfaut import verify


def main() -> None:
    for c in verify.first_excess():
        print(f"{'ok  ' if c.ok else 'DIFF'} {c.name}: {c.detail}")


if __name__ == "__main__":
    main()
