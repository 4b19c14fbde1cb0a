"""Run the verification suites at small sizes and print their tables.

    EWTAB_WORKERS=4 python demos/counting_tour.py
"""

from ewtableaux.verify import run_suite

TOUR = [
    ("shapes", 4, "EW tableaux per shape against permutations with those excedance bottoms"),
    ("fibonacci", 6, "zero-minimal EW tableaux, split by top row length"),
    ("stirling_top", 6, "top-justified NEW tableaux by number of rows"),
    ("bigdesc", 6, "NEW columns holding a 0 against big descents"),
    ("eulerian", 7, "EW columns holding a 0 against excedances (checked, not proven)"),
]


def main():
    for name, n, about in TOUR:
        report = run_suite(name, n)
        print(f"# {about}")
        print(report.table())
        print()


if __name__ == "__main__":
    main()
