"""Run every correspondence check over all rectangles up to a genus ceiling,
on several loop-length templates, and print a table of counts and failures."""

import argparse
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from tropchain import ChainOfLoops, is_generic, make_chain
from tropchain.verify import verify_sweep


@dataclass(frozen=True)
class Template:
    name: str
    loop: Callable[[int, int], tuple[Fraction, Fraction]]

    def chain(self, g: int) -> ChainOfLoops:
        return make_chain([self.loop(g, i) for i in range(1, g + 1)])


TEMPLATES = (
    Template("ell=2g, m=1", lambda g, i: (Fraction(2 * g), Fraction(1))),
    Template("ell=(2g+1)/3, m=1/3", lambda g, i: (Fraction(2 * g + 1, 3), Fraction(1, 3))),
    Template("ell=2g+i, m=2 (varying)", lambda g, i: (Fraction(4 * g + 2 * i - 1), Fraction(2))),
    Template("ell=1/7, m=2g (short ell)", lambda g, i: (Fraction(1, 7), Fraction(2 * g))),
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ceiling", type=int, default=10)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    print(f"{'template':28} {'tableaux':>9} {'failures':>9} {'seconds':>8}")
    for template in TEMPLATES:
        if not all(is_generic(template.chain(g)) for g in range(1, args.ceiling + 1)):
            print(f"{template.name:28} skipped: not generic")
            continue
        start = time.perf_counter()
        rep = verify_sweep(args.ceiling, template.chain, workers=args.workers)
        elapsed = time.perf_counter() - start
        print(f"{template.name:28} {rep.total:>9} {rep.failure_count:>9} {elapsed:>8.2f}")
        for shape in rep.shapes:
            for failure in shape.failures[:3]:
                print(f"    {shape.m}x{shape.n} {failure}")


if __name__ == "__main__":
    main()
