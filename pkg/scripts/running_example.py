"""Walk the genus-6 example through every map and print each stage."""

import argparse
from fractions import Fraction

from tropchain import (
    RectTableau,
    dual_reduce,
    evacuate,
    phi,
    rank,
    simulate_reflection,
    tableau_to_path,
    transpose,
    underline_to_raw,
    uniform_chain,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ell", default="10", help="length ell_i of every loop")
    parser.add_argument("--m", default="1", help="length m_i of every loop")
    args = parser.parse_args()

    graph = uniform_chain(6, Fraction(args.ell), Fraction(args.m))
    t = RectTableau.from_rows([[1, 3, 4], [2, 5, 6]])
    c = phi(t, graph)
    raw = underline_to_raw(c)
    sim = simulate_reflection(c)
    dual = dual_reduce(c)

    print(f"tableau           {t.to_lists()}")
    print(f"path              {list(tableau_to_path(t).points)}")
    print(f"phi               ({c.head}; {', '.join(map(str, c.xu))})")
    print(f"raw               ({raw.d0}; {', '.join(map(str, raw.x))})")
    print(f"rank              {rank(raw)}")
    print(f"reflected         ({sim.divisor.head}; {', '.join(map(str, sim.divisor.xu))})")
    print(f"chips on v_i      {sim.k_trace}")
    print(f"evacuated         {evacuate(t).to_lists()}")
    print(f"K - c             ({dual.head}; {', '.join(map(str, dual.xu))})")
    print(f"rank of K - c     {rank(underline_to_raw(dual))}")
    print(f"transposed        {transpose(t).to_lists()}")


if __name__ == "__main__":
    main()
