"""Empirical check of the two triangle laws on random instances.

For every sampled triangle the fixed-height center should sit on the
incenter at any height, and the optimal cone height should be 2*sqrt(2)
inradii.  The script reports the worst deviations over the sample.

Usage:
    python scripts/triangle_law.py --count 200 --seed 7
"""

import argparse
from dataclasses import dataclass

import numpy as np

from conecenter import (
    OPTIMAL_HEIGHT_RATIO,
    build_polygon,
    center_at_height,
    optimal_cone,
    triangle_incenter,
)


@dataclass(frozen=True)
class SampleConfig:
    count: int = 100
    seed: int = 0
    heights: tuple[float, ...] = (0.1, 1.0, 10.0)
    min_area: float = 0.1


def parse_args(argv=None) -> SampleConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=100, help="number of triangles")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed")
    parser.add_argument("--heights", default="0.1,1,10", help="comma-separated heights")
    args = parser.parse_args(argv)
    heights = tuple(float(tok) for tok in args.heights.split(","))
    return SampleConfig(count=args.count, seed=args.seed, heights=heights)


def random_triangle(rng, min_area):
    while True:
        verts = rng.uniform(-10.0, 10.0, size=(3, 2))
        u = verts[1] - verts[0]
        v = verts[2] - verts[0]
        if abs(u[0] * v[1] - u[1] * v[0]) / 2.0 >= min_area:
            return build_polygon(verts)


def main(argv=None) -> int:
    config = parse_args(argv)
    rng = np.random.default_rng(config.seed)

    worst_center = 0.0
    worst_height = 0.0
    worst_optimal_center = 0.0
    for _ in range(config.count):
        poly = random_triangle(rng, config.min_area)
        inc = triangle_incenter(poly)
        for h in config.heights:
            res = center_at_height(poly, h)
            offset = float(np.linalg.norm(res.center - inc.center)) / poly.diameter
            worst_center = max(worst_center, offset)
        best = optimal_cone(poly)
        worst_height = max(worst_height, abs(best.height / inc.radius - OPTIMAL_HEIGHT_RATIO))
        worst_optimal_center = max(
            worst_optimal_center,
            float(np.linalg.norm(best.center - inc.center)) / poly.diameter,
        )

    print(f"{config.count} triangles, heights {config.heights}, seed {config.seed}")
    print(f"worst |center - incenter| / diameter      {worst_center:.3e}")
    print(f"worst |h_opt / inradius - 2*sqrt(2)|      {worst_height:.3e}")
    print(f"worst |optimal center - incenter| / diam  {worst_optimal_center:.3e}")
    ok = worst_center <= 1e-7 and worst_height <= 1e-6 and worst_optimal_center <= 1e-7
    print("within tolerance" if ok else "OUT OF TOLERANCE")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
