"""Three independent ways of counting elements of each length.

The breadth-first search stores every element, the geodesic traversal stores
one path, and the column method stores only boundary states.
"""
import time

from thompson_growth import algorithm_a, algorithm_b
from thompson_growth.forest_core import bfs_sphere_counts

N = 9

t = time.perf_counter()
oracle = bfs_sphere_counts(N).values
t_oracle = time.perf_counter() - t

t = time.perf_counter()
spheres, geodesics = algorithm_a.sphere_and_geodesic_counts(N)
t_a = time.perf_counter() - t

t = time.perf_counter()
columns = algorithm_b.growth_series(N).values
t_b = time.perf_counter() - t

print(f"{'n':>3} {'bfs':>8} {'geodesic':>9} {'columns':>8} {'words':>8}")
for n in range(N + 1):
    print(f"{n:>3} {oracle[n]:>8} {spheres[n]:>9} {columns[n]:>8} {geodesics[n]:>8}")
print(f"seconds: bfs {t_oracle:.2f}, geodesic {t_a:.2f}, columns {t_b:.3f}")

# From n = 5 on there are more geodesic words than elements: some
# elements have several shortest spellings.
print("first n with g(n) > f(n):", next(n for n in range(N + 1) if geodesics[n] > spheres[n]))

# The column method keeps going long after the others give up.
t = time.perf_counter()
f = algorithm_b.growth_series(100).values
print(f"f(100) = {f[100]}  ({len(str(f[100]))} digits, {time.perf_counter() - t:.1f}s)")
