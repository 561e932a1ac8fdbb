# The block product construction in D(5, 11), checked on random balls.
import time

import numpy as np

from doobcodes.product import (ProductCodeSpec, format_product_word, product_cardinality,
                               product_decode, product_membership)
from doobcodes.space import doob_dist
from doobcodes.verify import verify_sampled

spec = ProductCodeSpec.row_major(1, 5, 5)
print(f"k={spec.k} r={spec.r} m={spec.m} n={spec.n}  |C| = 2^{product_cardinality(spec).bit_length() - 1}")

rng = np.random.default_rng(0)
v = spec.space.random_vertex(rng)
c = product_decode(spec, v)
print("received:", format_product_word(spec, v))
print("decoded: ", format_product_word(spec, c), "distance", doob_dist(v, c))

t = time.perf_counter()
rep = verify_sampled(lambda x: product_membership(spec, x), spec.space, 2000, seed=1)
print(rep.summary(), f"({time.perf_counter() - t:.1f}s)")

# doob13 blocks need not fill the grid row by row
spec2 = ProductCodeSpec(1, 5, ((0, 1), (0, 3)))
print(verify_sampled(lambda x: product_membership(spec2, x), spec2.space, 500, seed=2).summary())
