# Build the E4-linear check matrices and decode a few vertices.
import numpy as np

from doobcodes.linear import build_check_matrix, decode, is_codeword, syndrome
from doobcodes.space import doob_dist, format_vertex
from doobcodes.verify import verify_coverage

for gamma, delta in [(0, 1), (1, 1), (0, 2), (0, 3)]:
    A = build_check_matrix(gamma, delta)
    rep = verify_coverage(A)
    print(f"A_{{{gamma},{delta}}}: D({A.m},{A.n})  {rep.summary()}")

A = build_check_matrix(1, 1)
print(A)

rng = np.random.default_rng(2)
for _ in range(5):
    v = A.space.random_vertex(rng)
    c = decode(A, v)
    print(format_vertex(v), "->", format_vertex(c),
          "syndrome", [str(s) for s in syndrome(A, v)],
          "dist", doob_dist(v, c), "ok", is_codeword(A, c))
