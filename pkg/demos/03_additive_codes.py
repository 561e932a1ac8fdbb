# Expand A_{0,2} over Z4, trade K coordinates for Z4 singles, and check the D(7,7) matrix.
from doobcodes.additive import build_D, expand_matrix, select_lambdas, special_d77
from doobcodes.linear import build_check_matrix
from doobcodes.params import group_params
from doobcodes.verify import verify_coverage

A = build_check_matrix(0, 2)
B = expand_matrix(A)
print("B:", B.shape, verify_coverage(B).summary())

for n4 in (3, 6, 9, 12, 15):
    sel = select_lambdas(A, n4)
    D = build_D(A, sel)
    print(f"n''={n4:2d} lambdas={sel} shape={D.shape} {group_params(*D.shape)}",
          verify_coverage(D).summary())

D = build_D(A, select_lambdas(A, 3))
print("new Z4 columns:", D.columns()[2])

M = special_d77()
print(M)
print(verify_coverage(M).summary())
