# Which D(m, n) are known to carry 1-perfect codes, for small diameters.
from doobcodes.cli import params_table
from doobcodes.params import classify, group_params, product_bound, triple_verdict

for mu in (2, 3, 4):
    print(params_table(mu))

print("product bounds:", [product_bound(mu) for mu in range(2, 7)])
print("D(8,5):", [str(t) for t in classify(8, 5)])
print("(8,1,4):", group_params(8, 1, 4), triple_verdict(8, 1, 4))
