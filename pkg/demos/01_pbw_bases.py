"""Walkthrough: quadratic bases, dimensions and normal forms."""

# %% Load a built-in presentation
from operadpbw import builtin, check_pbw, parse_element
from operadpbw.parser import format_element

lie = builtin("lie")
print(lie.module.names, lie.order)

# %% Split the relations: leading monomials I and quadratic basis part J
rs = lie.split()
fmt = lie.module.format_monomial
print("I =", [fmt(m) for m in rs.leading_monomials()])
print("J =", [fmt(m) for m in rs.quadratic_basis()])
for a, target in rs.rewrite.items():
    print("  %s -> %s" % (fmt(a), format_element(target, lie.module, lie.order)))

# %% Dimensions of the components: (r-1)! for Lie
print({r: lie.dim(r - 1, r) for r in range(2, 6)})

# %% Certificate: condition-2 monomials counted against dim P_(s)(r)
report = check_pbw(lie, 4, 6)
print(report.to_text())

# %% Normal forms: rewrite into basis monomials
for text in ("b(1,b(2,3))", "b(b(1,4),b(2,3))", "b(1,b(2,b(3,4))) + b(b(1,2),b(3,4))"):
    x = parse_element(text, lie.module)
    print(text, "->", format_element(rs.normal_form(x), lie.module, lie.order))

# %% Commutative operad under revlenlex: the basis part is the right comb
com = builtin("com")
print([com.module.format_monomial(m) for m in com.split().quadratic_basis()])
print(format_element(com.split().normal_form(parse_element("m(m(1,3),m(2,4))", com.module)),
                     com.module, com.order))
