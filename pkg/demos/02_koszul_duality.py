"""Walkthrough: Koszul dual presentations."""

# %% The dual of Com is presented by the Jacobi relation
import warnings

from operadpbw import builtin, dual_presentation, dump, parse_element
from operadpbw.dual import same_span

com_dual = dual_presentation(builtin("com"), "shriek")
print(dump(com_dual))
jacobi = parse_element("m_dual(m_dual(1,2),3) + m_dual(m_dual(2,3),1) + m_dual(m_dual(3,1),2)",
                       com_dual.module)
print("Jacobi span:", same_span(com_dual, com_dual.relations, [jacobi]))
print({r: com_dual.dim(r - 1, r) for r in range(2, 6)})

# %% Perm and PreLie are dual to each other
perm_dual = dual_presentation(builtin("perm"))
print({r: perm_dual.dim(r - 1, r) for r in range(2, 5)})   # r^(r-1)

# %% Applying the dual twice gives back the original relations
poisson = builtin("poisson")
twice = dual_presentation(dual_presentation(poisson))
print("double dual restores Poisson:", same_span(poisson, poisson.relations, twice.relations))

# %% Ternary generators need the degree-shifting mode
with warnings.catch_warnings():
    warnings.simplefilter("error")
    part = dual_presentation(builtin("tot-assoc-3"), "kdual")
print(dump(part))
print([part.dim(s, 2 * s + 1) for s in range(1, 5)])        # 1, 2, 5, 14
