"""Walkthrough: bar complex homology and the Koszul construction."""

# %% Homology table for the associative operad
from operadpbw import BarComplex, builtin, dual_presentation, homology

assoc = builtin("assoc")
print(homology(assoc, 3, 5).to_text())

# %% Chains are two-level trees; here are the degree-2 chains of arity 3 for Com
from operadpbw.bar import BarElement

com = builtin("com")
bc = BarComplex(com)
fmt = com.module.format_monomial
for t in bc.chains(2, 3, 2):
    image = {fmt(BarElement(u).beta): str(c) for u, c in bc.differential(t).items()}
    print(fmt(BarElement(t).beta), "->", image)

# %% The diagonal kernel K(P) has the dimensions of the dual operad
for name in ("com", "perm", "poisson"):
    p = builtin(name)
    q = dual_presentation(p)
    rs = p.split()
    print(name, [(s, s + 1, BarComplex(p).koszul_dim(s, s + 1), q.dim(s, s + 1),
                  len(rs.dual_basis_monomials(s, s + 1))) for s in (2, 3)])

# %% Poisson: diagonal homology, although the displayed quadratic basis is not PBW
print(homology(builtin("poisson"), 3, 4).to_text())

# %% Positive characteristic
from operadpbw.corpus import builtin_text
from operadpbw import parse

lie_f3 = parse(builtin_text("lie").replace("order lex", "field F3\norder lex"))
print(homology(lie_f3, 3, 4).to_text())
