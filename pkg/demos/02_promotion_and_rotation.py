"""
Promotion is rotation
=====================

On a 3 x n rectangle, promoting a tableau and rotating its web land on the
same web.  Promotion therefore has order 3n, and its orbits match the
rotation orbits of webs.
"""
from collections import Counter

from sl3webs.tableau import Shape, StandardTableau, enumerate_standard, format_tableau, promote
from sl3webs.webmap import canonical_form, rotate, web_of

n = 3
tableaux = list(enumerate_standard(Shape.rectangle(3, n)))
agree = sum(canonical_form(rotate(web_of(t))) == canonical_form(web_of(promote(t))) for t in tableaux)
print(f"3 x {n}: rotation matches promotion on {agree} of {len(tableaux)} tableaux")


def orbit_length(t):
    k, s = 1, promote(t)
    while s != t:
        k, s = k + 1, promote(s)
    return k


sizes = Counter(orbit_length(t) for t in tableaux)
print("promotion orbit lengths:", dict(sorted(sizes.items())))

# Off the rectangle the correspondence breaks.
t = StandardTableau(((1, 4), (2, 5), (3,)))
p = promote(t)
print(f"\n{format_tableau(t)} promotes to {format_tableau(p)}")
same = canonical_form(rotate(web_of(t))) == canonical_form(web_of(p))
print("rotated web equals web of the promotion:", same)
