"""
Shuffles and joins
==================

Shuffling one tableau into another after position i corresponds to slipping
one web into the boundary of the other after label i.  The match is exact
when the inserted tableau is a rectangle at least as tall as the host.
"""
from sl3webs.tableau import StandardTableau, format_tableau, shuffle
from sl3webs.webmap import canonical_form, join, web_of

host = StandardTableau(((1, 2), (3, 4), (5, 6)))
inserted = StandardTableau(((1, 3), (2, 5), (4, 6)))
s = shuffle(inserted, 3, host)
print(f"shuffle {format_tableau(inserted)} into {format_tableau(host)} at 3:")
print("  ", format_tableau(s))

joined = join(web_of(host), 3, web_of(inserted))
print("   web join agrees:", canonical_form(joined) == canonical_form(web_of(s)))

# A two-row piece inside a three-row host is not tall enough.
small = StandardTableau(((1,), (2,)))
column = StandardTableau(((1,), (2,), (3,)))
s = shuffle(small, 2, column)
joined = join(web_of(column), 2, web_of(small))
print(f"\nshuffle {format_tableau(small)} into {format_tableau(column)} at 2 gives {format_tableau(s)}")
print("   web join agrees:", canonical_form(joined) == canonical_form(web_of(s)))
