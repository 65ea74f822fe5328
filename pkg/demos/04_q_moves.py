"""
Moving q through the order flips one facet at a time
====================================================

The marker element q can sit anywhere in a cyclic extension's order
without changing its validity.  Each swap of q with its left neighbour
changes the induced orientation by exactly one facet flip: crossing a
plain element i flips the lower i-facet, crossing a partner i+n flips
the upper one.
"""

from usomat import (
    Branching,
    extension_to_uso,
    flip_facet,
    push_q_left,
    synthesize_extension,
)

b = Branching(2, {2: 1})
ext = synthesize_extension(b)
print("start:", ext.order, "flip set", sorted(ext.flipped))
uso = extension_to_uso(ext)
print("orientation:", uso.outmaps)

# Walk q from the back of the order to the front.  At every step the
# freshly computed orientation equals the facet-flip prediction.
while ext.order[0] != "q":
    ext, dim, upper = push_q_left(ext)
    predicted = flip_facet(uso, dim, upper)
    uso = extension_to_uso(ext)
    side = "upper" if upper else "lower"
    print(f"\nq past {'pair partner' if upper else 'element'} of dim {dim}: "
          f"flip {side} {dim}-facet")
    print("order now:", ext.order)
    print("orientation:", uso.outmaps, "- as predicted:", uso == predicted)

# After crossing all 2n elements every facet flipped once; the flips
# compose to complementing every outmap bitwise.
print("\nfinal outmaps are the start ones XOR 0b11:",
      uso.outmaps == tuple(o ^ 0b11 for o in extension_to_uso(synthesize_extension(b)).outmaps))
