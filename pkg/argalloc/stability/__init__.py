"""
Stable labelings from a general allocator. A three-valued expression
evaluates to T (F) under a valuation without U iff a two-valued formula
derived from it is satisfied, so the stable labelings are the instantiations
at the models of a single two-valued formula.

Two-valued formulas reuse the expression classes, restricted to the
constants T and F.
"""
