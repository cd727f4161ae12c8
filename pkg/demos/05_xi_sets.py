# A finite alternating chain of intersections and unions changes value with
# its bracketing, exactly like the partial bracketings of the alternating
# series 1 - 1 + 1 - ...  Keeping BOTH values -- a multi-valued set -- gives
# an algebra where operations act pairwise on components and membership
# carries the indices of the components that contain an atom.

from heaviforge import (
    ChainStrategy,
    SetExprChain,
    XiSet,
    eval_chain,
    evaluate,
    format_finite_set,
    grandi_demo,
    membership,
    xi_cap,
    xi_cup,
    xi_union,
)

print("alternating series: partial sums depend on where you stop,")
print("but their running average settles at 1/2")
for k in (4, 9, 101):
    sums, mean = grandi_demo(k)
    shown = ",".join(str(s) for s in sums[:8]) + (",..." if k > 8 else "")
    print(f"  k = {k:>4}: sums {shown}   cesaro mean = {mean}")

print()
print("the set-chain analogue: G cap 0 cup G cap 0 cup ... with G = {1,2}")
for strategy in ChainStrategy:
    r = eval_chain(SetExprChain(frozenset({1, 2}), frozenset(), 6, strategy))
    tail = "none" if r.dangling is None else format_finite_set(r.dangling)
    print(f"  {strategy.value:>7}: value {format_finite_set(r.value):>6}   dangling tail: {tail}")
print("one bracketing yields the empty set, the other the base set --")
print("so the chain's value is recorded as the 2-component multi-set below")

print()
print("forming functions and pairwise operations")
print(f"  cap({{1,2}}, {{2,3}}) = {xi_cap({1, 2}, {2, 3})}")
print(f"  cup({{1}}, {{2}})     = {xi_cup({1}, {2})}")
x = XiSet.of({1}, {1, 2})
y = XiSet.of({3}, ())
u = xi_union(x, y)
print(f"  ({x})  union  ({y})")
print(f"      = {u}    [class {u.xi_class}]")

print()
print("indexed membership in the 4-component union")
for atom in (1, 2, 3, 9):
    rep = membership(atom, u)
    print(f"  atom {atom}: mode={rep.mode.value:<5} components {sorted(rep.index_set)}")

print()
print("the same algebra through the expression language")
expr = "{1}||{1,2} | {3}||0"
print(f"  {expr}  ->  {evaluate(expr)}")
