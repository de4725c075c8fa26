#!/usr/bin/env python3
"""Regenerates include/c1vem/channel_solution_detail.hpp.

The manufactured solution for the curved-channel benchmark is

    u(x,y) = -(y - b(x))^2 (y - p(x))^2 x^2 (1-x)^2 (3 + sin(5x) sin(7y)),

with channel walls b(x) = sin(pi x)/20 and p(x) = 1 + sin(3 pi x)/20.  The
solver needs u, its gradient and Hessian, and the load f = Delta^2 u.  Deriving
f by hand is hopeless, so this script differentiates symbolically and emits the
closed forms as C++ with common subexpressions factored out.  Run from the
repository root:

    python3 tools/generate_channel_solution.py > include/c1vem/channel_solution_detail.hpp
"""

import sympy as sp


def emit_function(name, exprs, outputs):
    subs, reduced = sp.cse(exprs, optimizations="basic")
    lines = []
    lines.append(f"inline {'double' if len(exprs) == 1 else 'void'} {name}(double x, double y"
                 + ("".join(f", double& {o}" for o in outputs) if len(exprs) > 1 else "")
                 + ") {")
    for sym, val in subs:
        lines.append(f"    const double {sym} = {sp.ccode(val)};")
    if len(exprs) == 1:
        lines.append(f"    return {sp.ccode(reduced[0])};")
    else:
        for o, r in zip(outputs, reduced):
            lines.append(f"    {o} = {sp.ccode(r)};")
    lines.append("}")
    return "\n".join(lines)


def main():
    x, y = sp.symbols("x y")
    b = sp.sin(sp.pi * x) / 20
    p = 1 + sp.sin(3 * sp.pi * x) / 20
    u = -((y - b) ** 2) * (y - p) ** 2 * x**2 * (1 - x) ** 2 * (3 + sp.sin(5 * x) * sp.sin(7 * y))

    ux = sp.diff(u, x)
    uy = sp.diff(u, y)
    uxx = sp.diff(u, x, 2)
    uxy = sp.diff(u, x, y)
    uyy = sp.diff(u, y, 2)
    f = sp.diff(u, x, 4) + 2 * sp.diff(u, x, 2, y, 2) + sp.diff(u, y, 4)

    print("#pragma once")
    print()
    print("// Generated by tools/generate_channel_solution.py; do not edit by hand.")
    print()
    print("#include <cmath>")
    print()
    print("namespace c1vem::detail {")
    print()
    print(emit_function("channel_value", [u], []))
    print()
    print(emit_function("channel_gradient", [ux, uy], ["gx", "gy"]))
    print()
    print(emit_function("channel_hessian", [uxx, uxy, uyy], ["hxx", "hxy", "hyy"]))
    print()
    print(emit_function("channel_load", [f], []))
    print()
    print("}  // namespace c1vem::detail")


if __name__ == "__main__":
    main()
