#!/usr/bin/env python3
"""Generate the vendored test corpus under corpus/.

The tree mimics a small scrape of scientific-computing repositories: one
directory per repository, C, C++ and free-form Fortran sources, with
comments, OpenMP pragmas, preprocessor lines, exact and near duplicates,
tiny files, one malformed file, one binary file and non-source files.

Output is a pure function of --seed.
"""

import argparse
import random
import shutil
from pathlib import Path

TOPICS = [
    "heat", "advect", "stencil", "lbm", "nbody", "sph", "cfd", "spmv", "cg",
    "gmres", "fft", "wave", "md", "ising", "mesh", "amr", "qcd", "climate",
    "ocean", "seismic", "pic", "plasma", "euler", "poisson", "jacobi", "multigrid",
    "kmeans", "blas", "lapack", "quad",
]
SUFFIXES = ["solver", "kernels", "mini", "bench", "lib", "app", "proxy", "sim"]

ARR = ["a", "b", "c", "x", "y", "z", "u", "v", "w", "rho", "phi", "psi", "src", "dst",
       "field", "grid", "buf", "val", "coef", "flux", "rhs", "res", "temp", "vel",
       "press", "dens", "mass", "pos", "acc", "force", "velocity_x", "velocity_y",
       "pressure_old", "density_new", "face_flux", "cell_volume", "node_coords",
       "residual_vec", "search_dir", "tmp_field", "boundary_vals", "particle_mass",
       "energy_density", "heat_source", "u_prev", "u_next", "stress_xx", "grad_phi"]
SCAL = ["alpha", "beta", "gamma", "dt", "dx", "dy", "h", "tol", "eps", "omega", "scale",
        "lambda0", "nu", "kappa", "sigma", "theta", "fac", "norm0", "cfl", "mu",
        "time_step", "relax_factor", "diffusion_coeff", "grid_spacing", "damping",
        "threshold", "inv_dx2", "courant_number"]
IDX = ["i", "j", "k", "ii", "jj", "kk", "p", "q", "r", "s", "cell", "node", "row", "col",
       "idx", "elem"]
CNT = ["n", "m", "nx", "ny", "nz", "len", "npts", "ncell", "size", "count", "nloc", "dim",
       "num_cells", "num_nodes", "n_local", "n_rows", "n_cols", "max_iter", "n_particles"]
ACC = ["sum", "acc", "total", "err", "diff", "dmax", "local", "partial", "energy", "resid",
       "local_sum", "max_error", "residual_norm", "total_energy", "partial_dot", "l2_norm"]
VERBS = ["compute", "update", "apply", "init", "reduce", "scale", "smooth", "relax",
         "assemble", "project", "interp", "advance", "integrate", "normalize", "copy",
         "swap", "check", "accumulate", "filter", "exchange"]
NOUNS = ["field", "grid", "flux", "rhs", "residual", "halo", "boundary", "density",
         "velocity", "pressure", "energy", "forces", "matrix", "vector", "stencil",
         "weights", "mesh", "cells", "particles", "spectrum"]

C_COMMENTS = [
    "loop over interior points", "TODO: vectorize", "boundary handled separately",
    "accumulate partial sums", "see reference implementation", "hot loop",
    "avoid aliasing", "explicit time step", "normalize result", "guard against overflow",
    "second-order central difference in both directions",
    "the caller owns the output buffer and must size it to n elements",
    "FIXME: this assumes a uniform mesh, revisit for stretched grids",
    "reduction is order dependent, results differ slightly between thread counts",
    "clamp to keep the scheme stable when the CFL condition is violated",
    "matches equation (12) of the original model description",
]

LICENSE = [
    "Copyright (c) the {name} developers.",
    "Distributed under the BSD 3-Clause License. See LICENSE for details.",
    "",
    "This file is part of {name}, a research code for {topic} simulations.",
]


class Names:
    """Draws distinct identifiers for one function."""

    def __init__(self, rng):
        self.rng = rng
        self.used = set()

    def pick(self, pool):
        for _ in range(100):
            name = self.rng.choice(pool)
            if name not in self.used:
                self.used.add(name)
                return name
        base = self.rng.choice(pool)
        n = 2
        while f"{base}{n}" in self.used:
            n += 1
        self.used.add(f"{base}{n}")
        return f"{base}{n}"


def fnum(rng):
    return rng.choice(["0.5", "0.25", "1.0e-6", "2.0", "0.125", "1.5", "3.0", "1.0e-12",
                       "0.75", "4.0", "0.01", "6.0", "0.001", "1.0e3"])


def fdbl(rng):
    """Double-precision Fortran literal."""
    x = fnum(rng)
    return x.replace("e", "d") if "e" in x else x + "d0"


def inum(rng):
    return str(rng.choice([1, 2, 3, 4, 8, 16, 32, 64, 100, 128, 256, 1000, 1024, 7, 10]))


def func_name(rng):
    return f"{rng.choice(VERBS)}_{rng.choice(NOUNS)}"


# ---------------------------------------------------------------- C family


def c_body(rng, v, cpp=False):
    """Statement snippets over arrays x, y, z, scalars, counts n/m."""
    x, y, z, n, m = v["x"], v["y"], v["z"], v["n"], v["m"]
    i, j, s, a, t = v["i"], v["j"], v["s"], v["a"], v["t"]
    pragma = rng.random() < 0.4
    out = []

    def omp(extra=""):
        if pragma:
            out.append(f"#pragma omp parallel for{extra}")

    def comment():
        if rng.random() < 0.5:
            c = rng.choice(C_COMMENTS)
            out.append(f"/* {c} */" if rng.random() < 0.5 else f"// {c}")

    snippets = list(range(14))
    rng.shuffle(snippets)
    for kind in snippets[: rng.randint(3, 6)]:
        comment()
        if kind == 0:
            omp()
            out.append(f"for ({i} = 0; {i} < {n}; {i}++) {{")
            out.append(f"    {y}[{i}] = {a} * {x}[{i}] + {y}[{i}];")
            out.append("}")
        elif kind == 1:
            omp(f" reduction(+:{s})")
            out.append(f"for ({i} = 0; {i} < {n}; {i}++) {{")
            out.append(f"    {s} += {x}[{i}] * {y}[{i}];")
            out.append("}")
        elif kind == 2:
            omp(" collapse(2)" if rng.random() < 0.5 else "")
            out.append(f"for ({i} = 1; {i} < {n} - 1; {i}++) {{")
            out.append(f"    for ({j} = 1; {j} < {m} - 1; {j}++) {{")
            out.append(
                f"        {z}[{i} * {m} + {j}] = {fnum(rng)} * ({x}[({i} - 1) * {m} + {j}] + "
                f"{x}[({i} + 1) * {m} + {j}] + {x}[{i} * {m} + {j} - 1] + {x}[{i} * {m} + {j} + 1]);"
            )
            out.append("    }")
            out.append("}")
        elif kind == 3:
            out.append(f"for ({i} = 0; {i} < {n}; ++{i}) {{")
            out.append(f"    if ({x}[{i}] > {a}) {{")
            out.append(f"        {x}[{i}] = {a};")
            out.append(f"    }} else if ({x}[{i}] < -{a}) {{")
            out.append(f"        {x}[{i}] = -{a};")
            out.append("    }")
            out.append("}")
        elif kind == 4:
            out.append(f"{t} = 0;")
            out.append(f"while ({s} > {fnum(rng)} && {t} < {inum(rng)}) {{")
            out.append(f"    {s} = {s} * {fnum(rng)};")
            out.append(f"    {t}++;")
            out.append("}")
        elif kind == 5:
            if cpp:
                out.append(f'std::cout << "step " << {t} << " value " << {s} << std::endl;')
            else:
                out.append(f'printf("step %d value %e\\n", {t}, {s});')
        elif kind == 6:
            out.append(f"switch ({t} % {inum(rng)}) {{")
            out.append("case 0:")
            out.append(f"    {s} = {s} + {a};")
            out.append("    break;")
            out.append("case 1:")
            out.append(f"    {s} = {s} - {a};")
            out.append("    break;")
            out.append("default:")
            out.append(f"    {s} = {s} * {fnum(rng)};")
            out.append("}")
        elif kind == 7:
            buf = v["buf"]
            if cpp:
                out.append(f"std::vector<double> {buf}({n}, {fnum(rng)});")
                out.append(f"for ({i} = 0; {i} < {n}; {i}++) {{")
                out.append(f"    {buf}[{i}] = {x}[{i}] - {y}[{i}];")
                out.append("}")
                out.append(f"{s} = std::accumulate({buf}.begin(), {buf}.end(), {s});")
            else:
                out.append(f"double *{buf} = (double *) malloc({n} * sizeof(double));")
                out.append(f"if ({buf} == NULL) {{")
                out.append(f'    fprintf(stderr, "out of memory\\n");')
                out.append(f"    exit(1);")
                out.append("}")
                out.append(f"for ({i} = 0; {i} < {n}; {i}++) {{")
                out.append(f"    {buf}[{i}] = {x}[{i}] - {y}[{i}];")
                out.append("}")
                out.append(f"memcpy({z}, {buf}, {n} * sizeof(double));")
                out.append(f"free({buf});")
        elif kind == 8:
            out.append(f"{s} = 0.0;")
            out.append(f"for ({i} = 0; {i} < {n}; {i}++) {{")
            out.append(f"    double d = {x}[{i}] - {y}[{i}];")
            out.append(f"    {s} = d > {s} ? d : {s};")
            out.append("}")
            out.append(f"{s} = sqrt({s} + {fnum(rng)});")
        elif kind == 9:
            out.append(f"for ({i} = {n} - 1; {i} >= 0; {i}--) {{")
            out.append(f"    {z}[{i}] = ({y}[{i}] - {a} * {z}[{i} + 1]) / {x}[{i}];")
            out.append("}")
        elif kind == 10:
            omp()
            out.append(f"for ({i} = 0; {i} < {n}; {i}++) {{")
            out.append(f"    {z}[{i}] = fabs({x}[{i}]) < {fnum(rng)} ? 0.0 : {x}[{i}] / ({y}[{i}] + {fnum(rng)});")
            out.append("}")
        elif kind == 11:
            out.append(f"{t} = ({t} << {rng.randint(1, 5)}) ^ ({t} >> {rng.randint(1, 5)});")
            out.append(f"{t} &= 0x{rng.randint(16, 4095):X};")
        elif kind == 12:
            out.append(f"do {{")
            out.append(f"    {s} = {a} * {s} + {fnum(rng)};")
            out.append(f"    {t} += {inum(rng)};")
            out.append(f"}} while ({t} < {m});")
        elif kind == 13:
            out.append(f"for ({i} = 0; {i} < {n}; {i}++) {{")
            out.append(f"    for ({j} = 0; {j} < {m}; {j}++) {{")
            out.append(f"        {s} += {x}[{i} * {m} + {j}] * {y}[{j}];")
            out.append("    }")
            out.append(f"    {z}[{i}] = {s};")
            out.append(f"    {s} = 0.0;")
            out.append("}")
    return out


def c_function(rng, cpp=False, qualifier=None):
    names = Names(rng)
    v = {
        "x": names.pick(ARR), "y": names.pick(ARR), "z": names.pick(ARR),
        "n": names.pick(CNT), "m": names.pick(CNT), "i": names.pick(IDX),
        "j": names.pick(IDX), "s": names.pick(ACC), "a": names.pick(SCAL),
        "t": names.pick(["it", "iter", "step", "nstep", "flag", "mode", "cnt"]),
        "buf": names.pick(["tmp", "work", "scratch", "wbuf", "aux"]),
    }
    ret = rng.choice(["double", "void", "int"])
    fname = func_name(rng)
    if qualifier:
        fname = f"{qualifier}::{fname}"
    if cpp and rng.random() < 0.3:
        params = (f"const std::vector<double> &{v['x']}, std::vector<double> &{v['y']}, "
                  f"std::vector<double> &{v['z']}, std::size_t {v['n']}, std::size_t {v['m']}, double {v['a']}")
    else:
        const = "const " if rng.random() < 0.5 else ""
        params = (f"{const}double *{v['x']}, double *{v['y']}, double *{v['z']}, "
                  f"int {v['n']}, int {v['m']}, double {v['a']}")
    static = "static " if not cpp and rng.random() < 0.3 else ""
    lines = [f"{static}{ret} {fname}({params})", "{"]
    idx_ty = "long" if rng.random() < 0.2 else "int"
    lines.append(f"    {idx_ty} {v['i']}, {v['j']};")
    lines.append(f"    int {v['t']} = 0;")
    lines.append(f"    double {v['s']} = {fnum(rng)};")
    lines += ["    " + l for l in c_body(rng, v, cpp)]
    if ret == "double":
        lines.append(f"    return {v['s']};")
    elif ret == "int":
        lines.append(f"    return {v['t']};")
    lines.append("}")
    return "\n".join(lines)


def c_file(rng, nfuncs):
    head = ["#include <stdio.h>", "#include <stdlib.h>", "#include <math.h>", "#include <string.h>"]
    rng.shuffle(head)
    parts = head[: rng.randint(2, 4)]
    if rng.random() < 0.5:
        parts.append("#include <omp.h>")
    if rng.random() < 0.4:
        parts.append(f"\n#define NMAX {inum(rng)}")
    if rng.random() < 0.3:
        parts.append(f"\n/* {rng.choice(TOPICS)} kernels, ported from the original Fortran version */")
    body = [c_function(rng) for _ in range(nfuncs)]
    return "\n".join(parts) + "\n\n" + "\n\n".join(body) + "\n"


def cpp_file(rng, nfuncs):
    head = ["#include <vector>", "#include <cmath>", "#include <iostream>", "#include <numeric>",
            "#include <algorithm>"]
    rng.shuffle(head)
    parts = head[: rng.randint(3, 5)] + ["#include <iostream>", "#include <numeric>", "#include <vector>"]
    parts = list(dict.fromkeys(parts))
    ns = rng.choice(TOPICS)
    cls = ns.capitalize() + rng.choice(["Solver", "Kernel", "Grid", "Field"])
    body = []
    members = []
    for _ in range(nfuncs):
        r = rng.random()
        if r < 0.25:
            f = c_function(rng, cpp=True, qualifier=cls)
            members.append(f.split("(")[0].split()[-1].split("::")[-1])
            body.append(f)
        elif r < 0.4:
            names = Names(rng)
            tname = rng.choice(["T", "Real", "Scalar"])
            xs, n, i, s = names.pick(ARR), names.pick(CNT), names.pick(IDX), names.pick(ACC)
            body.append("\n".join([
                f"template <typename {tname}>",
                f"{tname} {func_name(rng)}(const std::vector<{tname}> &{xs}, std::size_t {n})",
                "{",
                f"    {tname} {s} = {tname}(0);",
                f"    for (std::size_t {i} = 0; {i} < {n}; ++{i}) {{",
                f"        {s} += {xs}[{i}] * {xs}[{i}];",
                "    }",
                f"    auto sq = [](const {tname} &v) {{ return v * v; }};",
                f"    {s} = sq({s}) / {tname}({fnum(rng)});",
                f"    for (const auto &e : {xs}) {{",
                f"        if (e > {s}) {{",
                f"            {s} = std::max({s}, e);",
                "        }",
                "    }",
                f"    return std::sqrt({s});",
                "}",
            ]))
        else:
            body.append(c_function(rng, cpp=True))
    decls = [f"class {cls}", "{", "public:"]
    for mname in members:
        decls.append(f"    double {mname}(double *, double *, double *, int, int, double);")
    decls.append("private:")
    decls.append("    int rank_ = 0;")
    decls.append("};")
    text = "\n".join(parts) + f"\n\nnamespace {ns}\n{{\n\n" + "\n".join(decls) + "\n\n"
    text += "\n\n".join(body) + f"\n\n}} // namespace {ns}\n"
    return text


# ---------------------------------------------------------------- Fortran


def f_body(rng, v):
    x, y, z, n, m = v["x"], v["y"], v["z"], v["n"], v["m"]
    i, j, s, a, t = v["i"], v["j"], v["s"], v["a"], v["t"]
    out = []
    pragma = rng.random() < 0.4

    def comment():
        if rng.random() < 0.5:
            out.append("! " + rng.choice(C_COMMENTS))

    snippets = list(range(11))
    rng.shuffle(snippets)
    for kind in snippets[: rng.randint(3, 6)]:
        comment()
        if kind == 0:
            if pragma:
                out.append("!$omp parallel do")
            out.append(f"do {i} = 1, {n}")
            out.append(f"  {y}({i}) = {a} * {x}({i}) + {y}({i})")
            out.append("end do")
            if pragma:
                out.append("!$omp end parallel do")
        elif kind == 1:
            if pragma:
                out.append(f"!$omp parallel do reduction(+:{s})")
            out.append(f"do {i} = 1, {n}")
            out.append(f"  {s} = {s} + {x}({i}) * {y}({i})")
            out.append("end do")
        elif kind == 2:
            out.append(f"do {j} = 2, {m} - 1")
            out.append(f"  do {i} = 2, {n} - 1")
            out.append(f"    {z}({i}) = {fdbl(rng)} * ({x}({i} - 1) + {x}({i} + 1) - 2.0d0 * {x}({i}))")
            out.append("  end do")
            out.append("end do")
        elif kind == 3:
            out.append(f"do {i} = 1, {n}")
            out.append(f"  if ({x}({i}) > {a}) then")
            out.append(f"    {x}({i}) = {a}")
            out.append(f"  else if ({x}({i}) < -{a}) then")
            out.append(f"    {x}({i}) = -{a}")
            out.append("  end if")
            out.append("end do")
        elif kind == 4:
            out.append(f"{t} = 0")
            out.append(f"do while ({s} > {fdbl(rng)} .and. {t} < {inum(rng)})")
            out.append(f"  {s} = {s} * {fdbl(rng)}")
            out.append(f"  {t} = {t} + 1")
            out.append("end do")
        elif kind == 5:
            out.append(f"print *, 'step ', {t}, ' value ', {s}")
        elif kind == 6:
            out.append(f"select case (mod({t}, {inum(rng)}))")
            out.append("case (0)")
            out.append(f"  {s} = {s} + {a}")
            out.append("case (1)")
            out.append(f"  {s} = {s} - {a}")
            out.append("case default")
            out.append(f"  {s} = {s} * {fdbl(rng)}")
            out.append("end select")
        elif kind == 7:
            out.append(f"{s} = 0.0d0")
            out.append(f"do {i} = 1, {n}")
            out.append(f"  {s} = max({s}, abs({x}({i}) - {y}({i})))")
            out.append("end do")
            out.append(f"{s} = sqrt({s} + {fdbl(rng)})")
        elif kind == 8:
            out.append(f"where ({x}(1:{n}) > 0.0d0)")
            out.append(f"  {z}(1:{n}) = {y}(1:{n}) / {x}(1:{n})")
            out.append("elsewhere")
            out.append(f"  {z}(1:{n}) = 0.0d0")
            out.append("end where")
        elif kind == 9:
            out.append(f"do {i} = {n} - 1, 1, -1")
            out.append(f"  {z}({i}) = ({y}({i}) - {a} * {z}({i} + 1)) / {x}({i})")
            out.append("end do")
        elif kind == 10:
            out.append(f"{s} = sum({x}(1:{n}) * {y}(1:{n})) + &")
            out.append(f"    {a} * dot_product({x}(1:{n}), {z}(1:{n}))")
    return out


def f_procedure(rng):
    names = Names(rng)
    v = {
        "x": names.pick(ARR), "y": names.pick(ARR), "z": names.pick(ARR),
        "n": names.pick(CNT), "m": names.pick(CNT), "i": names.pick(IDX),
        "j": names.pick(IDX), "s": names.pick(ACC), "a": names.pick(SCAL),
        "t": names.pick(["it", "iter", "step", "nstep", "flag", "mode", "cnt"]),
    }
    fname = func_name(rng)
    is_func = rng.random() < 0.4
    args = f"{v['x']}, {v['y']}, {v['z']}, {v['n']}, {v['m']}, {v['a']}"
    lines = []
    if is_func:
        lines.append(f"function {fname}({args}) result({v['s']})")
    else:
        lines.append(f"subroutine {fname}({args})")
    lines.append("  implicit none")
    lines.append(f"  integer, intent(in) :: {v['n']}, {v['m']}")
    lines.append(f"  real(kind=8), intent(inout) :: {v['x']}({v['n']}), {v['y']}({v['n']})")
    lines.append(f"  real(kind=8), intent(out) :: {v['z']}({v['n']})")
    lines.append(f"  real(kind=8), intent(in) :: {v['a']}")
    lines.append(f"  integer :: {v['i']}, {v['j']}, {v['t']}")
    if is_func:
        lines.append(f"  real(kind=8) :: {v['s']}")
    else:
        lines.append(f"  real(kind=8) :: {v['s']}")
    lines.append(f"  {v['s']} = {fdbl(rng)}")
    lines.append(f"  {v['t']} = 0")
    lines += ["  " + l for l in f_body(rng, v)]
    lines.append(f"end {'function' if is_func else 'subroutine'} {fname}")
    return "\n".join(lines)


def f_file(rng, nprocs):
    mod = f"{rng.choice(TOPICS)}_{rng.choice(['mod', 'kernels', 'ops', 'utils'])}"
    lines = []
    if rng.random() < 0.3:
        lines.append(f"! {rng.choice(TOPICS)} module, double precision throughout")
    lines.append(f"module {mod}")
    if rng.random() < 0.4:
        lines.append("  use omp_lib")
    lines.append("  implicit none")
    lines.append("contains")
    lines.append("")
    for _ in range(nprocs):
        lines.append(f_procedure(rng))
        lines.append("")
    lines.append(f"end module {mod}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- tree


def license_header(name, lang):
    topic = name.split("-")[0]
    lines = [l.format(name=name, topic=topic) for l in LICENSE]
    if lang == "fortran":
        return "\n".join(("! " + l).rstrip() for l in lines) + "\n\n"
    return "/*\n" + "\n".join((" * " + l).rstrip() for l in lines) + "\n */\n\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    ap.add_argument("--seed", type=int, default=2023)
    ap.add_argument("--repos", type=int, default=60)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    out = Path(args.out)
    if out.exists():
        shutil.rmtree(out)
    out.mkdir(parents=True)

    langs = ["c"] * 22 + ["cpp"] * 18 + ["fortran"] * 20
    rng.shuffle(langs)
    repo_names = set()
    repos = []
    for lang in langs[: args.repos]:
        while True:
            name = f"{rng.choice(TOPICS)}-{rng.choice(SUFFIXES)}"
            if name not in repo_names:
                break
        repo_names.add(name)
        repos.append((name, lang))

    written = []
    for name, lang in repos:
        root = out / name
        sub = root / rng.choice(["src", "kernels", "lib", "."])
        sub.mkdir(parents=True, exist_ok=True)
        licensed = rng.random() < 0.6
        for k in range(rng.randint(3, 5)):
            stem = f"{rng.choice(NOUNS)}_{k}"
            nf = rng.randint(3, 8)
            if lang == "c":
                path, text = sub / f"{stem}.c", c_file(rng, nf)
            elif lang == "cpp":
                path, text = sub / f"{stem}.{rng.choice(['cpp', 'cc', 'cxx'])}", cpp_file(rng, nf)
            else:
                path, text = sub / f"{stem}.{rng.choice(['f90', 'F90', 'f90'])}", f_file(rng, nf)
            if licensed:
                text = license_header(name, lang) + text
            path.write_text(text)
            written.append(path)
        (root / "README.md").write_text(f"# {name}\n\nResearch code. See the source directory.\n")

    # Exact duplicates, and one that differs only in whitespace.
    for src in rng.sample(written, 4):
        dst_repo = out / rng.choice(repos)[0]
        shutil.copy(src, dst_repo / f"vendored_{src.name}")
    ws = rng.choice(written)
    (out / repos[0][0] / f"copy_{ws.name}").write_text(ws.read_text().replace("\n", "\n\n"))

    # Tiny files that fall under the token threshold.
    (out / repos[1][0] / "version.h").write_text("#define VERSION_MAJOR 1\nint version(void);\n")
    (out / repos[2][0] / "tiny.c").write_text("int one(void) { return 1; }\n")

    # A file the front end rejects.
    (out / repos[3][0] / "broken.c").write_text(
        "int broken(int n {\n    for (;;) { if (n > ) }\n    return n +;\n"
    )
    # Binary content with a source extension.
    (out / repos[4][0] / "blob.c").write_bytes(b"\x7fELF\x02\x01\x01\x00\x00\x00binary\x00data")
    # Files the language map ignores.
    (out / repos[5][0] / "Makefile").write_text("all:\n\tcc -O2 -fopenmp *.c\n")
    (out / repos[6][0] / "legacy.f").write_text("      PROGRAM OLD\n      END\n")

    (out / "README.md").write_text(
        "Synthetic repository tree used by the test suite. Generated by\n"
        f"`tools/gen_corpus.py --seed {args.seed}`; do not edit by hand.\n"
    )


if __name__ == "__main__":
    main()
