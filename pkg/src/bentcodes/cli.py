"""The ``bentcodes`` command.

Subcommands: build, verify, export, census, fingerprint.  Every artifact is
deterministic JSON or plain text (sorted keys, no timestamps), so re-running
a build reproduces byte-identical files; the manifest records their sha256
hashes plus the wall-clock duration.

Exit codes: 0 success / certificate verified, 1 precondition or verification
failure, 2 enumeration budget refused, 3 I/O failure.
"""

from __future__ import annotations

import functools
import hashlib
import json
import sys
import time
from pathlib import Path

import click

from . import _kernels, bentvec, boolfun, designs, lincode
from .amcheck import assmus_mattson
from .errors import BentcodesError, BudgetExceeded, DimensionTooLarge
from .gf2e import make_field, parse_poly_spec, subfield_basis

click.exceptions.UsageError.exit_code = 1  # keep 2 reserved for budget refusals


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write(path: Path, text: str) -> str:
    path.write_text(text)
    return hashlib.sha256(text.encode()).hexdigest()


def _echo(obj) -> None:
    click.echo(_dumps(obj), nl=False)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _mapped_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (DimensionTooLarge, BudgetExceeded) as e:
            _fail(str(e), 2)
        except OSError as e:
            _fail(str(e), 3)
        except (BentcodesError, ValueError) as e:
            _fail(str(e), 1)

    return wrapper


def _parse_int(text: str) -> int:
    return int(text, 16) if text.strip().lower().startswith("0x") else int(text)


@click.group()
@click.option("--threads", type=int, default=None, help="Cap numba parallelism.")
def main(threads):
    """Codes from bent vectorial functions, and their design certificates."""
    if threads is not None and _kernels.NUMBA_ACTIVE:
        import numba

        numba.set_num_threads(threads)


# ---------------------------------------------------------------- build

FAMILY_ALIASES = {
    "ex4": "gold-basis",
    "gold-basis": "gold-basis",
    "ex5": "gold-trace",
    "gold-trace": "gold-trace",
    "ex6": "kasami-trace",
    "kasami-trace": "kasami-trace",
}

CONSTRUCTION_CHOICES = sorted(set(FAMILY_ALIASES) | {"rm1", "anf", "cyclic"})


def _build_family(construction, m, i, u, a, modulus, generator, basis):
    """Make the requested bent vectorial family; returns (F, field, params)."""
    family = FAMILY_ALIASES[construction]
    if m is None:
        raise click.UsageError("--m is required for family constructions")
    mod = parse_poly_spec(modulus) if modulus else None
    gen = _parse_int(generator) if generator else None
    field = make_field(2 * m, mod, gen)
    params = {
        "family": family, "m": m, "i": i,
        "modulus": format(field.modulus, "#x"),
        "generator": format(field.generator, "#x"),
    }
    if family == "gold-basis":
        uu = _parse_int(u) if u else None
        bb = None
        if basis:
            elems = [_parse_int(p) for p in basis.split(",")]
            bb = subfield_basis(field, m, elems)
        F = bentvec.gold_basis_family(field, i=i, u=uu, basis=bb)
        params["u"] = format(uu if uu is not None else field.generator, "#x")
    elif family == "gold-trace":
        aa = _parse_int(a) if a else None
        F = bentvec.gold_trace_family(field, i=i, a=aa)
        params["a"] = format(aa if aa is not None else field.generator, "#x")
    else:
        aa = _parse_int(a) if a else None
        F = bentvec.kasami_trace_family(field, i=i, a=aa)
        params["a"] = format(aa if aa is not None else field.generator, "#x")
    return F, field, params


@main.command()
@click.option(
    "--construction",
    "-c",
    type=click.Choice(CONSTRUCTION_CHOICES),
    default=None,
    help="What to build.  ex4/ex5/ex6 are aliases of the three families.",
)
@click.option("--rm1", "rm1_flag", is_flag=True, help="Shorthand for --construction rm1.")
@click.option("--cyclic", "cyclic_length", type=int, default=None,
              help="Shorthand for --construction cyclic --length N.")
@click.option("--m", "m", type=int, default=None, help="Half-dimension: field is GF(2^2m).")
@click.option("--i", "i", type=int, default=1, help="Family exponent parameter.")
@click.option("--u", "u", default=None, help="Element outside GF(2^m) (gold-basis).")
@click.option("--a", "a", default=None, help="Coefficient element (gold/kasami-trace).")
@click.option("--modulus", default=None, help="Field modulus: hex, decimal, or exponent list.")
@click.option("--generator", default=None, help="Field generator element (hex or decimal).")
@click.option("--basis", default=None, help="Comma-separated GF(2^m) basis elements (gold-basis).")
@click.option("--components", default=None, help="1-based component subset, e.g. 1,2,3.")
@click.option("--anf", "anf_exprs", multiple=True, help="ANF component (anf construction).")
@click.option(
    "--component-hex",
    "hex_comps",
    multiple=True,
    help="Truth-table component as hex, LSB = position 0 (anf construction).",
)
@click.option("--n", "nvars", type=int, default=None, help="Variable count (anf construction).")
@click.option("--scheme", type=click.Choice(["field", "binary"]), default="field",
              help="Column order for rm1.")
@click.option("--length", type=int, default=None, help="Code length (cyclic construction).")
@click.option("--check-poly", "check_polys", multiple=True,
              help="Check polynomial; repeat to multiply factors (cyclic).")
@click.option("--extend", "do_extend", is_flag=True, help="Append overall parity (cyclic).")
@click.option("--out", "-o", type=click.Path(file_okay=False), default=".",
              help="Directory for code.json, matrix.txt, wd.json, manifest.json.")
@_mapped_errors
def build(construction, rm1_flag, cyclic_length, m, i, u, a, modulus, generator,
          basis, components, anf_exprs, hex_comps, nvars, scheme, length,
          check_polys, do_extend, out):
    """Build a code and write its artifacts."""
    t0 = time.perf_counter()
    argv = sys.argv[1:]
    if rm1_flag:
        construction = "rm1"
    if cyclic_length is not None:
        construction, length = "cyclic", cyclic_length
    if construction is None:
        raise click.UsageError("pick a construction (--construction/--rm1/--cyclic)")
    params: dict = {"construction": construction}

    if construction in FAMILY_ALIASES:
        F, field, fparams = _build_family(
            construction, m, i, u, a, modulus, generator, basis
        )
        params.update(fparams)
        if components:
            picked = [int(p) for p in components.split(",")]
            F = bentvec.select_components(F, picked)
            params["components"] = picked
        code = lincode.build_code(lincode.rm1_generator(field), F, meta=params)

    elif construction == "rm1":
        if m is None:
            raise click.UsageError("--m is required for rm1")
        params.update(m=m, scheme=scheme)
        if scheme == "binary":
            G0 = lincode.rm1_tuple_generator(2 * m)
        else:
            mod = parse_poly_spec(modulus) if modulus else None
            gen = _parse_int(generator) if generator else None
            field = make_field(2 * m, mod, gen)
            params["modulus"] = format(field.modulus, "#x")
            G0 = lincode.rm1_generator(field)
        code = lincode.LinearCode(G0, meta=params)

    elif construction == "anf":
        if not anf_exprs and not hex_comps:
            raise click.UsageError("anf construction needs --anf or --component-hex")
        if nvars is None:
            raise click.UsageError("--n is required for the anf construction")
        tables = [
            boolfun.truth_table_from_anf(boolfun.parse_anf(e, nvars))
            for e in anf_exprs
        ]
        tables += [boolfun.TruthTable.from_hex(nvars, h) for h in hex_comps]
        params.update(n=nvars, anf=list(anf_exprs), component_hex=list(hex_comps))
        if components:
            picked = [int(p) for p in components.split(",")]
            F = bentvec.select_components(
                bentvec.vectorial_function(tables), picked
            )
            tables = list(F.components)
            params["components"] = picked
        code = lincode.build_code(
            lincode.rm1_tuple_generator(nvars), tables, meta=params
        )

    else:  # cyclic
        if length is None or not check_polys:
            raise click.UsageError("cyclic construction needs --length and --check-poly")
        h = 1
        for spec in check_polys:
            from .gf2e import poly_mul

            h = poly_mul(h, parse_poly_spec(spec))
        params.update(length=length, check_poly=format(h, "#x"), extended=do_extend)
        code = lincode.cyclic_code(length, h, meta=params)
        if do_extend:
            code = lincode.extend_code(code)

    wd = lincode.weight_distribution(code)

    outdir = Path(out)
    outdir.mkdir(parents=True, exist_ok=True)
    hashes = {
        "code.json": _write(outdir / "code.json", _dumps(lincode.code_to_json_dict(code))),
        "matrix.txt": _write(outdir / "matrix.txt", code.generators.to_text()),
        "wd.json": _write(outdir / "wd.json", _dumps(wd.to_json_dict())),
    }
    manifest = {
        "format": "bentcodes-manifest",
        "command": argv,
        "parameters": params,
        "outputs": hashes,
        "duration_seconds": round(time.perf_counter() - t0, 6),
    }
    _write(outdir / "manifest.json", _dumps(manifest))
    _echo({"n": code.length, "k": code.dimension, "d": wd.min_weight(),
           "out": str(outdir)})


# ---------------------------------------------------------------- verify

def _load_code(path: str) -> lincode.LinearCode:
    data = json.loads(Path(path).read_text())
    return lincode.code_from_json_dict(data)


def _infer_m_ell(code: lincode.LinearCode) -> tuple[int, int] | None:
    b = code.length.bit_length() - 1
    if code.length != 1 << b or b % 2:
        return None
    m = b // 2
    ell = code.dimension - 2 * m - 1
    return (m, ell) if ell >= 1 else None


def _weight_or_min(code, weight):
    return weight if weight is not None else lincode.weight_distribution(code).min_weight()


@main.command()
@click.argument("code_file", type=click.Path(exists=True, dir_okay=False))
@click.argument(
    "what",
    type=click.Choice(["bent-enum", "design", "sdp", "spectrum", "derived", "am", "span"]),
)
@click.argument("extra", nargs=-1, type=int)
@click.option("--t", "t", type=int, default=2, help="Design strength or AM strength.")
@click.option("--weight", type=int, default=None, help="Weight class (default: minimum).")
@click.option("--block", type=int, default=0, help="Base block index (derived).")
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None,
              help="Also write the report JSON here.")
@_mapped_errors
def verify(code_file, what, extra, t, weight, block, out):
    """Check a certificate on a stored code and print a report.

    EXTRA positional values read as ``design T [W]``, ``am T``,
    ``derived [W] [BLOCK]`` and override the corresponding options.
    Exit 0 when the check passes (for ``am``: once the report is computed;
    read its ``holds`` field), 1 otherwise.
    """
    if extra:
        if what in ("design", "am"):
            t = extra[0]
            if len(extra) > 1:
                weight = extra[1]
        elif what == "derived":
            weight = extra[0]
            if len(extra) > 1:
                block = extra[1]
        else:
            raise click.UsageError(f"{what} takes no positional parameters")
    code = _load_code(code_file)
    report: dict = {"check": what, "n": code.length, "k": code.dimension}
    ok = True

    if what == "bent-enum":
        wd = lincode.weight_distribution(code)
        ok = lincode.check_bent_enumerator(wd)
        inferred = _infer_m_ell(code)
        if inferred:
            report["m"], report["ell"] = inferred
        report.update(matches=ok, wd=wd.to_json_dict())

    elif what == "design":
        w = _weight_or_min(code, weight)
        D = designs.design_from_codewords(code, w)
        report.update(weight=w, b=D.b, t=t)
        if t == 2:
            try:
                p = designs.verify_2_design(D)
                report["params"] = {"t": 2, "v": p.v, "k": p.k, "lambda": p.lam,
                                    "b": p.b, "r": p.r}
            except designs.NotA2Design as e:  # noqa: F841 - witness in report
                report["params"] = None
                report["witness_pair"] = list(e.args[0])
                ok = False
        else:
            lam = designs.verify_t_design(D, t)
            report["lambda"] = lam
            ok = lam is not None

    elif what == "sdp":
        w = _weight_or_min(code, weight)
        D = designs.design_from_codewords(code, w)
        ok = designs.sdp_check(D)
        report.update(weight=w, b=D.b, sdp=ok)

    elif what == "spectrum":
        w = _weight_or_min(code, weight)
        D = designs.design_from_codewords(code, w)
        spec = designs.intersection_spectrum(D)
        profile = spec.uniform_profile()
        report.update(weight=w, b=D.b, uniform=profile is not None)
        report["profile"] = (
            {str(s): c for s, c in sorted(profile.items())} if profile else None
        )
        ok = profile is not None
        inferred = _infer_m_ell(code)
        if inferred and lincode.check_bent_enumerator(lincode.weight_distribution(code)):
            m, ell = inferred
            expected = designs.expected_intersection_profile(m, ell)
            report["expected"] = {str(s): c for s, c in sorted(expected.items())}
            ok = ok and profile == expected

    elif what == "derived":
        w = _weight_or_min(code, weight)
        D = designs.design_from_codewords(code, w)
        derived = designs.derived_design(D, block_index=block)
        p = designs.verify_2_design(derived)
        inter = designs.intersection_spectrum(derived).aggregate_dict()
        report.update(
            weight=w, block=block, v=derived.v, block_size=derived.k, b=derived.b,
            params={"t": 2, "v": p.v, "k": p.k, "lambda": p.lam, "b": p.b, "r": p.r},
            intersections={str(s): c for s, c in sorted(inter.items())},
        )

    elif what == "am":
        wd = lincode.weight_distribution(code)
        dual = lincode.macwilliams_dual(wd)
        rep = assmus_mattson(wd, dual, t)
        report.update(
            t=rep.t, d=rep.d, d_dual=rep.d_dual, s=rep.s, holds=rep.holds,
            counted_dual_weights=list(rep.counted_weights),
        )
        # the theorem applies equally with the dual in the primary slot;
        # designs in this code can be certified from that side too
        if t < rep.d_dual:
            swapped = assmus_mattson(dual, wd, t)
            report["swapped"] = {"s": swapped.s, "holds": swapped.holds}

    else:  # span
        words = lincode.min_weight_codewords(code)
        ok = lincode.span_equals(code, words)
        report.update(count=words.nrows, spans=ok)

    report["pass"] = ok
    text = _dumps(report)
    if out:
        Path(out).write_text(text)
    click.echo(text, nl=False)
    sys.exit(0 if ok else 1)


# ---------------------------------------------------------------- export

@main.command()
@click.argument("code_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--what", type=click.Choice(["matrix", "wd", "design", "incidence"]),
              required=True)
@click.option("--weight", type=int, default=None, help="Weight class (default: minimum).")
@click.option("--out", "-o", type=click.Path(dir_okay=False), required=True)
@_mapped_errors
def export(code_file, what, weight, out):
    """Convert a stored code into another artifact format."""
    code = _load_code(code_file)
    if what == "matrix":
        text = code.generators.to_text()
    elif what == "wd":
        text = _dumps(lincode.weight_distribution(code).to_json_dict())
    else:
        w = _weight_or_min(code, weight)
        D = designs.design_from_codewords(code, w)
        if what == "design":
            text = _dumps(designs.design_to_json_dict(D))
        else:
            text = "\n".join(
                "".join("01"[b] for b in row) for row in D.incidence()
            ) + "\n"
    Path(out).write_text(text)
    _echo({"wrote": out, "sha256": hashlib.sha256(text.encode()).hexdigest()})


# ---------------------------------------------------------------- census

@main.command()
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None)
@_mapped_errors
def census(out):
    """Count the [16,7,6] codes spanned by weight-6 bent function triples."""
    c = lincode.bent_span_census()
    sizes = {len(mem) for mem in c.class_members}
    result = {
        "codes": len(c.triples),
        "classes": len(c.class_reps),
        "class_size": sizes.pop() if len(sizes) == 1 else None,
    }
    text = _dumps(result)
    if out:
        Path(out).write_text(text)
    click.echo(text, nl=False)


# ---------------------------------------------------------------- fingerprint

@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--weight", type=int, default=None, help="Weight class (codes only).")
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None)
@_mapped_errors
def fingerprint(path, weight, out):
    """Fingerprint a design (or a code's weight-class design)."""
    data = json.loads(Path(path).read_text())
    fmt = data.get("format")
    if fmt == "bentcodes-design":
        D = designs.design_from_json_dict(data)
    elif fmt == "bentcodes-code":
        code = lincode.code_from_json_dict(data)
        D = designs.design_from_codewords(code, _weight_or_min(code, weight))
    else:
        raise ValueError(f"unrecognized artifact format {fmt!r}")
    text = _dumps(designs.fingerprint(D))
    if out:
        Path(out).write_text(text)
    click.echo(text, nl=False)


# ------------------------------------------------- bentvec console command

@click.group()
def bentvec_main():
    """Bent vectorial function generator."""


@bentvec_main.command(name="gen")
@click.option(
    "--construction",
    "-c",
    type=click.Choice(sorted(FAMILY_ALIASES)),
    required=True,
    help="Which family to generate.",
)
@click.option("--m", "m", type=int, required=True, help="Half-dimension: field is GF(2^2m).")
@click.option("--i", "i", type=int, default=1, help="Family exponent parameter.")
@click.option("--u", "u", default=None, help="Element outside GF(2^m) (gold-basis).")
@click.option("--a", "a", default=None, help="Coefficient element (gold/kasami-trace).")
@click.option("--modulus", default=None, help="Field modulus: hex, decimal, or exponent list.")
@click.option("--generator", default=None, help="Field generator element (hex or decimal).")
@click.option("--basis", default=None, help="Comma-separated GF(2^m) basis elements (gold-basis).")
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None,
              help="Also write the JSON record here.")
@_mapped_errors
def bentvec_gen(construction, m, i, u, a, modulus, generator, basis, out):
    """Emit component truth tables as hex plus a provenance record."""
    F, field, params = _build_family(
        construction, m, i, u, a, modulus, generator, basis
    )
    record = {
        "format": "bentcodes-vecfun",
        "n": 2 * m,
        "ell": len(F.components),
        "scheme": F.components[0].scheme,
        "components": [c.to_hex() for c in F.components],
        "provenance": {"construction": construction, **params},
    }
    text = _dumps(record)
    if out:
        Path(out).write_text(text)
    click.echo(text, nl=False)


# ------------------------------------------------- amcheck console command

@click.command()
@click.option("--wd", "wd_file", type=click.Path(exists=True, dir_okay=False),
              required=True, help="Weight distribution JSON for the primal code.")
@click.option("--t", "t", type=int, required=True, help="Design strength to test.")
@click.option("--dual-wd", "dual_file", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Dual weight distribution (default: MacWilliams).")
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None,
              help="Also write the report JSON here.")
@_mapped_errors
def amcheck_main(wd_file, t, dual_file, out):
    """Evaluate the fixed-weight design sufficient condition on a stored
    weight distribution and print the report as JSON."""
    wd = lincode.WeightDistribution.from_json_dict(json.loads(Path(wd_file).read_text()))
    if dual_file:
        dual = lincode.WeightDistribution.from_json_dict(
            json.loads(Path(dual_file).read_text())
        )
    else:
        dual = lincode.macwilliams_dual(wd)
    rep = assmus_mattson(wd, dual, t)
    text = _dumps({
        "t": rep.t, "v": rep.v, "d": rep.d, "d_dual": rep.d_dual,
        "s": rep.s, "holds": rep.holds,
        "counted_dual_weights": list(rep.counted_weights),
    })
    if out:
        Path(out).write_text(text)
    click.echo(text, nl=False)


if __name__ == "__main__":
    main()
