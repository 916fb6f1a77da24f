"""Command-line front end: ``sstx <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 data error. Every run writes a
``<output>.manifest.json`` next to its main output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import platform
import sys
import time
from pathlib import Path
from typing import List, Optional

import numpy as np

from . import __version__
from .bounds import VariationalConfig, run_verification, variational_energy
from .cwt import CwtResult, ScaleGrid, cwt, default_scale_grid
from .emd import SiftConfig, emd_decompose
from .exceptions import SstxError
from .io import read_matrix, read_ridges, write_component, write_json, write_matrix, write_matrix_csv, write_ridges
from .reconstruct import (
    Component,
    reconstruct_band,
    reconstruct_double_integral,
    reconstruct_full,
    remove_drift,
)
from .ridge import Ridge, band_around, extract_ridges
from .signals import FIXTURES, NoiseConfig, Signal, add_noise, fixture, load_csv, save_csv
from .squeeze import FreqGrid, SqueezedTransform, default_freq_grid, phase_transform, synchrosqueeze
from .wavelets import WaveletSpec

EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --------------------------------------------------------------------------
# flag parsing helpers


def _wavelet(text: str) -> WaveletSpec:
    try:
        return WaveletSpec.parse(text)
    except (ValueError, SstxError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _prefixed(text: str, allowed, default_kind=None):
    kind, sep, val = text.partition(":")
    if not sep:
        if default_kind is None:
            raise argparse.ArgumentTypeError(f"expected one of {allowed} followed by ':value', got {text!r}")
        kind, val = default_kind, text
    if kind not in allowed:
        raise argparse.ArgumentTypeError(f"expected one of {allowed}, got {kind!r}")
    try:
        num = float(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number {val!r}") from None
    if not (math.isfinite(num) and num > 0):
        raise argparse.ArgumentTypeError(f"value must be positive, got {val!r}")
    return kind, num


def _grid_flag(text):
    kind, num = _prefixed(text, ("log", "linear"))
    if num != int(num):
        raise argparse.ArgumentTypeError("bin count must be an integer")
    return kind, int(num)


def _threshold_flag(text):
    kind, num = _prefixed(text, ("rel", "abs"), default_kind="rel")
    return ("relative" if kind == "rel" else "absolute"), num


def _band_flag(text):
    kind, num = _prefixed(text, ("bins", "abs"))
    if kind == "bins" and num != int(num):
        raise argparse.ArgumentTypeError("bins half-width must be an integer")
    return ("bins", int(num)) if kind == "bins" else ("absolute", num)


def _max_jump(text):
    if text.lower() == "none":
        return None
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"max jump must be an integer or 'none', got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("max jump must be at least 1")
    return v


def _positive(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number {text!r}") from None
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return v


def _nonneg(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number {text!r}") from None
    if not (math.isfinite(v) and v >= 0):
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text!r}")
    return v


# --------------------------------------------------------------------------
# matrix containers


def _dwdb_path(path: Path) -> Path:
    return path.with_name(path.stem + ".dwdb" + path.suffix)


def _save_cwt(c: CwtResult, out: Path, meta_path: Optional[Path]) -> List[Path]:
    meta = {
        "container": "cwt",
        "scales": [float(a) for a in c.scales],
        "voices": c.grid.voices,
        "sample_rate": c.sample_rate,
        "t0": c.t0,
        "n": c.n,
        "padding": c.padding,
        "wavelet": str(c.wavelet),
        "analytic_input": c.analytic_input,
        "dwdb_file": _dwdb_path(out).name,
    }
    side = write_matrix(c.w, out, meta, meta_path)
    write_matrix(c.dwdb, _dwdb_path(out), dict(meta, container="cwt-dwdb"))
    return [out, side, _dwdb_path(out)]


def _load_cwt(path: Path, meta_path: Optional[Path]) -> CwtResult:
    w, meta = read_matrix(path, meta_path)
    if meta.get("container") != "cwt":
        raise SstxError(f"{path} is not a wavelet transform container")
    dw, _ = read_matrix(path.with_name(meta["dwdb_file"]))
    return CwtResult(
        w=w, dwdb=dw,
        grid=ScaleGrid(np.array(meta["scales"]), meta["voices"]),
        wavelet=WaveletSpec.parse(meta["wavelet"]),
        sample_rate=meta["sample_rate"], t0=meta["t0"], n=meta["n"],
        padding=meta["padding"], analytic_input=meta["analytic_input"],
    )


def _save_squeezed(t: SqueezedTransform, out: Path, meta_path: Optional[Path]) -> List[Path]:
    meta = {
        "container": "squeezed",
        "freq_centers": [float(f) for f in t.grid.centers],
        "freq_edges": [float(f) for f in t.grid.edges],
        "kind": t.grid.kind,
        "weight_exponent": t.weight_exponent,
        "threshold": t.threshold,
        "dropped_count": t.dropped_count,
        "scales": [float(a) for a in t.scales.scales],
        "voices": t.scales.voices,
        "wavelet": str(t.wavelet),
        "sample_rate": t.sample_rate,
        "t0": t.t0,
        "n": t.n,
        "analytic_input": t.analytic_input,
    }
    return [out, write_matrix(t.t, out, meta, meta_path)]


def _load_squeezed(path: Path, meta_path: Optional[Path] = None) -> SqueezedTransform:
    m, meta = read_matrix(path, meta_path)
    if meta.get("container") != "squeezed":
        raise SstxError(f"{path} is not a squeezed transform container")
    return SqueezedTransform(
        t=m,
        grid=FreqGrid(meta["kind"], np.array(meta["freq_edges"])),
        weight_exponent=meta["weight_exponent"],
        scales=ScaleGrid(np.array(meta["scales"]), meta["voices"]),
        wavelet=WaveletSpec.parse(meta["wavelet"]),
        threshold=meta["threshold"],
        dropped_count=meta["dropped_count"],
        sample_rate=meta["sample_rate"],
        t0=meta["t0"],
        n=meta["n"],
        analytic_input=meta["analytic_input"],
    )


def _template(pattern: str, key: str, value) -> Path:
    if "{" + key + "}" in pattern:
        return Path(pattern.replace("{" + key + "}", str(value)))
    p = Path(pattern)
    return p.with_name(f"{p.stem}_{value}{p.suffix}")


# --------------------------------------------------------------------------
# subcommands; each returns (outputs, inputs, extra manifest fields)


def cmd_synth(args):
    s, specs = fixture(args.fixture, args.rate, args.dur)
    save_csv(s, args.out)
    outs = [Path(args.out)]
    if args.truth:
        for k, spec in enumerate(specs):
            trace = spec.analytic()
            comp = Component(trace, s.with_samples(trace.real), np.abs(trace), np.asarray(spec.inst_freq), np.zeros(s.n, bool))
            path = _template(args.truth, "k", k)
            write_component(comp, path)
            outs.append(path)
    return outs, [], {}


def cmd_noise(args):
    s = load_csv(args.inp)
    noisy = add_noise(s, NoiseConfig(args.snr, args.seed))
    save_csv(noisy, args.out)
    return [Path(args.out)], [Path(args.inp)], {}


def cmd_cwt(args):
    s = load_csv(args.inp)
    grid = default_scale_grid(s, args.wavelet, args.voices)
    c = cwt(s, args.wavelet, grid, args.padding)
    out = Path(args.out)
    if args.format == "csv":
        write_matrix_csv(c.w, c.scales, c.times, out)
        return [out], [Path(args.inp)], {}
    return _save_cwt(c, out, Path(args.meta) if args.meta else None), [Path(args.inp)], {}


def cmd_squeeze(args):
    inp = Path(args.inp)
    c = _load_cwt(inp, Path(args.meta) if args.meta else None)
    mode, thr = args.threshold
    p = phase_transform(c, thr, mode)
    kind, count = args.grid
    t = synchrosqueeze(c, p, default_freq_grid(c, kind, count))
    out = Path(args.out)
    if args.format == "csv":
        write_matrix_csv(t.t, t.grid.centers, t.times, out)
        return [out], [inp], {}
    return _save_squeezed(t, out, None), [inp], {"dropped_count": t.dropped_count}


def cmd_ridges(args):
    t = _load_squeezed(Path(args.inp))
    ridges = extract_ridges(t, args.K, args.lam, args.max_jump)
    write_ridges(ridges, t.times, args.out)
    return [Path(args.out)], [Path(args.inp)], {"ridges_found": len(ridges)}


def _ridges_on_grid(path: Path, t: SqueezedTransform) -> List[Ridge]:
    out = []
    for times, freq, energy in read_ridges(path):
        if times.size != t.n:
            raise SstxError(f"{path}: ridge has {times.size} samples, transform has {t.n}")
        idx = t.grid.locate(freq)
        if np.any(idx < 0):
            raise SstxError(f"{path}: ridge frequencies fall outside the frequency grid")
        out.append(Ridge(t.grid.centers[idx], idx, energy))
    return out


def cmd_extract(args):
    t = _load_squeezed(Path(args.inp))
    mode, value = args.band
    outs = []
    for rid, ridge in enumerate(_ridges_on_grid(Path(args.ridges), t)):
        comp = reconstruct_band(t, band_around(ridge, t.grid, mode, value))
        path = _template(args.out, "id", rid)
        write_component(comp, path)
        outs.append(path)
    return outs, [Path(args.inp), Path(args.ridges)], {}


def cmd_reconstruct(args):
    inp = Path(args.inp)
    _, meta = read_matrix(inp)
    if meta.get("container") == "cwt":
        c = _load_cwt(inp, None)
        rec = reconstruct_double_integral(c)
        s = rec if isinstance(rec, Signal) else Signal(rec.real, c.sample_rate, c.t0)
    else:
        s = reconstruct_full(_load_squeezed(inp))
    save_csv(s, args.out)
    return [Path(args.out)], [inp], {"method": "double-integral" if meta.get("container") == "cwt" else "squeezed"}


def cmd_drift_remove(args):
    t = _load_squeezed(Path(args.inp))
    s = remove_drift(t, args.drift_max, args.offset)
    save_csv(s, args.out)
    return [Path(args.out)], [Path(args.inp)], {}


def cmd_emd(args):
    s = load_csv(args.inp)
    res = emd_decompose(s, SiftConfig(args.max_sift, args.sd_stop, args.max_imfs))
    outs = []
    for k, imf in enumerate(res.imfs):
        path = _template(args.out, "k", k)
        save_csv(imf, path)
        outs.append(path)
    path = _template(args.out, "k", "residual")
    save_csv(res.residual, path)
    outs.append(path)
    return outs, [Path(args.inp)], {"imf_count": len(res.imfs)}


def cmd_verify(args):
    report = run_verification(args.fixture, args.wavelet, args.level, args.voices)
    data = report.to_dict()
    write_json(data, args.report)
    for key in ("cond1", "cond2", "cond3", "zone_check", "lemma_check", "if_check", "if_bound_check", "recon_check"):
        chk = data[key]
        print(f"{key}: {chk['status']} (worst {chk['worst']}, limit {chk['limit']})")
    return [Path(args.report)], [], {}


def cmd_energy(args):
    t = _load_squeezed(Path(args.inp))
    s = load_csv(args.signal)
    parts = variational_energy(t, s, VariationalConfig(args.mu, args.gamma, args.lam))
    data = {
        "fidelity": parts.fidelity,
        "transport": parts.transport,
        "l2": parts.l2,
        "sparsity": parts.sparsity,
        "total": parts.total,
    }
    print(json.dumps(data, sort_keys=True))
    if args.out:
        write_json(data, args.out)
        return [Path(args.out)], [Path(args.inp), Path(args.signal)], {}
    return [], [Path(args.inp), Path(args.signal)], {"energy": data}


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sstx", description="Synchrosqueezed wavelet analysis of sampled signals.")
    p.add_argument("--version", action="version", version=f"sstx {__version__}")
    p.add_argument("--no-manifest", action="store_true", help="do not write a run manifest")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.set_defaults(func=func)
        # also accepted after the subcommand; SUPPRESS keeps the global value otherwise
        sp.add_argument("--no-manifest", action="store_true", default=argparse.SUPPRESS,
                        help="do not write a run manifest")
        return sp

    sp = add("synth", cmd_synth, "write a named test signal to CSV")
    sp.add_argument("--fixture", required=True, choices=sorted(FIXTURES))
    sp.add_argument("--rate", type=_positive, default=100.0, help="sample rate in Hz (default 100)")
    sp.add_argument("--dur", type=_positive, default=None, help="duration in seconds (fixture default)")
    sp.add_argument("--out", required=True)
    sp.add_argument("--truth", help="component CSV pattern with {k}, for ground-truth components")

    sp = add("noise", cmd_noise, "add seeded white Gaussian noise at a given SNR")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--snr", type=float, required=True, help="target SNR in dB")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)

    sp = add("cwt", cmd_cwt, "continuous wavelet transform")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--wavelet", type=_wavelet, default=WaveletSpec("morlet"), help="morlet:W0 or bump:DELTA")
    sp.add_argument("--voices", type=int, default=32)
    sp.add_argument("--padding", choices=("reflect", "zero", "periodic"), default="reflect")
    sp.add_argument("--out", required=True)
    sp.add_argument("--meta", help="sidecar path (default: output with .json suffix)")
    sp.add_argument("--format", choices=("bin", "csv"), default="bin")

    sp = add("squeeze", cmd_squeeze, "synchrosqueeze a stored wavelet transform")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--meta", help="input sidecar path")
    sp.add_argument("--grid", type=_grid_flag, default=("log", 32), help="log:BINS_PER_OCTAVE or linear:BINS")
    sp.add_argument("--threshold", type=_threshold_flag, default=("relative", 1e-8), help="rel:X or abs:X")
    sp.add_argument("--out", required=True)
    sp.add_argument("--format", choices=("bin", "csv"), default="bin")

    sp = add("ridges", cmd_ridges, "extract ridge curves from a squeezed transform")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("-K", type=int, default=1, help="number of ridges")
    sp.add_argument("--lambda", dest="lam", type=_nonneg, default=1.0, help="smoothness penalty")
    sp.add_argument("--max-jump", type=_max_jump, default=3, help="bins per sample, or 'none'")
    sp.add_argument("--out", required=True)

    sp = add("extract", cmd_extract, "recover components in bands around ridges")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--ridges", required=True)
    sp.add_argument("--band", type=_band_flag, default=("bins", 3), help="bins:N or abs:RAD_PER_S")
    sp.add_argument("--out", required=True, help="output pattern with {id}")

    sp = add("reconstruct", cmd_reconstruct, "reconstruct the signal from a squeezed or wavelet transform")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--out", required=True)

    sp = add("drift-remove", cmd_drift_remove, "remove the low-frequency drift below the dominant slow curve")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--offset", type=_nonneg, default=0.5, help="rad/s added above the drift curve (default 0.5)")
    sp.add_argument("--drift-max", type=_positive, default=2 * math.pi, help="drift search limit in rad/s")
    sp.add_argument("--out", required=True)

    sp = add("emd", cmd_emd, "empirical mode decomposition baseline")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--out", required=True, help="output pattern with {k}")
    sp.add_argument("--max-imfs", type=int, default=8)
    sp.add_argument("--max-sift", type=int, default=10)
    sp.add_argument("--sd-stop", type=_positive, default=0.2)

    sp = add("verify", cmd_verify, "check the accuracy guarantees on a periodic fixture")
    sp.add_argument("--fixture", choices=("twotone", "modulated", "closetones"), default="twotone")
    sp.add_argument("--wavelet", type=_wavelet, default=WaveletSpec("bump", 0.2))
    sp.add_argument("--level", type=int, default=0, help="modulation level (modulated fixture)")
    sp.add_argument("--voices", type=int, default=None)
    sp.add_argument("--report", default="report.json")

    sp = add("energy", cmd_energy, "evaluate the variational energy of a squeezed transform")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--signal", required=True)
    sp.add_argument("--mu", type=_nonneg, default=1.0)
    sp.add_argument("--gamma", type=_nonneg, default=0.0)
    sp.add_argument("--lambda", dest="lam", type=_nonneg, default=0.0)
    sp.add_argument("--out")
    return p


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _config(args) -> dict:
    out = {}
    for k, v in vars(args).items():
        if k == "func":
            continue
        out[k] = str(v) if isinstance(v, (WaveletSpec, Path)) else v
    return out


def _write_manifest(argv, args, outputs, inputs, extra, wall):
    import scipy
    import sklearn

    anchor = Path(outputs[0]) if outputs else Path(f"sstx-{args.command}")
    path = anchor.with_name(anchor.name + ".manifest.json")
    manifest = {
        "command": ["sstx", *argv],
        "config": _config(args),
        "inputs": {str(p): _sha256(p) for p in inputs if Path(p).exists()},
        "outputs": [str(p) for p in outputs],
        "versions": {
            "sstx": __version__,
            "python": platform.python_version(),
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "scikit-learn": sklearn.__version__,
        },
        "wall_time_s": wall,
    }
    manifest.update(extra)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True, default=str)
        fh.write("\n")


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        outputs, inputs, extra = args.func(args)
    except FileNotFoundError as exc:
        print(f"sstx {args.command}: file not found: {exc.filename or exc}", file=sys.stderr)
        return EXIT_DATA
    except (SstxError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"sstx {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    if not args.no_manifest:
        _write_manifest(argv, args, outputs, inputs, extra, time.perf_counter() - start)
    return 0


if __name__ == "__main__":
    sys.exit(main())
