"""Command-line front end.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for
input errors (unreadable file, malformed JSON, schema or rational format
violations, invalid geometry).
"""

from __future__ import annotations

import argparse
import sys

from .errors import ManifestError
from .manifest import parse_manifest, read_manifest_text
from .report import FAIL
from .suite import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

HELP = {
    "validate": "build the frame and check the almost contact metric axioms",
    "connection": "Levi-Civita connection coefficients",
    "curvature": "curvature tensor, Ricci tensor, scalar curvature",
    "acm": "axioms, normality, alpha/beta and classification",
    "classify": "structural classification flags",
    "identities": "covariant-derivative, curvature and Ricci-operator identities",
    "soliton": "Riemann soliton residuals for the manifest's potentials",
    "gradient": "gradient soliton residuals",
    "theorems": "hypothesis/conclusion truth tables",
    "report": "every check",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acmsoliton",
        description="Exact checks for solitons on normal almost contact metric 3-manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUITES:
        p = sub.add_parser(name, help=HELP[name])
        p.add_argument("file", help="manifest JSON (or a bundled fixture: hyp3, flat3, su2)")
        if name in ("soliton", "gradient"):
            p.add_argument("--name", default=None, help="restrict to one named instance")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--quiet", action="store_true", help="print nothing; exit code only")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        manifest = parse_manifest(read_manifest_text(args.file))
        doc = run_suite(manifest, args.command, getattr(args, "name", None))
    except (OSError, ManifestError) as exc:
        if not args.quiet:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if not args.quiet:
        sys.stdout.write(doc.to_json() if args.format == "json" else doc.to_text())
    build = doc.entries[0]
    if build.status == FAIL:
        return EXIT_INPUT
    return EXIT_OK if doc.status == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
