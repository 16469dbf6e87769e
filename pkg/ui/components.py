"""Plain-text report components"""
from typing import Any, Dict, List

import pandas as pd

from data.processor import CorpusProcessor


def _betti_line(report: Dict[str, Any]) -> str:
    groups = report["homology"]
    if not groups:
        return "homology: (empty complex)"
    return "homology: " + ", ".join(f"H{g['dimension']} = {_group(g)}" for g in groups)


def _group(g: Dict[str, Any]) -> str:
    parts = [f"Z^{g['betti']}"] if g["betti"] else []
    parts += [f"Z/{t}" for t in g["torsion"]]
    return " + ".join(parts) or "0"


class GraphReport:
    """Classification and mhom(K2, H) reports"""

    @staticmethod
    def classification(report: Dict[str, Any]) -> str:
        lines = [f"{report['graph']}: {report['verdict']} ({report['rationale']})"]
        certificate = report["certificate"]
        if report["loop"] is not None:
            lines.append(f"  loop at vertex {report['loop']}")
        elif certificate["bipartite"]:
            lines.append(f"  partition {certificate['partition'][0]} | {certificate['partition'][1]}")
        else:
            lines.append(f"  odd closed walk {certificate['odd_closed_walk']}")
        core = report.get("core")
        if core is not None:
            lines.append(f"  core on {core['core_n']} vertices {core['core_vertices']}")
        return "\n".join(lines)

    @staticmethod
    def mhom_complex(report: Dict[str, Any]) -> str:
        lines = [
            f"{report['graph']}: mhom(K2, H) has {report['elements']} elements",
            f"  faces per dimension {report['face_counts']}, euler characteristic {report['euler_characteristic']}",
            f"  {_betti_line(report)}",
            f"  flip fixed elements {report['flip']['fixed_elements']}, lefschetz number {report['flip']['lefschetz']}",
        ]
        for i, component in enumerate(report["components"]):
            lines.append(f"  component {i}: {len(component['elements'])} elements, "
                         f"{component['verdict']} ({component['reason']})")
        witness = report["edge_flip_witness"]
        if witness is None:
            lines.append("  no edge is joined to its flip")
        else:
            steps = " ".join(f"{a} {rel}" for a, rel in zip(witness["path"], witness["relations"]))
            lines.append(f"  edge {tuple(witness['edge'])} reaches its flip: {steps} {witness['path'][-1]}")
        return "\n".join(lines)


class PolymorphismReport:
    """Search, verification and Taylor derivation"""

    @staticmethod
    def render(report: Dict[str, Any]) -> str:
        search = report["search"]
        stats = search["stats"]
        lines = [
            f"{report['graph']}: {report['system']['name']} polymorphism {search['status']} "
            f"({stats['nodes']} nodes, {stats['classes']} classes)",
        ]
        if search.get("reason"):
            lines.append(f"  {search['reason']}")
        verification = report["verification"]
        if verification is not None:
            verdict = "passed" if verification["passed"] else f"FAILED at {verification['failed_check']}"
            lines.append(f"  independent verification {verdict}")
        taylor = report["taylor"]
        if taylor["succeeded"]:
            lines.append("  every coordinate has a separating Taylor pattern")
        else:
            lines.append(f"  no separating pattern at coordinates {taylor['failed_coordinates']}")
        return "\n".join(lines)


class PosetReport:
    """Dismantling and homology of a poset"""

    @staticmethod
    def render(report: Dict[str, Any]) -> str:
        trace = report["dismantling"]
        lines = [
            f"{report['poset']}: {report['size']} elements, {report['component_count']} components",
            f"  irreducible elements {[r['element'] for r in report['irreducible_elements']]}",
            f"  dismantling removed {len(trace['removed'])}, residual size {trace['residual_size']}",
            f"  faces per dimension {report['face_counts']}, euler characteristic {report['euler_characteristic']}",
            f"  {_betti_line(report)}",
        ]
        for i, component in enumerate(report["components"]):
            lines.append(f"  component {i}: {component['verdict']} ({component['reason']})")
        ramified = report["ramified"]
        if ramified is not None:
            lines.append(f"  ramified {ramified['ramified']}, "
                         f"{ramified['automorphism_count']} automorphisms of {ramified['self_map_count']} self-maps")
        return "\n".join(lines)


class CorpusTable:
    """Corpus rows and summary"""

    @staticmethod
    def render(rows: List[Dict[str, Any]], summary: Dict[str, Any]) -> str:
        df = CorpusProcessor.rows_to_dataframe(rows)
        lines = [df.to_string(index=False) if not df.empty else "(no graphs)", ""]
        lines.append(f"graphs {summary['graphs']}, processed {summary['processed']}, skipped {summary['skipped']}")
        lines.append(f"verdicts {summary['verdicts']}")
        implications = pd.DataFrame(summary["implications"]).fillna(0).astype(int).T
        if not implications.empty:
            lines.append(implications.to_string())
        lines.append(f"inconsistencies {summary['inconsistencies']}, unchecked {summary['unchecked']}")
        return "\n".join(lines)


class GoldenTable:
    """verify-paper results"""

    @staticmethod
    def render(checks: List[Dict[str, Any]]) -> str:
        lines = []
        for check in checks:
            lines.append(f"[{'PASS' if check['passed'] else 'FAIL'}] {check['name']}")
            if not check["passed"]:
                lines.append(f"    expected {check['expected']}")
                lines.append(f"    observed {check['observed']}")
        passed = sum(c["passed"] for c in checks)
        lines.append(f"{passed}/{len(checks)} checks passed")
        return "\n".join(lines)
