"""Corpus result processing"""
from typing import Any, Dict, List

import pandas as pd

IMPLICATIONS = ("hardness", "contractibility", "flip-loop", "tractability")


class CorpusProcessor:
    """Tabulation and aggregation of per-graph corpus rows"""

    @staticmethod
    def rows_to_dataframe(rows: List[Dict[str, Any]]) -> pd.DataFrame:
        """One row per graph: status, verdict and one column per implication"""
        columns = ["graph", "status", "verdict", "consistent", *IMPLICATIONS]
        if not rows:
            return pd.DataFrame(columns=columns)

        data = []
        for row in rows:
            record = {"graph": row["graph"], "status": row["status"], "verdict": None, "consistent": None}
            report = row.get("cross_validation")
            if report is not None:
                record["verdict"] = report["classification"]["verdict"]
                record["consistent"] = report["consistent"]
                for check in report["implications"]:
                    record[check["name"]] = check["status"]
            data.append(record)
        return pd.DataFrame(data, columns=columns)

    @staticmethod
    def summarize(df: pd.DataFrame) -> Dict[str, Any]:
        """Verdict counts, per-implication status counts, skips and inconsistencies"""
        processed = df[df["status"] == "ok"]
        implications = {
            name: {str(k): int(v) for k, v in processed[name].value_counts().sort_index().items()}
            for name in IMPLICATIONS
        }
        statuses = processed[list(IMPLICATIONS)]
        return {
            "graphs": int(len(df)),
            "processed": int(len(processed)),
            "skipped": int((df["status"] == "skipped").sum()),
            "verdicts": {str(k): int(v) for k, v in processed["verdict"].value_counts().sort_index().items()},
            "implications": implications,
            "inconsistencies": int((statuses == "REFUTED").any(axis=1).sum()),
            "unchecked": int((statuses == "UNCHECKED").any(axis=1).sum()),
        }
