"""
Egonet Paradox - End-to-end demo at desk scale
Synthesizes an ego dataset, runs every statistic, builds a configuration-model
graph, simulates outbreaks and collects a summary table

Usage: python scripts/run_demo.py [output_dir]
"""

import os
import sys
import time

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from dotenv import load_dotenv

from main import execute
from src.config import DATA_DIR, EPIDEMIC_OUTPUT, HUB_OUTPUT, OUTPUT_DIR, SUMMARY_OUTPUT, VALIDATION_OUTPUT
from src.exceptions import EgonetError
from src.utils.helpers import print_header, print_section

load_dotenv()


def demo_steps(out_dir: str, data_dir: str):
    """Commands of the demo pipeline, in order"""
    dataset = os.path.join(data_dir, "demo_dyads.csv")
    graph = os.path.join(data_dir, "demo_graph.edges")
    return [
        ("SYNTHETIC EGO DATASET", ["synth", "--egos", "2000", "--alters", "15", "--min-alters", "8",
                                   "--zipf", "1.2", "--coupling", "0.8", "--unavailable", "0.05",
                                   "--seed", "7", "--out", dataset]),
        ("VALIDATION", ["validate", "--in", dataset, "--out", os.path.join(out_dir, VALIDATION_OUTPUT)]),
        ("PARADOX STATISTICS", ["stats", "--in", dataset, "--out-dir", out_dir]),
        ("HUB ALTERS", ["hub", "--in", dataset, "--min-available", "5", "--perms", "200",
                        "--trend-perms", "2000", "--seed", "11", "--out", os.path.join(out_dir, HUB_OUTPUT)]),
        ("GRAPH", ["graph", "--preset", "desk-scale", "--nodes", "2000", "--seed", "5", "--out", graph]),
        ("OUTBREAKS", ["simulate", "--graph", graph, "--beta", "0.01", "--p", "0.0", "0.75", "1.0",
                       "--steps", "20", "--replicates", "20", "--seed", "3",
                       "--out", os.path.join(out_dir, EPIDEMIC_OUTPUT)]),
        ("SUMMARY", ["report", "--in-dir", out_dir, "--out", os.path.join(out_dir, SUMMARY_OUTPUT)]),
    ]


def run_demo(out_dir: str = OUTPUT_DIR, data_dir: str = DATA_DIR) -> int:
    """Run every demo step; stops at the first failing one and returns its exit code"""
    print_header("EGONET PARADOX - DESK-SCALE DEMO", "▓")
    start = time.time()

    for title, argv in demo_steps(out_dir, data_dir):
        print_section(title)
        code = execute(argv)
        if code != 0:
            print(f"❌ Step failed ({code}): {' '.join(argv)}")
            return code

    print(f"\n⏱️  Demo finished in {time.time() - start:.1f}s")
    print(f"📁 Outputs in {out_dir}")
    return 0


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else OUTPUT_DIR
    try:
        sys.exit(run_demo(out_dir))
    except EgonetError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
