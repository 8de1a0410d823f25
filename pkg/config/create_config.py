#!/usr/bin/env python3
import json
import sys
from pathlib import Path

DEFAULTS = {
    "verification": {
        "max_vertices": 5_000_000,
        "threads": 8,
        "report_schema_version": "1.0",
    },
    "lattice": {
        "default_rank": 3,
        "max_rank": 6,
    },
    "building": {
        "default_prime": 2,
        "max_prime": 7,
        "dimension": 4,
        "neighbor_cache_size": 100_000,
    },
    "export": {
        "indent": 2,
    },
}


def ask(prompt, default, skip_interactive=False):
    """Returns default if skip_interactive is True, else prompts user."""
    if skip_interactive:
        return default

    res = input(f"{prompt} [{default}]: ").strip()
    return type(default)(res) if res else default


def main():
    skip = "--defaults" in sys.argv[1:]
    if not skip:
        print("=== Weak-Modularity Verifier Configuration ===\n")
        skip = input("Use default settings? (Y/n): ").strip().lower() in ["", "y", "yes"]

    v_def = DEFAULTS["verification"]
    l_def = DEFAULTS["lattice"]
    b_def = DEFAULTS["building"]

    config = {
        "verification": {
            "max_vertices": ask("Vertex ceiling per ball", v_def["max_vertices"], skip),
            "threads": ask("Worker threads", v_def["threads"], skip),
            "report_schema_version": v_def["report_schema_version"],
        },
        "lattice": {
            "default_rank": ask("Default lattice rank n", l_def["default_rank"], skip),
            "max_rank": ask("Maximum lattice rank n", l_def["max_rank"], skip),
        },
        "building": {
            "default_prime": ask("Default prime p", b_def["default_prime"], skip),
            "max_prime": ask("Maximum supported prime", b_def["max_prime"], skip),
            "dimension": b_def["dimension"],
            "neighbor_cache_size": ask(
                "Building neighbor cache size", b_def["neighbor_cache_size"], skip
            ),
        },
        "export": DEFAULTS["export"],
    }

    target = Path(__file__).parent / "config.json"
    target.write_text(json.dumps(config, indent=2, ensure_ascii=False) + "\n")
    print(f"\n{target} created successfully!")


if __name__ == "__main__":
    main()
