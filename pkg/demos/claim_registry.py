"""Run the whole claim registry at desk scale and show the findings.

Run:  python demos/claim_registry.py

Two default instances are expected to come back "violated": the degenerate
boundary case of the weight-4 contraction on the 6-cycle, and the
all-singleton-block member of the cycle-with-blocks family at k = 4, whose
weak Roman number is k - 1, not k.  Both counterexamples re-validate
against the raw predicates; the registry keeps them visible instead of
hiding the boundary behaviour.
"""

from weakroman import summary_table, verify_all


def main():
    reports = verify_all(max_n=32)
    print(summary_table(reports))
    print()
    for rep in reports:
        if rep.verdict == "violated":
            print(f"violated: {rep.claim_id} on [{rep.instance}]")
            print(f"  details: {rep.details}")
            if rep.witness:
                print(f"  witness: {rep.witness}")
    slow = sorted(reports, key=lambda r: -r.elapsed_ms)[:5]
    print("\nslowest checks:")
    for rep in slow:
        print(f"  {rep.claim_id:24s} {rep.elapsed_ms:8.0f} ms  [{rep.instance}]")


if __name__ == "__main__":
    main()
