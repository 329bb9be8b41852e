"""
Running the verification suite from Python
==========================================

Same as `groupgraphs verify`, on a small catalog.
"""

from groupgraphs import run_suite

report = run_suite(["S3", "Q8", "SL(2,3)", "EA(2,3)"], checks="all", threads=2)
for line in report.summary_lines():
    print(line)
print("all pass:", report.passed)
