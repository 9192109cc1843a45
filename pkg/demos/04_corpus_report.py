"""Build a ten-image synthetic corpus and produce a ratio table with the CLI.

Equivalent shell commands:

    erle report corpus/ --threshold 10 --out report.csv
    erle histogram corpus/08_noisy_gradient.bmp --mode enhanced --out hist.csv
"""
import os
import sys
import tempfile

from erle.cli import main
from erle.fixtures import write_corpus

with tempfile.TemporaryDirectory() as tmp:
    corpus = os.path.join(tmp, "corpus")
    write_corpus(corpus)
    threshold = sys.argv[1] if len(sys.argv) > 1 else "10"
    main(["report", corpus, "--threshold", threshold])
    print()
    main(["histogram", os.path.join(corpus, "08_noisy_gradient.bmp"), "--mode", "classic"])
