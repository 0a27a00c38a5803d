#!/usr/bin/env python3
"""Builds tests/fixtures/syllable_oracle.tsv.

Selects 200 words by even-stride sampling of the 5,000 most frequent English
words (wordfreq), keeping alphabetic words of length >= 3 that are not
stopwords and that the CMU Pronouncing Dictionary knows. The expected count is
the number of stressed vowel phonemes in the word's first pronunciation.

Requires `pip install cmudict wordfreq scikit-learn`.
"""
import sys

import cmudict
from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS
from wordfreq import top_n_list

SAMPLE = 200


def syllables(phones):
    return sum(1 for p in phones if p[-1].isdigit())


def main(out):
    pron = cmudict.dict()
    pool = [
        w
        for w in top_n_list("en", 5000)
        if w.isascii() and w.isalpha() and len(w) >= 3
        and w not in ENGLISH_STOP_WORDS and w in pron
    ]
    stride = len(pool) / SAMPLE
    picked = [pool[int(i * stride)] for i in range(SAMPLE)]
    with open(out, "w", encoding="utf-8") as f:
        f.write("# word\tsyllables (CMU Pronouncing Dictionary, first pronunciation)\n")
        for w in picked:
            f.write(f"{w}\t{syllables(pron[w][0])}\n")


if __name__ == "__main__":
    main(sys.argv[1])
