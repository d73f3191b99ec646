#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 servqual contributors
"""Freezes Porter stemmer expectations into tests/fixtures/porter_vectors.txt.

Expected stems come from NLTK's PorterStemmer in ORIGINAL_ALGORITHM mode,
an implementation independent of ours. The lexicon mixes ordinary English
review vocabulary, words from the repository's own text, the rule examples of the original algorithm description
and synthetic stem+suffix combinations that reach every rule. Needs nltk.
"""
import itertools
import random
import re
from pathlib import Path

from nltk.stem.porter import PorterStemmer

ROOT = Path(__file__).resolve().parent.parent

RULE_EXAMPLES = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing conflated troubled
sized hopping tanned falling hissing fizzed failing filing happy sky relational conditional
rational valenci hesitanci digitizer conformabli radicalli differentli vileli analogousli
vietnamization predication operator feudalism decisiveness hopefulness callousness formaliti
sensitiviti sensibiliti triplicate formative formalize electriciti electrical hopeful goodness
revival allowance inference airliner gyroscopic adjustable defensible irritant replacement
adjustment dependent adoption homologou communism activate angulariti homologous effective
bowdlerize probate rate cease controll roll generalizations oscillators
""".split()

REVIEW_WORDS = """
staff staffs service services friendly friendliness helpful helpfulness attentive attentively
breakfast breakfasts restaurant restaurants pool pools villa villas view views beach beaches
spa spas garden gardens bathroom bathrooms room rooms jungle amazing beautiful beautifully
brilliant genuinely lovely greet greeted greeting greets name named proactive responsive
responsiveness responsibility reliable reliability assurance empathy tangible tangibles
courteous courtesy knowledgeable knowledge competent competence reassuring professional
professionally safe safety confident confidence caring personal personally individual
individually understanding considerate compassionate thoughtful kind kindness quick quickly
prompt promptly fast immediate immediately speedy eager willing swift swiftly stayed staying
stays recommended recommending recommendation experience experienced experiences wonderful
wonderfully relaxing relaxation relaxed luxury luxurious luxuriously excellent excellence
hospitality hospitable comfortable comfortably cleanliness cleaned cleaning spacious
generously generous delicious deliciously memorable unforgettable disappointing disappointed
disappointment noisy noise expensive pricing priced reception receptionist concierge
transfers transportation arrival arriving departure departing booking booked reservations
accommodation accommodations seminyak ubud bali indonesia dinner lunch cocktails drinks
""".split()

STEMS = ["connect", "relat", "gener", "form", "sens", "hope", "adjust", "troubl", "hop",
         "fil", "condit", "activ", "nation", "caus", "feder", "moder", "operat", "digit"]
SUFFIXES = ["", "s", "es", "ies", "ed", "ing", "eed", "y", "ational", "tional", "enci",
            "anci", "izer", "abli", "alli", "entli", "eli", "ousli", "ization", "ation",
            "ator", "alism", "iveness", "fulness", "ousness", "aliti", "iviti", "biliti",
            "icate", "ative", "alize", "iciti", "ical", "ful", "ness", "al", "ance", "ence",
            "er", "ic", "able", "ible", "ant", "ement", "ment", "ent", "sion", "tion", "ou",
            "ism", "ate", "iti", "ous", "ive", "ize", "e", "ll", "ings", "ations", "izations"]


def main():
    words = set()
    for source in [ROOT / "README.md", ROOT / "data" / "stopwords_en.txt",
                   *sorted((ROOT / "tests" / "fixtures").glob("*.jsonl")),
                   *sorted((ROOT / "tests" / "fixtures").glob("*.csv"))]:
        words.update(re.findall(r"[a-z]+", source.read_text(encoding="utf-8").lower()))
    words.update(RULE_EXAMPLES)
    words.update(REVIEW_WORDS)
    words.update(s + x for s, x in itertools.product(STEMS, SUFFIXES))
    rng = random.Random(1980)
    letters = "abcdefghijklmnopqrstuvwxyz"
    vowels_heavy = "aeiouyy" + letters
    for _ in range(400):
        n = rng.randint(1, 9)
        words.add("".join(rng.choice(vowels_heavy) for _ in range(n)) + rng.choice(SUFFIXES))
    stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    out = ROOT / "tests" / "fixtures" / "porter_vectors.txt"
    with open(out, "w") as f:
        f.write("# word<TAB>stem, Porter 1980 (NLTK ORIGINAL_ALGORITHM mode)\n")
        for w in sorted(words):
            f.write(f"{w}\t{stemmer.stem(w)}\n")


if __name__ == "__main__":
    main()
