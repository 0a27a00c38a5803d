#!/usr/bin/env python3
"""Generates the synthetic fixtures used by the test suites.

  domain_corpus.csv  200 articles, 5 domains x 40, url,headline,body,sub_domain,domain,author
  mbti_posts.csv     16 types x 50 rows, type,posts with '|||' separated posts

Everything is drawn from random.Random(seed) so reruns are byte-identical.
"""
import csv
import random
import sys

DOMAINS = {
    "Finance": "stock fund investor portfolio interest dividend loan equity capital bond "
               "credit budget revenue profit valuation tax cash debt banking asset",
    "Leadership": "leader team culture mentor vision trust coach employee empower "
                  "feedback manager inspire delegate motivation morale hiring talent "
                  "character humility listening",
    "Marketing": "brand campaign customer audience advertising social content influencer "
                 "funnel message channel promotion engagement loyalty awareness email "
                 "storytelling logo launch",
    "Strategy": "competitive advantage growth plan market position scenario merger "
                "acquisition roadmap priority pivot execution framework goal "
                "differentiation expansion model",
    "Technology": "software cloud data platform security algorithm automation device "
                  "network startup digital code app developer machine learning "
                  "infrastructure computing",
}

GENERIC = ("business company people work time year way new make help need idea "
           "customer team right start good great important best small founder "
           "entrepreneur success question process result change simple strong "
           "focus value long future approach industry world").split()

LINKS = "and the of to a in that is for with it on as your you we can this".split()

FIRST = ["Mark", "Roberta", "Eyal", "Sona", "Melissa", "Zaheer", "Jessica", "Paulo",
         "Heather", "Nina", "Omar", "Grace", "Victor", "Lena", "Tariq", "Chen",
         "Priya", "Diego", "Hana", "Samuel"]
LAST = ["Abell", "Holland", "Shinar", "Jepsen", "Packham", "Dodhia", "OConnell",
        "Delgado", "Ripley", "Varga", "Haddad", "Moreau", "Lindqvist", "Okafor",
        "Rahman", "Wei", "Nair", "Castro", "Sato", "Berg"]

MBTI_AXES = {
    "E": "party friends crowd talk social outgoing energy group loud people",
    "I": "quiet alone reading solitude introspection calm home thinking private book",
    "S": "practical details facts concrete experience routine hands present real step",
    "N": "imagine theory abstract future possibility pattern concept intuition meaning dream",
    "T": "logic analysis objective reason efficient argument critique system rational debate",
    "F": "feel empathy harmony values care compassion kindness emotion heart support",
    "J": "schedule plan organized deadline list structure order decide finish prepare",
    "P": "spontaneous flexible open adapt explore improvise wander options curious later",
}

MBTI_GENERIC = ("today think really know good time like love life day going lol want "
                "people thing pretty yeah actually feel make")


def sentence(rng, pools, n_words):
    words = []
    for _ in range(n_words):
        pool, p = pools[0], rng.random()
        acc = 0.0
        for cand, weight in pools:
            acc += weight
            if p < acc:
                pool = cand
                break
        words.append(rng.choice(pool))
    words[0] = words[0].capitalize()
    return " ".join(words) + rng.choice([".", ".", ".", "!", "?"])


def domain_corpus(rng, path):
    authors = [f"{f} {l}" for f, l in zip(FIRST, LAST)]
    rows = []
    idx = 0
    for d_i, (domain, vocab) in enumerate(DOMAINS.items()):
        vocab = vocab.split()
        domain_authors = authors[d_i * 4:(d_i + 1) * 4]
        for k in range(40):
            author = domain_authors[k % 4]
            signal = 0.15 + 0.1 * rng.random()
            pools = [(vocab, signal), (GENERIC, 0.5 - signal / 2), (LINKS, 0.5 - signal / 2)]
            n_sent = rng.randint(8, 14)
            body = " ".join(sentence(rng, pools, rng.randint(7, 22)) for _ in range(n_sent))
            headline = sentence(rng, pools, 6)[:-1]
            url = f"https://example.com/article/{100000 + idx}"
            rows.append([url, headline, body, "", domain, author])
            idx += 1
    rng.shuffle(rows)
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["url", "headline", "body", "sub_domain", "domain", "author"])
        w.writerows(rows)


def mbti_corpus(rng, path):
    types = [a + b + c + d for a in "EI" for b in "SN" for c in "TF" for d in "JP"]
    generic = MBTI_GENERIC.split()
    rows = []
    for t in types:
        axis_vocab = [MBTI_AXES[letter].split() for letter in t]
        for _ in range(50):
            posts = []
            for _ in range(rng.randint(3, 6)):
                words = []
                for _ in range(rng.randint(8, 16)):
                    if rng.random() < 0.35:
                        words.append(rng.choice(rng.choice(axis_vocab)))
                    else:
                        words.append(rng.choice(generic))
                posts.append(" ".join(words))
            rows.append([t, "|||".join(posts)])
    rng.shuffle(rows)
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["type", "posts"])
        w.writerows(rows)


if __name__ == "__main__":
    out = sys.argv[1]
    domain_corpus(random.Random(20211), f"{out}/domain_corpus.csv")
    mbti_corpus(random.Random(8675), f"{out}/mbti_posts.csv")
