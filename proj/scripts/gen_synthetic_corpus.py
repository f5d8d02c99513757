#!/usr/bin/env python3
"""Generate the bundled synthetic labeled corpus under data/synthetic/.

Eight topics, each with three genuinely relevant pages (topic + companion
term in the heading, strong reader feedback) and two keyword-stuffed spam
pages (high raw term frequency, near-zero feedback). A ranker that sorts by
raw matched-term count alone puts the spam first; the two-factor score must
not. The script checks that property against a mirror of the scoring rules
before writing anything, so a bad edit fails here instead of in CI.

Deterministic: a fixed seed drives page order and feedback jitter, so the
committed files regenerate byte-identically.
"""

import json
import math
import random
import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from porter_reference import porter_stem

ROOT = Path(__file__).resolve().parent.parent
OUT_DIR = ROOT / "data" / "synthetic"

# (topic term, companion term) per query; stems must stay pairwise disjoint
TOPICS = [
    ("cricket", "batting"),
    ("gardening", "compost"),
    ("photography", "aperture"),
    ("cycling", "panniers"),
    ("chess", "endgame"),
    ("astronomy", "telescope"),
    ("pottery", "glaze"),
    ("running", "marathon"),
]

RELEVANT_HEADINGS = [
    "{T} {c} notes",
    "{T} {c} practice log",
    "A {T} {c} diary",
]

# each template names its (topic, companion) occurrence counts
RELEVANT_CONTENT = [
    ("This week the {t} group worked on {c} basics until the light went.", 1, 1),
    ("Our {t} coach says good {c} form beats raw effort in every {t} drill.", 2, 1),
    ("I keep a {t} notebook so each {c} session gets written down.", 1, 1),
    ("The {t} club met twice and spent both evenings on {c} work.", 1, 1),
]

SPAM_HEADINGS = [
    "{T} deals and discount codes",
    "Cheap {T} gear roundup",
]

SPAM_CONTENT = [
    ("Hot {t} deals, {t} kits, and more {t} gear, all {t} priced to move.", 4),
    ("Grab {t} codes now because {t} prices and {t} stock move fast.", 3),
    ("Our {t} sale beats every other {t} shop this side of town.", 2),
]

# no heading stems, so the summarizer drops these
FILLER_SENTENCES = [
    "Lunch stretched long and nobody minded much.",
    "Rain threatened all afternoon yet held off.",
    "The drive home took nearly an hour in traffic.",
    "Somebody left the kettle going and we talked past dark.",
    "Next month looks busier, judging by the calendar.",
    "The forecast says colder evenings ahead.",
]

NEUTRAL_BLOGS = [
    ("Monday notebook", [
        "The notebook habit survived another Monday, barely.",
        "Two pages of lists and one honest paragraph.",
        "Coffee went cold before the second list was done.",
        "A neighbour waved through the window around noon.",
        "Tomorrow gets its own page, same as always.",
    ]),
    ("Night market notes", [
        "The night market smelled of charcoal and oranges.",
        "Every market stall had its own argument going.",
        "We left with dumplings and no regrets.",
        "The walk back took twice as long as planned.",
        "Prices were fair by any measure.",
    ]),
    ("Moving the office, slowly", [
        "The office move crawled into its third weekend.",
        "Boxes of cables nobody will ever claim.",
        "The new office gets morning sun, which helps.",
        "Somebody taped the kettle shut as a joke.",
        "One desk survived from the very first lease.",
    ]),
    ("Museum afternoon", [
        "The museum had a whole wing closed for cleaning.",
        "Still, the museum map alone was worth the visit.",
        "A guard recommended the basement gallery.",
        "We stayed until the lights flickered for closing.",
        "Postcards cost more than the entry fee.",
    ]),
]

NEUTRAL_NEWS = [
    ("City budget hearing recap", [
        "The budget hearing opened to a half-empty hall.",
        "Council members traded figures for two hours.",
        "A final budget vote lands next quarter.",
        "Residents queued at the microphone until nine.",
    ]),
    ("Transit schedule changes", [
        "Weekday transit services shift to earlier departures.",
        "The schedule posters go up at every stop this month.",
        "Riders can expect shorter waits at peak times.",
        "Off-peak trips lose one departure per hour.",
    ]),
    ("Harbor cleanup report", [
        "Volunteers pulled three tons of debris from the harbor.",
        "The cleanup crew logged every item by category.",
        "Most of the haul was plastic sheeting and rope.",
        "Organizers plan a second harbor sweep in spring.",
    ]),
    ("Library hours update", [
        "The library adds late hours on Wednesdays.",
        "Study rooms now open an hour earlier.",
        "The reading room keeps its weekend schedule.",
        "Staff expect the new library hours to stick.",
    ]),
]


def tokens(text):
    return re.findall(r"[a-z0-9]+", text.lower())


def stems(text):
    return [porter_stem(t) for t in tokens(text)]


def heading_stems(heading, stopwords):
    return {s for t, s in zip(tokens(heading), stems(heading)) if t not in stopwords}


# the built-in list; only words that could plausibly appear in a heading matter
STOPWORDS = set("""a about above after again against all am an and any are as at be because
been before being below between both but by can cannot could did do does doing down during
each few for from further had has have having he her here hers herself him himself his how
i if in into is it its itself just me more most my myself no nor not now of off on once
only or other our ours ourselves out over own same she should so some such than that the
their theirs them themselves then there these they this those through to too under until
up very was we were what when where which while who whom why will with you your yours
yourself yourselves""".split())


def kept_summary_sentences(heading, sentences):
    """Mirror of the summarizer: PF-gate on heading stems, keep ceil(N/2) by TF."""
    hstems = heading_stems(heading, STOPWORDS)
    scored = []
    for pos, s in enumerate(sentences):
        tf = sum(1 for st in stems(s) if st in hstems)
        if tf > 0:
            scored.append((pos, tf))
    cap = math.ceil(len(sentences) / 2)
    scored.sort(key=lambda pt: (-pt[1], pt[0]))
    kept = sorted(pos for pos, _ in scored[:cap])
    return [sentences[p] for p in kept]


def query_hits(heading, kept, query_stems):
    """(tf, location) pairs per query stem, mirroring index + searcher."""
    hits = []
    head = stems(heading)
    body = [s for sent in kept for s in stems(sent)]
    for q in query_stems:
        h = head.count(q)
        b = body.count(q)
        if h:
            hits.append((h, "H"))
        if b:
            hits.append((b, "B"))
    return hits


def two_factor_score(hits, fb, n_query_terms):
    query = sum(tf + (2 if loc == "H" else 1) for tf, loc in hits) / n_query_terms * 0.6
    eng = fb[0] + fb[1] + fb[2] + fb[3] + fb[4] + fb[5]
    meta = fb[6] + fb[7]
    return query + eng / 6 * 0.3 + meta / 2 * 0.1


def raw_tf(hits):
    return sum(tf for tf, _ in hits)


def main():
    rng = random.Random(1729)
    pages = []  # dicts with extra bookkeeping keys (topic, role, feedback)

    for ti, (topic, comp) in enumerate(TOPICS):
        for ri in range(3):
            heading = RELEVANT_HEADINGS[ri].format(T=topic.capitalize(), c=comp)
            picks = rng.sample(RELEVANT_CONTENT, 3)
            content = [tpl.format(t=topic, c=comp) for tpl, _, _ in picks]
            fillers = rng.sample(FILLER_SENTENCES, 3)
            feedback = (
                rng.randint(15, 28),           # subscribers
                rng.randint(4, 10),            # valid comments
                rng.randint(8, 20),            # votes
                rng.randint(12, 30),           # likes
                round(rng.uniform(3.4, 4.8), 1),
                rng.randint(3, 10),            # shares
                rng.randint(3, 7),             # tags
                1,
            )
            pages.append(dict(topic=ti, role="relevant", heading=heading,
                              sentences=content + fillers, feedback=feedback,
                              features=dict(blog_url=ri != 1, rss=True, ratio=True,
                                            date=True, comments=True, archive=ri == 0)))
        for si in range(2):
            heading = SPAM_HEADINGS[si].format(T=topic.capitalize())
            content = [tpl.format(t=topic) for tpl, _ in SPAM_CONTENT]
            fillers = rng.sample(FILLER_SENTENCES, 3)
            feedback = (0, rng.randint(0, 1), 0, rng.randint(0, 2), 0.0, 0, rng.randint(0, 1), 0)
            pages.append(dict(topic=ti, role="spam", heading=heading,
                              sentences=content + fillers, feedback=feedback,
                              features=dict(blog_url=True, rss=True, ratio=si == 0,
                                            date=True, comments=False, archive=False)))

    for heading, sentences in NEUTRAL_BLOGS:
        feedback = (rng.randint(2, 8), rng.randint(0, 4), rng.randint(0, 6),
                    rng.randint(1, 9), round(rng.uniform(2.0, 4.0), 1),
                    rng.randint(0, 3), rng.randint(1, 4), rng.choice([0, 1]))
        pages.append(dict(topic=None, role="blog_filler", heading=heading,
                          sentences=sentences, feedback=feedback,
                          features=dict(blog_url=True, rss=True, ratio=True,
                                        date=True, comments=True, archive=True)))

    for i, (heading, sentences) in enumerate(NEUTRAL_NEWS):
        pages.append(dict(topic=None, role="news", heading=heading,
                          sentences=sentences, feedback=None,
                          features=dict(blog_url=False, rss=False, ratio=False,
                                        date=i % 2 == 0, comments=i == 1, archive=False)))

    rng.shuffle(pages)
    assert len(pages) >= 40

    # --- invariants the acceptance gate depends on ---
    query_stems = [(porter_stem(t), porter_stem(c)) for t, c in TOPICS]
    for p in pages:
        seen = set(stems(p["heading"]))
        for s in p["sentences"]:
            seen |= set(stems(s))
        for ti, qs in enumerate(query_stems):
            if p["topic"] != ti:
                clash = seen & set(qs)
                assert not clash, f"{p['heading']!r} leaks stems {clash} of topic {ti}"

    for p in pages:
        kept = kept_summary_sentences(p["heading"], p["sentences"])
        p["kept"] = kept
        if p["role"] in ("relevant", "spam"):
            assert len(kept) == 3, (p["heading"], kept)

    for ti, qs in enumerate(query_stems):
        rel = [p for p in pages if p["topic"] == ti and p["role"] == "relevant"]
        spam = [p for p in pages if p["topic"] == ti and p["role"] == "spam"]
        rel_scores = [two_factor_score(query_hits(p["heading"], p["kept"], qs),
                                       p["feedback"], 2) for p in rel]
        spam_scores = [two_factor_score(query_hits(p["heading"], p["kept"], qs),
                                        p["feedback"], 2) for p in spam]
        assert min(rel_scores) > max(spam_scores), (ti, rel_scores, spam_scores)
        rel_raw = [raw_tf(query_hits(p["heading"], p["kept"], qs)) for p in rel]
        spam_raw = [raw_tf(query_hits(p["heading"], p["kept"], qs)) for p in spam]
        assert min(spam_raw) > max(rel_raw), (ti, rel_raw, spam_raw)

    # --- emit ---
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    host_slug = re.compile(r"[^a-z0-9]+")

    with open(OUT_DIR / "corpus.jsonl", "w") as f:
        for i, p in enumerate(pages):
            ordinal = i + 1
            p["summary_id"] = f"B{ordinal}"
            slug = host_slug.sub("-", p["heading"].lower()).strip("-")
            feats = p["features"]
            host = "exampleblogs.net" if feats["blog_url"] else "citydesk.example.com"
            row = {
                "page_id": f"post-{ordinal:03d}",
                "url": f"https://{host}/{slug}",
                "heading": p["heading"],
                "body": " ".join(p["sentences"]),
                "has_rss": feats["rss"],
                "internal_link_ratio": round(0.55 + (ordinal % 7) * 0.05, 2) if feats["ratio"]
                                       else round(0.05 + (ordinal % 5) * 0.05, 2),
                "has_author_info": False,
                "has_comments_section": feats["comments"],
                "has_archive": feats["archive"],
            }
            if feats["date"]:
                row["post_date"] = f"2025-{1 + (ordinal * 3) % 12:02d}-{1 + (ordinal * 7) % 28:02d}"
            f.write(json.dumps(row) + "\n")

    with open(OUT_DIR / "feedback.csv", "w") as f:
        f.write("blog_id,f1,f2,f3,f4,f5,f6,f7,f8\n")
        for p in pages:
            if p["feedback"] is None:
                continue
            fb = p["feedback"]
            f.write(f"{p['summary_id']},{fb[0]},{fb[1]},{fb[2]},{fb[3]},{fb[4]},{fb[5]},{fb[6]},{fb[7]}\n")

    with open(OUT_DIR / "queries.csv", "w") as f:
        f.write("query_id,query\n")
        for ti, (topic, comp) in enumerate(TOPICS):
            f.write(f"q{ti + 1},{topic} {comp}\n")

    with open(OUT_DIR / "judgments.csv", "w") as f:
        f.write("query_id,relevant_id\n")
        for ti in range(len(TOPICS)):
            rel = [p for p in pages if p["topic"] == ti and p["role"] == "relevant"]
            for p in sorted(rel, key=lambda p: int(p["summary_id"][1:])):
                f.write(f"q{ti + 1},{p['summary_id']}\n")

    print(f"wrote {len(pages)} pages, {len(TOPICS)} queries, to {OUT_DIR}")


if __name__ == "__main__":
    main()
