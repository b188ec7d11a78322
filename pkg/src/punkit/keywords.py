"""Context keyword extraction and normalization.

RAKE phrase extraction over a stopword list, coarse part-of-speech filtering
from a flat lemma->tags lexicon, a small rule-based lemmatizer, and the
context builder that removes pun-word collisions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import ValidationError
from .types import ContextSpec, PunPair

# Words are letter/digit runs; internal apostrophes and hyphens stay inside
# the token so contractions and compounds survive ("don't", "mother-in-law").
_WORD_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*", re.UNICODE)

NOUN, VERB, ADJ, ADV, OTHER = "noun", "verb", "adj", "adv", "other"
POS_TAGS = (NOUN, VERB, ADJ, ADV, OTHER)

DEFAULT_MAX_PHRASE_LEN = 3
CONTEXT_KEYWORD_CAP = 8


@dataclass(frozen=True)
class ScoredPhrase:
    """A candidate keyword phrase with its RAKE score."""

    phrase: str
    score: float

    def __post_init__(self):
        if not self.phrase:
            raise ValidationError("empty phrase", field="phrase")
        if self.score < 0:
            raise ValidationError("negative score", field="score")

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(self.phrase.split())

    @property
    def head(self) -> str:
        return self.phrase.split()[-1]


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens, split on whitespace and punctuation."""
    return [m.group(0).lower() for m in _WORD_RE.finditer(text)]


def default_stopwords() -> frozenset[str]:
    """The bundled SMART stopword list."""
    data = resources.files("punkit.data").joinpath("stopwords_smart.txt")
    return frozenset(_parse_wordlist(data.read_text(encoding="utf-8")))


def load_stopwords(path) -> frozenset[str]:
    return frozenset(_parse_wordlist(Path(path).read_text(encoding="utf-8")))


def _parse_wordlist(text: str) -> Iterable[str]:
    for line in text.splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            yield word


def _candidate_phrases(text: str, stopwords: frozenset[str],
                       max_phrase_len: int) -> list[tuple[str, ...]]:
    """Maximal runs of non-stopword tokens, broken on stopwords and punctuation."""
    phrases = []
    current: list[str] = []
    pos = 0
    for match in _WORD_RE.finditer(text):
        gap = text[pos:match.start()]
        if current and any(not ch.isspace() for ch in gap):
            phrases.append(tuple(current))
            current = []
        token = match.group(0).lower()
        if token in stopwords:
            if current:
                phrases.append(tuple(current))
                current = []
        else:
            current.append(token)
        pos = match.end()
    if current:
        phrases.append(tuple(current))
    return [p for p in phrases if len(p) <= max_phrase_len]


def rake_extract(text: str, stopwords: frozenset[str],
                 max_phrase_len: int = DEFAULT_MAX_PHRASE_LEN) -> list[ScoredPhrase]:
    """RAKE keyword extraction.

    Word score is degree/frequency over the phrase co-occurrence graph; a
    phrase scores the sum of its word scores. Output is unique phrases in
    descending score order, ties broken by first occurrence in the text.
    """
    if not text.strip():
        raise ValidationError("empty text")
    if not stopwords:
        raise ValidationError("empty stopword list")

    candidates = _candidate_phrases(text, stopwords, max_phrase_len)
    if not candidates:
        return []

    freq: dict[str, int] = {}
    degree: dict[str, int] = {}
    for phrase in candidates:
        for word in phrase:
            freq[word] = freq.get(word, 0) + 1
            degree[word] = degree.get(word, 0) + len(phrase)

    word_score = {w: degree[w] / freq[w] for w in freq}

    first_seen: dict[tuple[str, ...], int] = {}
    for i, phrase in enumerate(candidates):
        first_seen.setdefault(phrase, i)

    unique = sorted(first_seen, key=first_seen.get)
    scored = [ScoredPhrase(" ".join(p), sum(word_score[w] for w in p))
              for p in unique]
    scored.sort(key=lambda sp: -sp.score)  # stable: ties keep occurrence order
    return scored


# ---------------------------------------------------------------------------
# Lemmatizer: suffix stripping with doubling/e-restoration, plus an exception
# table for irregulars and rule misfires. Must stay idempotent.

LEMMA_EXCEPTIONS = {
    "ran": "run", "running": "run",
    "geese": "goose", "men": "man", "women": "woman", "children": "child",
    "feet": "foot", "teeth": "tooth", "mice": "mouse", "people": "person",
    "wrote": "write", "written": "write", "writing": "write",
    "ate": "eat", "eaten": "eat", "eating": "eat",
    "went": "go", "gone": "go", "goes": "go", "going": "go",
    "said": "say", "saw": "see", "seen": "see", "was": "be", "were": "be",
    "is": "be", "are": "be", "been": "be", "being": "be", "am": "be",
    "has": "have", "had": "have", "having": "have", "does": "do", "did": "do",
    "done": "do", "doing": "do", "made": "make", "making": "make",
    "took": "take", "taken": "take", "taking": "take",
    "came": "come", "coming": "come", "gave": "give", "given": "give",
    "giving": "give", "got": "get", "gotten": "get", "getting": "get",
    "found": "find", "left": "leave", "leaves": "leaf",
    "told": "tell", "thought": "think", "brought": "bring", "bought": "buy",
    "caught": "catch", "taught": "teach", "fought": "fight", "sought": "seek",
    "held": "hold", "kept": "keep", "felt": "feel", "met": "meet",
    "lost": "lose", "paid": "pay", "sold": "sell", "stood": "stand",
    "sat": "sit", "spoke": "speak", "spoken": "speak", "broke": "break",
    "broken": "break", "chose": "choose", "chosen": "choose",
    "drove": "drive", "driven": "drive", "driving": "drive",
    "drawn": "draw", "drew": "draw", "flew": "fly", "flown": "fly",
    "flies": "fly", "grew": "grow", "grown": "grow", "knew": "know",
    "known": "know", "rode": "ride", "ridden": "ride", "riding": "ride",
    "rose": "rise", "risen": "rise", "rising": "rise", "sang": "sing",
    "sung": "sing", "sank": "sink", "sunk": "sink", "slept": "sleep",
    "swam": "swim", "swum": "swim", "swimming": "swim", "threw": "throw",
    "thrown": "throw", "wore": "wear", "worn": "wear", "won": "win",
    "winning": "win", "wound": "wind", "dug": "dig", "digging": "dig",
    "hung": "hang", "heard": "hear", "hid": "hide", "hidden": "hide",
    "hiding": "hide", "lit": "light", "meant": "mean", "read": "read",
    "rang": "ring", "rung": "ring", "sent": "send", "shot": "shoot",
    "shone": "shine", "shining": "shine", "built": "build", "bled": "bleed",
    "bred": "breed", "fed": "feed", "fled": "flee", "led": "lead",
    "sped": "speed", "slid": "slide", "sliding": "slide", "spun": "spin",
    "stole": "steal", "stolen": "steal", "struck": "strike", "swore": "swear",
    "sworn": "swear", "tore": "tear", "torn": "tear", "woke": "wake",
    "woken": "wake", "waking": "wake", "wove": "weave", "woven": "weave",
    "dyed": "dye", "dying": "die", "dyeing": "dye", "lying": "lie",
    "tying": "tie", "dies": "die", "ties": "tie", "lies": "lie",
    "opened": "open", "opening": "open", "offered": "offer",
    "offering": "offer", "entered": "enter", "entering": "enter",
    "ordered": "order", "ordering": "order", "covered": "cover",
    "covering": "cover", "gathered": "gather", "gathering": "gather",
    "delivered": "deliver", "delivering": "deliver", "visited": "visit",
    "visiting": "visit", "limited": "limit", "editing": "edit",
    "edited": "edit", "exited": "exit", "exiting": "exit",
    "listened": "listen", "listening": "listen", "happened": "happen",
    "happening": "happen", "traveled": "travel", "traveling": "travel",
    "modeled": "model", "modeling": "model", "labeled": "label",
    "labeling": "label", "canceled": "cancel", "canceling": "cancel",
    "watches": "watch", "matches": "match", "catches": "catch",
    "touches": "touch", "teaches": "teach", "reaches": "reach",
    "beaches": "beach", "peaches": "peach", "coaches": "coach",
    "branches": "branch", "benches": "bench", "lunches": "lunch",
    "punches": "punch", "pitches": "pitch", "stitches": "stitch",
    "witches": "witch", "sketches": "sketch", "stretches": "stretch",
    "speeches": "speech", "churches": "church", "marches": "march",
    "porches": "porch", "torches": "torch", "crutches": "crutch",
    "aches": "ache", "ashes": "ash", "wishes": "wish", "dishes": "dish",
    "bushes": "bush", "brushes": "brush", "crashes": "crash",
    "flashes": "flash", "splashes": "splash", "pushes": "push",
    "finishes": "finish", "punishes": "punish", "vanishes": "vanish",
    "axes": "axe", "quizzes": "quiz", "buses": "bus", "gases": "gas",
    "lenses": "lens", "lens": "lens", "canvases": "canvas",
    "canvas": "canvas", "viruses": "virus", "bonuses": "bonus",
    "cacti": "cactus", "foci": "focus", "agreed": "agree", "freed": "free",
    "guaranteed": "guarantee", "travelled": "travel",
    "travelling": "travel", "evening": "evening", "morning": "morning",
    "movies": "movie", "series": "series", "species": "species",
    "wolves": "wolf", "knives": "knife", "wives": "wife", "lives": "life",
    "loaves": "loaf", "shelves": "shelf", "halves": "half",
    "thieves": "thief", "calves": "calf", "hooves": "hoof",
    "scarves": "scarf", "echoes": "echo", "heroes": "hero",
    "potatoes": "potato", "tomatoes": "tomato", "mosquitoes": "mosquito",
    "volcanoes": "volcano", "dominoes": "domino", "tornadoes": "tornado",
}

_VOWELS = set("aeiou")


def _is_cvc(stem: str) -> bool:
    """Consonant-vowel-consonant ending, last consonant not w/x/y."""
    if len(stem) < 3:
        return False
    a, b, c = stem[-3], stem[-2], stem[-1]
    return (a not in _VOWELS and b in _VOWELS and c not in _VOWELS
            and c not in "wxy")


def _restore_stem(stem: str) -> str:
    """Undo consonant doubling or restore a dropped final 'e'."""
    if (len(stem) >= 3 and stem[-1] == stem[-2]
            and stem[-1] not in _VOWELS and stem[-1] not in "lsz"):
        return stem[:-1]                       # hopping -> hop
    if len(stem) <= 4 and _is_cvc(stem):
        return stem + "e"                      # star(ing) -> stare
    if stem.endswith(("at", "iz", "ol", "iv", "ag", "us")) and len(stem) > 4:
        return stem + "e"                      # creat(ed) -> create
    return stem


def _has_vowel(stem: str) -> bool:
    return any(ch in _VOWELS or ch == "y" for ch in stem)


def lemmatize(token: str) -> str:
    """Rule-based lemma for a single lowercase word. Idempotent."""
    word = token.strip().lower()
    if not word:
        return word
    if word in LEMMA_EXCEPTIONS:
        return LEMMA_EXCEPTIONS[word]
    if len(word) <= 3:
        return word

    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"                 # stories -> story
    if word.endswith("ied"):
        return word[:-3] + "y"                 # carried -> carry
    if word.endswith("sses"):
        return word[:-2]                       # classes -> class
    if word.endswith(("xes", "zzes", "ches", "shes")):
        return word[:-2]                       # boxes -> box, buzzes -> buzz
    if word.endswith("ing") and len(word) > 5 and _has_vowel(word[:-3]):
        return _restore_stem(word[:-3])
    if (word.endswith("ed") and not word.endswith("eed") and len(word) > 4
            and _has_vowel(word[:-2])):
        return _restore_stem(word[:-2])
    if (word.endswith("s") and not word.endswith(("ss", "us", "is"))
            and len(word) > 3):
        return word[:-1]                       # hunts -> hunt
    return word


# ---------------------------------------------------------------------------
# POS lexicon

class PosLexicon:
    """Flat lemma -> coarse-tag-set mapping."""

    def __init__(self, entries: dict[str, frozenset[str]]):
        for lemma, tags in entries.items():
            if not tags:
                raise ValidationError(f"lemma {lemma!r} has no tags")
            bad = tags - set(POS_TAGS)
            if bad:
                raise ValidationError(f"lemma {lemma!r} has unknown tags {bad}")
        self._entries = entries

    def __len__(self):
        return len(self._entries)

    def tags(self, lemma: str) -> Optional[frozenset[str]]:
        return self._entries.get(lemma)

    @classmethod
    def load(cls, path) -> "PosLexicon":
        """Read `lemma TAB comma-joined-tags` lines."""
        entries = {}
        for lineno, line in enumerate(
                Path(path).read_text(encoding="utf-8").splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValidationError("expected `lemma TAB tags`", line=lineno)
            lemma, tag_field = parts[0].strip().lower(), parts[1]
            tags = frozenset(t.strip() for t in tag_field.split(",") if t.strip())
            if not tags:
                raise ValidationError(f"no tags for {lemma!r}", line=lineno)
            entries[lemma] = tags
        return cls(entries)


def pos_filter(phrases: Sequence[ScoredPhrase],
               lexicon: PosLexicon) -> list[ScoredPhrase]:
    """Keep phrases whose head-word lemma is a noun or verb.

    Lemmas missing from the lexicon are kept; dropping unknowns would
    silently eat domain vocabulary.
    """
    kept = []
    for sp in phrases:
        tags = lexicon.tags(lemmatize(sp.head))
        if tags is None or tags & {NOUN, VERB}:
            kept.append(sp)
    return kept


# ---------------------------------------------------------------------------
# Context building

def build_context(text: Optional[str] = None,
                  keywords: Optional[Sequence[str]] = None,
                  exclude: Optional[PunPair] = None,
                  stopwords: Optional[frozenset[str]] = None,
                  pos_lexicon: Optional[PosLexicon] = None,
                  cap: int = CONTEXT_KEYWORD_CAP) -> ContextSpec:
    """Build a ContextSpec from raw text or an explicit keyword list.

    Text goes through RAKE and the noun/verb filter; both paths then drop any
    keyword whose head lemma matches the excluded pair's pun or alternative
    word, dedup, and keep at most ``cap`` entries in score order.
    """
    if (text is None) == (keywords is None):
        raise ValidationError("provide exactly one of text or keywords")

    if text is not None:
        sw = stopwords if stopwords is not None else default_stopwords()
        phrases = rake_extract(text, sw)
        if pos_lexicon is not None:
            phrases = pos_filter(phrases, pos_lexicon)
        ordered = [sp.phrase for sp in phrases]
    else:
        ordered = [" ".join(k.split()).lower() for k in keywords]

    banned = set()
    if exclude is not None:
        banned = {lemmatize(exclude.pun_word), lemmatize(exclude.alt_word)}

    seen = set()
    result = []
    for kw in ordered:
        if not kw or kw in seen:
            continue
        if any(lemmatize(tok) in banned for tok in kw.split()):
            continue
        seen.add(kw)
        result.append(kw)
        if len(result) >= cap:
            break

    if not result:
        raise ValidationError("empty context: every keyword was excluded")
    return ContextSpec(tuple(result), source_sentence=text)
