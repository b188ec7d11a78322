import pytest

from punkit.errors import ValidationError
from punkit.types import (ClassifierVerdict, CompatibilityRecord, ContextSpec,
                          DecodeParams, GenerationRecord, PromptRecord,
                          PunPair, ScoredPair)


def make_pair(pun="boar", alt="bore"):
    return PunPair(pun, alt, "an uncastrated male hog",
                   "a dull and uninteresting person")


class TestPunPair:
    def test_kind_derived_heterographic(self):
        assert make_pair().kind == "heterographic"

    def test_kind_derived_homographic(self):
        pair = PunPair("pine", "pine", "an evergreen tree", "long painfully")
        assert pair.kind == "homographic"

    def test_kind_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            PunPair("boar", "bore", "g1", "g2", kind="homographic")

    def test_words_lowercased(self):
        pair = PunPair("Boar", "BORE", "g1", "g2")
        assert pair.key == ("boar", "bore")

    @pytest.mark.parametrize("pun,alt", [("", "bore"), ("bo ar", "bore"),
                                         ("boar", " ")])
    def test_bad_words_rejected(self, pun, alt):
        with pytest.raises(ValidationError):
            PunPair(pun, alt, "g1", "g2")

    def test_empty_gloss_rejected(self):
        with pytest.raises(ValidationError):
            PunPair("boar", "bore", "", "g2")


class TestContextSpec:
    def test_normalizes_case_and_spacing(self):
        ctx = ContextSpec(("Hunts", "  DEER "))
        assert ctx.keywords == ("hunts", "deer")

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            ContextSpec(())

    def test_rejects_duplicates_after_lowercasing(self):
        with pytest.raises(ValidationError):
            ContextSpec(("deer", "Deer"))

    def test_rejects_too_many_keywords(self):
        with pytest.raises(ValidationError):
            ContextSpec(tuple(f"kw{i}" for i in range(17)))

    def test_rejects_long_phrase(self):
        with pytest.raises(ValidationError):
            ContextSpec(("one two three four five six",))

    def test_joined(self):
        assert ContextSpec(("hunts", "deer")).joined() == "hunts, deer"


class TestCompatibilityRecord:
    def test_label_zero_forbids_human_pun(self):
        with pytest.raises(ValidationError):
            CompatibilityRecord(ContextSpec(("deer",)), make_pair(), 0,
                                human_pun="nope")

    def test_difficulty_range(self):
        with pytest.raises(ValidationError):
            CompatibilityRecord(ContextSpec(("deer",)), make_pair(), 1,
                                human_pun="ok", difficulty=6)

    def test_keyword_equal_to_pun_word_rejected(self):
        with pytest.raises(ValidationError):
            CompatibilityRecord(ContextSpec(("boar", "deer")), make_pair(), 0)

    def test_alt_word_collision_allowed(self):
        # Only the pun word is barred from the keywords.
        rec = CompatibilityRecord(ContextSpec(("bore", "deer")), make_pair(), 0)
        assert rec.pair.alt_word in rec.context.keywords

    def test_bad_split_rejected(self):
        with pytest.raises(ValidationError):
            CompatibilityRecord(ContextSpec(("deer",)), make_pair(), 0,
                                split="validation")


class TestSmallTypes:
    def test_scored_pair_rank_positive(self):
        with pytest.raises(ValidationError):
            ScoredPair(make_pair(), 1.0, 0, "unsupervised")

    def test_verdict_confidence_range(self):
        with pytest.raises(ValidationError):
            ClassifierVerdict("suitable", 1.5)

    def test_decode_defaults(self):
        decode = DecodeParams()
        assert decode.beam_size == 2
        assert decode.max_target_len == 256
        assert decode.stop == "eos"

    def test_decode_rejects_unknown_stop(self):
        with pytest.raises(ValidationError):
            DecodeParams(stop="newline")

    def test_pretrain_prompt_needs_target(self):
        with pytest.raises(ValidationError):
            PromptRecord(prompt="p", kind="pretrain")

    def test_generation_record_id_stable(self):
        rec = GenerationRecord(ContextSpec(("deer",)), make_pair(), "p", "t",
                               "stub:echo", DecodeParams())
        rec2 = GenerationRecord(ContextSpec(("deer",)), make_pair(), "p", "t",
                                "stub:echo", DecodeParams())
        assert rec.generation_id == rec2.generation_id

    def test_generation_record_requires_text(self):
        with pytest.raises(ValidationError):
            GenerationRecord(ContextSpec(("deer",)), make_pair(), "p", "",
                             "stub:echo", DecodeParams())
