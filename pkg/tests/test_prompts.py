from pathlib import Path

from punkit.prompts import (build_ambipun_prompt, build_pretrain_prompt,
                            build_pun_prompt)
from punkit.types import ContextSpec, PunPair

HERE = Path(__file__).parent


def golden_pairs():
    rows = (HERE / "data" / "golden_rows.tsv").read_text(
        encoding="utf-8").splitlines()[1:]
    for row in rows:
        keywords, pun, alt, pun_gloss, alt_gloss = row.split("\t")
        yield (ContextSpec(tuple(keywords.split("|"))),
               PunPair(pun, alt, pun_gloss, alt_gloss))


def read_golden(name):
    return (HERE / "goldens" / name).read_text(encoding="utf-8").splitlines()


class TestPunPrompt:
    def test_matches_goldens_byte_exact(self):
        expected = read_golden("pun_prompts.golden")
        got = [build_pun_prompt(ctx, pair).prompt
               for ctx, pair in golden_pairs()]
        assert got == expected

    def test_whale_fluke_example(self):
        ctx = ContextSpec(("whale",))
        pair = PunPair("fluke", "fluke", "a stroke of luck",
                       "either of the two lobes of the tail of a cetacean")
        assert build_pun_prompt(ctx, pair).prompt == (
            "generate a pun that situates in whale, using the word fluke, "
            "fluke means a stroke of luck and fluke means either of the two "
            "lobes of the tail of a cetacean")

    def test_single_keyword_has_no_join_artifacts(self):
        ctx = ContextSpec(("whale",))
        pair = PunPair("boar", "bore", "g1", "g2")
        prompt = build_pun_prompt(ctx, pair).prompt
        assert "whale," in prompt and ", ," not in prompt and ",," not in prompt

    def test_kind_recorded(self):
        ctx = ContextSpec(("whale",))
        rec = build_pun_prompt(ctx, PunPair("boar", "bore", "g1", "g2"))
        assert rec.kind == "pun_finetune"
        assert rec.target is None


class TestAmbipunPrompt:
    def test_matches_goldens_byte_exact(self):
        expected = read_golden("ambipun_prompts.golden")
        got = [build_ambipun_prompt(ctx, pair).prompt
               for ctx, pair in golden_pairs()]
        assert got == expected

    def test_homographic_repeats_word(self):
        ctx = ContextSpec(("whale",))
        pair = PunPair("fluke", "fluke", "g1", "g2")
        assert build_ambipun_prompt(ctx, pair).prompt == \
            "generate sentence: whale, fluke, fluke"

    def test_heterographic_uses_pun_word_only(self):
        ctx = ContextSpec(("hunts", "deer"))
        pair = PunPair("boar", "bore", "g1", "g2")
        assert build_ambipun_prompt(ctx, pair).prompt == \
            "generate sentence: hunts, deer, boar"

    def test_glosses_do_not_leak_into_prompt(self):
        ctx = ContextSpec(("whale",))
        pair = PunPair("boar", "bore", "SPOTME", "NORME")
        assert "SPOTME" not in build_ambipun_prompt(ctx, pair).prompt


class TestPretrainPrompt:
    def test_matches_goldens_byte_exact(self):
        rows = (HERE / "data" / "pretrain_rows.tsv").read_text(
            encoding="utf-8").splitlines()[1:]
        expected = read_golden("pretrain_prompts.golden")
        got = []
        for row in rows:
            keywords, word, gloss, target = row.split("\t")
            ctx = ContextSpec(tuple(keywords.split("|")))
            got.append(build_pretrain_prompt(ctx, word, gloss, target).prompt)
        assert got == expected

    def test_gloss_repeated_and_target_kept(self):
        ctx = ContextSpec(("forest",))
        rec = build_pretrain_prompt(ctx, "pine", "g", "the mined sentence")
        assert rec.prompt == ("generate a sentence that situates in forest, "
                              "using the word pine, pine means g and pine "
                              "means g")
        assert rec.target == "the mined sentence"
        assert rec.kind == "pretrain"


def test_prompt_builders_are_pure():
    ctx = ContextSpec(("whale",))
    pair = PunPair("fluke", "fluke", "a", "b")
    assert build_pun_prompt(ctx, pair) == build_pun_prompt(ctx, pair)
    assert build_ambipun_prompt(ctx, pair) == build_ambipun_prompt(ctx, pair)
