"""Prompt construction. Templates are byte-exact contracts pinned by goldens."""

from __future__ import annotations

from .types import ContextSpec, PromptRecord, PunPair


def build_pun_prompt(context: ContextSpec, pair: PunPair) -> PromptRecord:
    """Finetuning-style prompt carrying both sense glosses."""
    prompt = (
        f"generate a pun that situates in {context.joined(', ')}, "
        f"using the word {pair.pun_word}, "
        f"{pair.pun_word} means {pair.pun_gloss} "
        f"and {pair.alt_word} means {pair.alt_gloss}"
    )
    return PromptRecord(prompt=prompt, kind="pun_finetune")


def build_ambipun_prompt(context: ContextSpec, pair: PunPair) -> PromptRecord:
    """Keyword-list prompt; homographic pairs repeat the word, glosses unused."""
    head = f"generate sentence: {context.joined(', ')}, {pair.pun_word}"
    if pair.kind == "homographic":
        head += f", {pair.alt_word}"
    return PromptRecord(prompt=head, kind="ambipun")


def build_pretrain_prompt(context: ContextSpec, word: str, gloss: str,
                          target: str) -> PromptRecord:
    """Single-word sense-incorporation prompt; target is the mined sentence."""
    prompt = (
        f"generate a sentence that situates in {context.joined(', ')}, "
        f"using the word {word}, "
        f"{word} means {gloss} and {word} means {gloss}"
    )
    return PromptRecord(prompt=prompt, kind="pretrain", target=target)
