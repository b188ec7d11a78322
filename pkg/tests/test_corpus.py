import pytest

from punkit.corpus import (build_pair_catalog, largest_remainder_sizes,
                           load_compatibility_file, load_gloss_table,
                           parse_semeval, save_compatibility_file,
                           split_dataset, validate_against_catalog)
from punkit.errors import ParseError, ValidationError
from punkit.types import CompatibilityRecord, ContextSpec, PunPair

TABLE1_STAIR_GLOSS = ("support consisting of a place to rest the foot while "
                      "ascending or descending a stairway")


def make_records(n, label=0):
    pair = PunPair("boar", "bore", "an uncastrated male hog",
                   "a dull and uninteresting person")
    return [CompatibilityRecord(ContextSpec((f"kw{i}",)), pair, label)
            for i in range(n)]


# ---------------------------------------------------------------------------
# Compatibility file round-trips

HEADER = ("context_keywords\tpun_word\talt_word\tpun_gloss\talt_gloss\t"
          "label\thuman_pun\tdifficulty\tsplit")


def write_rows(tmp_path, rows):
    path = tmp_path / "records.tsv"
    path.write_text("\n".join([HEADER] + rows) + "\n", encoding="utf-8")
    return path


class TestLoadCompatibilityFile:
    def test_roundtrip_is_lossless(self, tmp_path):
        rows = [
            "hunts|deer\tboar\tbore\tmale hog\tdull person\t1\t"
            "He hunts deer but it is hardly a boar.\t2\ttrain",
            "whale\tfluke\tfluke\ta stroke of luck\ta whale tail lobe\t0\t\t\t"
            "test",
        ]
        path = write_rows(tmp_path, rows)
        original_bytes = path.read_bytes()
        dataset = load_compatibility_file(path)
        out = tmp_path / "copy.tsv"
        save_compatibility_file(dataset.records, out)
        assert out.read_bytes() == original_bytes
        assert load_compatibility_file(out).records == dataset.records

    def test_label0_with_pun_rejected_with_line(self, tmp_path):
        rows = ["whale\tfluke\tfluke\tg1\tg2\t0\tsneaky pun\t\ttest"]
        path = write_rows(tmp_path, rows)
        with pytest.raises(ValidationError, match="line 2"):
            load_compatibility_file(path)

    def test_bad_label_names_field(self, tmp_path):
        path = write_rows(tmp_path, ["whale\tfluke\tfluke\tg1\tg2\t3\t\t\t"])
        with pytest.raises(ValidationError, match="label"):
            load_compatibility_file(path)

    def test_bad_header_rejected(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("a\tb\n", encoding="utf-8")
        with pytest.raises(ParseError):
            load_compatibility_file(path)

    def test_wrong_column_count_reports_record(self, tmp_path):
        path = write_rows(tmp_path, ["whale\tfluke"])
        with pytest.raises(ParseError, match="record 2"):
            load_compatibility_file(path)

    def test_shipped_file_statistics(self, dataset):
        # Pinned ingest statistics for the bundled dataset.
        assert len(dataset) == 4551
        assert dataset.label_counts == {1: 2753, 0: 1798}
        assert dataset.split_counts == {"train": 3155, "dev": 465,
                                        "test": 931}

    def test_shipped_file_resolves_in_catalog(self, dataset, catalog):
        validate_against_catalog(dataset.records, catalog)


# ---------------------------------------------------------------------------
# Catalog

class TestBuildPairCatalog:
    def test_duplicates_collapse(self):
        pair = PunPair("boar", "bore", "g1", "g2")
        catalog = build_pair_catalog([pair, PunPair("boar", "bore", "g1", "g2")])
        assert len(catalog) == 1

    def test_first_occurrence_order(self):
        pairs = [PunPair("pine", "pine", "g1", "g2"),
                 PunPair("boar", "bore", "g1", "g2")]
        catalog = build_pair_catalog(pairs)
        assert [p.key for p in catalog.pairs] == [("pine", "pine"),
                                                  ("boar", "bore")]

    def test_kinds_mixed(self):
        catalog = build_pair_catalog([PunPair("boar", "bore", "g1", "g2"),
                                      PunPair("pine", "pine", "g1", "g2")])
        assert {p.kind for p in catalog.pairs} == {"heterographic",
                                                   "homographic"}

    def test_empty_source_rejected(self):
        with pytest.raises(ValidationError):
            build_pair_catalog([])

    def test_shipped_lexicon_has_500_pairs(self, catalog):
        assert len(catalog) == 500

    def test_lookup_returns_identical_glosses(self, dataset, catalog):
        for record in dataset.records[:200]:
            found = catalog.get(*record.pair.key)
            assert found is not None
            assert found.pun_gloss == record.pair.pun_gloss
            assert found.alt_gloss == record.pair.alt_gloss

    def test_from_records(self, dataset):
        catalog = build_pair_catalog(dataset.records)
        assert len(catalog) == 500


# ---------------------------------------------------------------------------
# Splitting

class TestSplitDataset:
    def test_exact_small_ratio(self):
        records = split_dataset(make_records(10), seed=7)
        counts = {s: sum(1 for r in records if r.split == s)
                  for s in ("train", "dev", "test")}
        assert counts == {"train": 7, "dev": 1, "test": 2}

    def test_largest_remainder_on_4551(self):
        # 4551 * (0.7, 0.1, 0.2) = (3185.7, 455.1, 910.2); one leftover goes
        # to the largest remainder, train.
        assert largest_remainder_sizes(4551, (0.7, 0.1, 0.2)) == [3186, 455, 910]

    def test_deterministic(self):
        a = split_dataset(make_records(50), seed=3)
        b = split_dataset(make_records(50), seed=3)
        assert [r.split for r in a] == [r.split for r in b]

    def test_partition(self):
        records = split_dataset(make_records(37), seed=1)
        assert all(r.split in ("train", "dev", "test") for r in records)
        assert len(records) == 37

    def test_refuses_presplit_records(self):
        records = split_dataset(make_records(10), seed=0)
        with pytest.raises(ValidationError):
            split_dataset(records, seed=1)
        forced = split_dataset(records, seed=1, force=True)
        assert len(forced) == 10

    def test_bad_ratios(self):
        with pytest.raises(ValueError):
            largest_remainder_sizes(10, (0.5, 0.2, 0.2))


# ---------------------------------------------------------------------------
# Annotated pun corpus parsing

def xml_for(puns):
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', "<corpus>"]
    for text_id, sentence in puns:
        lines.append(f'<text id="{text_id}">')
        for i, tok in enumerate(sentence.split(), start=1):
            lines.append(f'<word id="{text_id}_{i}">{tok}</word>')
        lines.append("</text>")
    lines.append("</corpus>")
    return "\n".join(lines).encode("utf-8")


STAIR_KEY = "stair%1:06:00::"
STARE_KEY = "stare%2:39:00::"

GLOSSES = {
    STAIR_KEY: TABLE1_STAIR_GLOSS,
    STARE_KEY: "look at with fixed eyes",
    "pine%1:01:00::": "a coniferous evergreen tree",
    "pine%2:01:00::": "long painfully for something",
}


class TestParseSemeval:
    def test_table1_stair_stare(self):
        text = xml_for([("het_1",
                         "Two construction workers had a staring contest .")])
        gold = f"het_1_6\t{STAIR_KEY}\t{STARE_KEY}".encode()
        result = parse_semeval(text, gold, GLOSSES)
        assert result.skipped == 0
        (entry,) = result.entries
        assert entry.pair.pun_word == "stair"
        assert entry.pair.alt_word == "stare"
        assert entry.pair.pun_gloss == TABLE1_STAIR_GLOSS
        assert entry.pair.alt_gloss == "look at with fixed eyes"
        assert entry.pair.kind == "heterographic"

    def test_empty_gold_gives_empty_result(self):
        text = xml_for([("het_1", "Some pun here today .")])
        result = parse_semeval(text, b"", GLOSSES)
        assert result.entries == ()
        assert result.skipped == 0

    def test_missing_sense_key_skips_and_counts(self):
        text = xml_for([("het_1", "First pun sentence ."),
                        ("het_2", "Second pun sentence ."),
                        ("hom_1", "Third pun sentence .")])
        gold = "\n".join([
            f"het_1_1\t{STAIR_KEY}\t{STARE_KEY}",
            f"het_2_1\tmissing%9:99:99::\t{STARE_KEY}",
            "hom_1_1\tpine%1:01:00::\tpine%2:01:00::",
        ]).encode()
        result = parse_semeval(text, gold, GLOSSES)
        assert len(result.entries) == 2
        assert result.skipped == 1

    def test_homographic_detected(self):
        text = xml_for([("hom_1", "A pine pun .")])
        gold = b"hom_1_1\tpine%1:01:00::\tpine%2:01:00::"
        result = parse_semeval(text, gold, GLOSSES)
        assert result.entries[0].pair.kind == "homographic"

    def test_malformed_gold_reports_record(self):
        text = xml_for([("het_1", "A pun .")])
        with pytest.raises(ParseError, match="record 1"):
            parse_semeval(text, b"het_1_1 onlyonefield", GLOSSES)

    def test_unknown_text_id_rejected(self):
        text = xml_for([("het_1", "A pun .")])
        gold = f"het_9_1\t{STAIR_KEY}\t{STARE_KEY}".encode()
        with pytest.raises(ParseError):
            parse_semeval(text, gold, GLOSSES)

    def test_bad_xml_rejected(self):
        with pytest.raises(ParseError):
            parse_semeval(b"<corpus><text>", b"", GLOSSES)

    def test_shipped_samples_parse(self, data_dir):
        text = (data_dir / "samples" / "semeval_text.xml").read_bytes()
        gold = (data_dir / "samples" / "semeval_gold.tsv").read_bytes()
        glosses = load_gloss_table(data_dir / "gloss_table.tsv")
        result = parse_semeval(text, gold, glosses)
        assert result.skipped == 0
        assert len(result.entries) == 6
        keys = {e.pair.key for e in result.entries}
        assert ("stair", "stare") in keys
        assert ("fluke", "fluke") in keys


class TestGlossTable:
    def test_load(self, tmp_path):
        path = tmp_path / "gloss.tsv"
        path.write_text("key1\tgloss one\nkey2\tgloss two\n", encoding="utf-8")
        assert load_gloss_table(path) == {"key1": "gloss one",
                                          "key2": "gloss two"}

    def test_malformed_line_rejected(self, tmp_path):
        path = tmp_path / "gloss.tsv"
        path.write_text("justakey\n", encoding="utf-8")
        with pytest.raises(ParseError):
            load_gloss_table(path)
