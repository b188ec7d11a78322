import pytest

from punkit.errors import ValidationError
from punkit.judgments import (SHEET_COLUMNS, export_human_eval,
                              import_judgments)
from punkit.types import ContextSpec, DecodeParams, GenerationRecord, PunPair


def records(n=3):
    pair = PunPair("boar", "bore", "male hog", "dull person")
    return [GenerationRecord(ContextSpec((f"kw{i}", "deer")), pair, "prompt",
                             f"generated text {i}", "stub:template",
                             DecodeParams())
            for i in range(n)]


def judged_sheet(path, rows):
    import csv
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(SHEET_COLUMNS)
        for gen_id, judge, success in rows:
            writer.writerow([gen_id, judge, "ctx", "boar", "bore", "g1", "g2",
                             "text", success])


class TestExport:
    def test_export_writes_header_and_blank_success(self, tmp_path):
        path = tmp_path / "sheet.csv"
        export_human_eval(records(2), path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == ",".join(SHEET_COLUMNS)
        assert len(lines) == 3
        for line in lines[1:]:
            assert line.endswith(",")  # empty success column

    def test_export_empty_rejected(self, tmp_path):
        with pytest.raises(ValidationError):
            export_human_eval([], tmp_path / "sheet.csv")


class TestImport:
    def test_three_judges_unanimous(self, tmp_path):
        (rec,) = records(1)
        path = tmp_path / "sheet.csv"
        judged_sheet(path, [(rec.generation_id, f"judge{j}", "1")
                            for j in range(3)])
        report = import_judgments(path)
        assert report.rate == 100.0
        assert report.generations == 1
        assert report.judgments == 3

    def test_two_of_three_majority_counts(self, tmp_path):
        (rec,) = records(1)
        path = tmp_path / "sheet.csv"
        judged_sheet(path, [(rec.generation_id, "j1", "1"),
                            (rec.generation_id, "j2", "1"),
                            (rec.generation_id, "j3", "0")])
        assert import_judgments(path).rate == 100.0

    def test_split_vote_is_not_success(self, tmp_path):
        (rec,) = records(1)
        path = tmp_path / "sheet.csv"
        judged_sheet(path, [(rec.generation_id, "j1", "1"),
                            (rec.generation_id, "j2", "0")])
        assert import_judgments(path).rate == 0.0

    def test_rate_over_generations(self, tmp_path):
        recs = records(5)
        path = tmp_path / "sheet.csv"
        rows = []
        for i, rec in enumerate(recs):
            rows.append((rec.generation_id, "j1", "1" if i < 2 else "0"))
        judged_sheet(path, rows)
        assert import_judgments(path).rate == 40.0

    def test_sixty_items_24_successes(self, tmp_path):
        recs = records(60)
        path = tmp_path / "sheet.csv"
        rows = [(rec.generation_id, "j1", "1" if i < 24 else "0")
                for i, rec in enumerate(recs)]
        judged_sheet(path, rows)
        report = import_judgments(path)
        assert report.rate == 40.0
        assert report.generations == 60
        assert report.successes == 24

    def test_duplicate_judgment_rejected(self, tmp_path):
        (rec,) = records(1)
        path = tmp_path / "sheet.csv"
        judged_sheet(path, [(rec.generation_id, "j1", "1"),
                            (rec.generation_id, "j1", "1")])
        with pytest.raises(ValidationError, match="duplicate"):
            import_judgments(path)

    def test_unknown_generation_id_rejected(self, tmp_path):
        path = tmp_path / "sheet.csv"
        judged_sheet(path, [("deadbeef0000", "j1", "1")])
        with pytest.raises(ValidationError, match="unknown"):
            import_judgments(path, known_ids={"somethingelse"})

    def test_bad_success_value_rejected(self, tmp_path):
        path = tmp_path / "sheet.csv"
        judged_sheet(path, [("deadbeef0000", "j1", "2")])
        with pytest.raises(ValidationError):
            import_judgments(path)

    def test_unjudged_rows_ignored(self, tmp_path):
        recs = records(2)
        path = tmp_path / "sheet.csv"
        judged_sheet(path, [(recs[0].generation_id, "j1", "1"),
                            (recs[1].generation_id, "", "")])
        report = import_judgments(path)
        assert report.generations == 1

    def test_bad_header_rejected(self, tmp_path):
        path = tmp_path / "sheet.csv"
        path.write_text("a,b,c\n1,2,3\n", encoding="utf-8")
        with pytest.raises(ValidationError):
            import_judgments(path)


class TestRoundTrip:
    def test_export_judge_import(self, tmp_path):
        recs = records(4)
        sheet = tmp_path / "sheet.csv"
        export_human_eval(recs, sheet)
        # Simulate one judge filling the sheet: success on records 0 and 2.
        import csv
        with sheet.open(encoding="utf-8", newline="") as fh:
            rows = list(csv.DictReader(fh))
        filled = tmp_path / "filled.csv"
        with filled.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=SHEET_COLUMNS)
            writer.writeheader()
            for i, row in enumerate(rows):
                row["judge_id"] = "annotator1"
                row["success"] = "1" if i % 2 == 0 else "0"
                writer.writerow(row)
        report = import_judgments(filled,
                                  known_ids={r.generation_id for r in recs})
        assert report.rate == 50.0
        assert report.generations == 4
