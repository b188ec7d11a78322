import numpy as np
import pytest

from punkit.embeddings import load_embeddings
from punkit.errors import ParseError
from punkit.types import ContextSpec


def write(tmp_path, content):
    path = tmp_path / "vecs.txt"
    path.write_text(content, encoding="utf-8")
    return path


class TestLoadEmbeddings:
    def test_two_line_parse(self, tmp_path):
        table = load_embeddings(write(tmp_path, "a 1.0 0.0\nb 0.0 1.0\n"))
        assert table.dim == 2
        assert "a" in table and "b" in table
        assert np.allclose(table.vector("a"), [1.0, 0.0])

    def test_deviating_dimension_skipped_and_counted(self, tmp_path):
        table = load_embeddings(write(tmp_path,
                                      "a 1.0 0.0\nbad 1.0 2.0 3.0\nb 0.0 1.0\n"))
        assert len(table) == 2
        assert table.skipped_lines == 1

    def test_empty_file_rejected(self, tmp_path):
        with pytest.raises(ParseError):
            load_embeddings(write(tmp_path, ""))

    def test_first_line_without_floats_rejected(self, tmp_path):
        with pytest.raises(ParseError):
            load_embeddings(write(tmp_path, "lonely\n"))

    def test_duplicate_token_keeps_first(self, tmp_path):
        table = load_embeddings(write(tmp_path, "a 1.0 0.0\na 9.0 9.0\n"))
        assert np.allclose(table.vector("a"), [1.0, 0.0])
        assert table.skipped_lines == 1

    def test_unparseable_floats_skipped(self, tmp_path):
        table = load_embeddings(write(tmp_path, "a 1.0 0.0\nbad x y\n"))
        assert len(table) == 1
        assert table.skipped_lines == 1

    def test_vocabulary_filter(self, tmp_path):
        path = write(tmp_path, "a 1.0 0.0\nb 0.0 1.0\nc 1.0 1.0\n")
        table = load_embeddings(path, vocabulary={"a", "c"})
        assert len(table) == 2 and "b" not in table

    def test_shipped_file_is_300d(self, table):
        assert table.dim == 300
        assert len(table) > 1000
        assert table.skipped_lines == 0


class TestLookups:
    def test_oov_uses_mean_vector(self, tmp_path):
        table = load_embeddings(write(tmp_path, "a 2.0 0.0\nb 0.0 2.0\n"))
        assert np.allclose(table.vector("missing"), [1.0, 1.0])

    def test_phrase_vector_averages_in_vocab_tokens(self, tmp_path):
        table = load_embeddings(write(tmp_path, "a 2.0 0.0\nb 0.0 2.0\n"))
        assert np.allclose(table.phrase_vector("a b"), [1.0, 1.0])
        # OOV token inside the phrase is ignored, not averaged in.
        assert np.allclose(table.phrase_vector("a zz"), [2.0, 0.0])

    def test_all_oov_phrase_falls_back_to_mean(self, tmp_path):
        table = load_embeddings(write(tmp_path, "a 2.0 0.0\nb 0.0 2.0\n"))
        assert np.allclose(table.phrase_vector("zz yy"), [1.0, 1.0])

    def test_context_matrix_shape(self, tmp_path):
        table = load_embeddings(write(tmp_path, "a 2.0 0.0\nb 0.0 2.0\n"))
        ctx = ContextSpec(("a", "a b", "zz"))
        assert table.context_matrix(ctx).shape == (3, 2)
