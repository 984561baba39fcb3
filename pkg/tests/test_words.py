import pytest

from lcl_cli.errors import EmptyGeneratorSet
from lcl_cli.groups.moebius import MoebiusElement
from lcl_cli.groups.words import Word, count_elements, default_labels, enumerate_words


@pytest.fixture(scope="module")
def modular_gens(rationals):
    s = MoebiusElement.from_rows(rationals, [[0, 1], [-1, 0]])
    t = MoebiusElement.from_rows(rationals, [[1, 1], [0, 1]])
    return [s, t]


def test_words_are_freely_reduced():
    with pytest.raises(ValueError):
        Word((1, -1))
    assert Word((1, 2)).extend(-2) is None
    assert Word((1, 2)) * Word((-2, 1)) == Word((1, 1))
    assert (Word((1, 2)) * Word((1, 2)).inverse()) == Word()


def test_word_powers():
    w = Word((2, 1))
    assert w ** 2 == Word((2, 1, 2, 1))
    assert w ** -1 == Word((-1, -2))
    assert w ** 0 == Word()


def test_format_and_parse():
    labels = ["S", "T"]
    w = Word.parse("T^4 S", labels)
    assert w.letters == (2, 2, 2, 2, 1)
    assert w.format(labels) == "T^4 S"
    assert Word.parse("T T^-1 S", labels) == Word((1,))
    assert Word().format(labels) == "1"
    assert Word((-2, -2, 1)).format(labels) == "T^-2 S"
    assert str(Word((1, 2))) == "a b"
    with pytest.raises(ValueError):
        Word.parse("U", labels)


def test_default_labels():
    assert default_labels(3) == ["a", "b", "c"]
    assert default_labels(30)[-1] == "g30"


def test_evaluate(modular_gens):
    s, t = modular_gens
    assert Word.parse("T^4 S", ["S", "T"]).evaluate(modular_gens) == (t ** 4) * s
    assert Word((-2,)).evaluate(modular_gens) == t.inverse()
    with pytest.raises(EmptyGeneratorSet):
        Word((1,)).evaluate([])


def test_modular_group_counts(modular_gens):
    assert count_elements(modular_gens, 1) == 3
    assert count_elements(modular_gens, 2) == 9


def test_enumeration_is_distinct_and_prefix_closed(modular_gens):
    words = list(enumerate_words(modular_gens, 6))
    keys = [element.key() for _, element in words]
    assert len(keys) == len(set(keys))
    emitted = {w for w, _ in words}
    lengths = [len(w) for w, _ in words]
    assert lengths == sorted(lengths)
    for w, element in words:
        assert w.evaluate(modular_gens) == element
        if len(w) > 1:
            assert Word(w.letters[:-1]) in emitted


def test_enumeration_respects_cap(modular_gens):
    assert len(list(enumerate_words(modular_gens, 10, cap=5))) == 5


def test_finite_group_enumeration_stops(rationals):
    s = MoebiusElement.from_rows(rationals, [[0, 1], [-1, 0]])
    assert count_elements([s], 20) == 1


def test_empty_generator_set():
    with pytest.raises(EmptyGeneratorSet):
        list(enumerate_words([], 3))
