# extension_test.py
# - CentralExtension.check on valid and broken extensions
# - homomorphic sections: exhaustive search against the generator search
# - lift counting and the configured exhaustive limit

import pytest

from wpgl.group import (
    CentralExtension,
    central_extension_from_quotient,
    cyclic,
    direct_product,
    enumerate_sections,
    find_homomorphic_section,
    is_split_extension,
    lift_count,
    symmetric,
)
from wpgl.util.wpgl_types import Axiom, GroupTooLargeError, InvalidExtensionError
from tests.group_fixtures import alternating3, extension_corpus


def test_corpus_is_valid():
    for name, ext, _ in extension_corpus():
        report = ext.check()
        assert report.ok, f"{name}: {report.lines()}"
        assert ext.kernel.order * ext.quotient.order == ext.total.order, name


def test_split_detection():
    for name, ext, split in extension_corpus():
        exhaustive = is_split_extension(ext, "exhaustive")
        generators = is_split_extension(ext, "generators")
        assert (exhaustive is not None) == split, f"{name}: exhaustive search says split={exhaustive is not None}"
        assert (generators is not None) == split, f"{name}: generator search says split={generators is not None}"
        for section in (exhaustive, generators):
            if section is not None:
                assert section.is_homomorphism(), name
                assert ext.proj.compose(section).values.tolist() == list(ext.quotient.elements), f"{name}: proj o s != id"


def test_auto_falls_back_to_generators(monkeypatch):
    _, ext, split = next(entry for entry in extension_corpus() if entry[0] == "C2 -> C4xC4 -> C2xC4")
    assert lift_count(ext.proj) == 2**7
    monkeypatch.setenv("WPGL_EXHAUSTIVE_SECTION_LIMIT", "64")
    with pytest.raises(GroupTooLargeError):
        enumerate_sections(ext.proj)
    assert is_split_extension(ext) is None and not split


def test_section_counts():
    c2xc2 = central_extension_from_quotient(direct_product(cyclic(2), cyclic(2)), [0, 2])
    assert lift_count(c2xc2.proj) == 2
    assert len(enumerate_sections(c2xc2.proj)) == 2
    c4 = central_extension_from_quotient(cyclic(4), [0, 2])
    assert enumerate_sections(c4.proj) == []
    trivial_kernel = central_extension_from_quotient(cyclic(5), [0])
    assert lift_count(trivial_kernel.proj) == 1
    assert find_homomorphic_section(trivial_kernel.proj).values.tolist() == [0, 1, 2, 3, 4]


def test_unknown_method():
    ext = central_extension_from_quotient(cyclic(4), [0, 2])
    with pytest.raises(ValueError):
        find_homomorphic_section(ext.proj, "bogus")


def test_broken_extensions():
    s3 = symmetric(3)
    quotient, projection = s3.quotient(alternating3(s3))
    not_central = CentralExtension.from_tables(cyclic(3), s3, quotient, alternating3(s3), projection)
    report = not_central.check()
    assert report.axioms() == {Axiom.CENTRAL}
    with pytest.raises(InvalidExtensionError):
        is_split_extension(not_central)

    not_injective = CentralExtension.from_tables(cyclic(2), cyclic(4), cyclic(2), [0, 0], [0, 1, 0, 1])
    report = not_injective.check()
    assert report.axioms() == {Axiom.EXACT}
    assert any("not injective" in v.message for v in report.violations)
    assert any("differs from the kernel" in v.message for v in report.violations)

    not_hom = CentralExtension.from_tables(cyclic(2), cyclic(4), cyclic(2), [0, 2], [0, 1, 1, 1])
    assert not_hom.check().axioms() == {Axiom.HOM}
