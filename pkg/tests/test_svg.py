from pathlib import Path

import pytest

from tverberg.constructive import prove_sierksma
from tverberg.instances import gen_extremal_clusters, gen_random
from tverberg.serialization import ResultDocument, record_for
from tverberg.svgout import render_svg

DATA = Path(__file__).parent / "data"


def _trace_document(ps):
    trace = prove_sierksma(ps)
    return ResultDocument(
        instance=ps,
        partitions=tuple(record_for(p, w, tag.value)
                         for p, w, tag in trace.partitions),
        c3=trace.c3, case_label=trace.case_label)


def test_golden_extremal_diagram(tmp_path):
    ps = gen_extremal_clusters(0)
    out = tmp_path / "extremal.svg"
    render_svg(ps, _trace_document(ps), str(out))
    assert out.read_bytes() == (DATA / "extremal_trace.svg").read_bytes()


def test_render_is_deterministic(tmp_path):
    ps = gen_random(3, 7, 1000)
    doc = _trace_document(ps)
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    render_svg(ps, doc, str(a))
    render_svg(ps, doc, str(b))
    assert a.read_bytes() == b.read_bytes()


def test_render_without_partitions(tmp_path):
    ps = gen_random(3, 7, 1000)
    out = tmp_path / "plain.svg"
    render_svg(ps, ResultDocument(instance=ps), str(out))
    text = out.read_text()
    assert text.count("<circle") == len(ps)  # one dot per point, nothing else
    assert "<polygon" not in text
    for i in range(len(ps)):
        assert f">{i}</text>" in text


def test_render_marks_all_partition_parts(tmp_path):
    ps = gen_extremal_clusters(0)
    doc = _trace_document(ps)
    out = tmp_path / "full.svg"
    render_svg(ps, doc, str(out))
    text = out.read_text()
    # 4 partitions x 2 triangles, plus the shaded depth region is a point here
    assert text.count("<polygon") == 8
    assert text.count("<path") == len(doc.partitions)  # witness crosses


def test_render_unwritable_path_raises(tmp_path):
    ps = gen_random(3, 7, 1000)
    with pytest.raises(OSError):
        render_svg(ps, ResultDocument(instance=ps),
                   str(tmp_path / "missing" / "out.svg"))
