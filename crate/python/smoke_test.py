"""Smoke test for the monideal extension module.

Build and install the extension first: pip install ./crates/python
"""

from fractions import Fraction

import monideal


def main():
    d = monideal.WeightedOrientedGraph(4, [(1, 2), (3, 2), (3, 4), (1, 4)], [1, 2, 1, 2])
    i = d.edge_ideal()
    assert str(i) == "(t1*t2^2, t1*t4^2, t2^2*t3, t3*t4^2)", str(i)
    assert i.irreducible_decomposition() == [[1, 0, 1, 0], [0, 2, 0, 2]]
    assert i.covering_vertices() == [
        [Fraction(0), Fraction(1, 2), Fraction(0), Fraction(1, 2)],
        [Fraction(1), Fraction(0), Fraction(1), Fraction(0)],
    ]
    assert [1, 1, 0, 1] in i.integral_closure()
    assert [1, 1, 0, 1] not in i
    for n in range(1, 4):
        r = i.compare_powers(n)
        assert r["equal_min"] and r["equal_ass"] and r["witnesses"] == []
    assert d.strong_covers() == [[1, 3], [2, 4]]
    assert str(d.alexander_dual()) == "(t1*t3, t2^2*t4^2)"

    heavy = monideal.MonomialIdeal("t1*t2^2, t2*t3^2, t3*t1^2")
    assert heavy.associated_primes() == [[1, 2], [1, 3], [2, 3], [1, 2, 3]]
    r = heavy.compare_powers(2)
    assert r["equal_ass"] and not r["equal_min"]
    assert r["power"] == heavy.power(2)
    assert len(r["witnesses"]) == 3

    t = monideal.WeightedOrientedGraph.parse("vertices 3\nweights 1 2 1\nedge 1 2\nedge 2 3\nedge 1 3\n")
    c = t.classify()
    assert c["square"] is False and c["has_triangle"] is True
    assert t.non_sink_witness() == [1, 2, 1]

    try:
        monideal.MonomialIdeal("t1*t2, t2^")
    except ValueError as e:
        assert "line 1" in str(e)
    else:
        raise AssertionError("malformed ideal was accepted")

    print("monideal smoke test: ok")


if __name__ == "__main__":
    main()
