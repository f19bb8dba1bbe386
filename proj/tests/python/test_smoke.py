import pytest

import hera


def test_field_arithmetic():
    f4 = hera.Field.make_default(2, 2)
    assert f4.order == 4
    assert f4.mul(2, 2) == 3  # delta^2 = delta + 1
    assert f4.div(1, 2) == 3
    f9 = hera.Field.make_default(3, 2)
    assert f9.frobenius_q(3) == 7  # z -> z^3 = 2z + 1


def test_bad_modulus_raises():
    with pytest.raises(hera.ParamError):
        hera.Field.make(2, 2, [1, 0, 1])


def test_curve_counts():
    for q in (2, 3):
        table = hera.CurveTable(hera.Field.for_hermitian(q))
        assert len(table) == q**3
        a, b = table.point(0)
        assert table.on_curve(a, b)


def test_code_and_distance():
    code = hera.code_build(2, 3)
    assert code.dim == 3
    assert code.d_star == 5
    assert hera.min_distance_bruteforce(code) == 5
    dual = hera.code_build(2, hera.dual_m(2, 3))
    assert hera.dual_check(code, dual)


def test_rr_dim():
    assert hera.rr_dim(3, 6) == 4
    assert [m for m in hera.monomial_basis(2, 3)] == [(0, 0), (1, 0), (0, 1)]


def test_matrix_ops():
    f4 = hera.Field.make_default(2, 2)
    m = hera.FieldMatrix(f4, [[1, 2], [2, 1]])
    rhs = hera.FieldMatrix(f4, [[1], [0]])
    x = m.solve(rhs)
    assert (m @ x) == rhs
    with pytest.raises(hera.SingularError):
        hera.FieldMatrix(f4, [[1, 2], [1, 2]]).solve(rhs)


def test_protocol_run_decodes_product():
    f9 = hera.Field.make_default(3, 2)
    A = [[1, 2], [0, 5]]
    B = [[3, 1], [4, 8]]
    decoded, order, costs = hera.run(3, 2, 2, A, B, seed=7)
    expected = hera.FieldMatrix(f9, A) @ hera.FieldMatrix(f9, B)
    assert decoded == expected.to_rows()
    assert sorted(order) == list(range(27))
    assert costs["retrieved_symbols"] == 4


def test_rate():
    assert hera.rate(2, 2, 1, 3, 6, 3) == (1, 12)


def test_params_validate_errors():
    with pytest.raises(hera.ParamError):
        hera.params_validate(2, 3, 1, 1, 3, 1)  # violates the feasibility bound


def test_transcript_json():
    import json

    text = hera.transcript_json(2, 2, 1, [[1, 2]], [[3], [0]], 1)
    doc = json.loads(text)
    assert doc["params"]["q"] == 2
    assert doc["responses_negated"] is True
    assert len(doc["servers"]) == 4
