import pytest
from hypothesis import given
from hypothesis import strategies as st

from arraymorph.core.errors import HidingRangeError
from arraymorph.core.hiding import (
    FACTOR_PAIRS,
    HidingCall,
    candidate_bases,
    emit_hiding_helper,
    f_eval,
    factor_table,
    find_calls,
    hide_constant,
    hiding_call,
    hiding_helper,
    parse_call,
    render_call,
    surface_modulus_for,
)

PRINTED_PAIRS = [
    (2, 3), (5, 6), (11, 12), (23, 24), (47, 48), (95, 96), (191, 192),
    (383, 384), (767, 768), (1535, 1536), (3071, 3072), (6143, 6144), (12287, 12288),
]

# (base, count, rendered call) hiding the constant 2
KNOWN_CALLS = [
    (18, 2, "F(41 % 23, 2)"),
    (3059, 9, "F(6130 % 3071, 9)"),
    (12273, 11, "F(24560 % 12287, 11)"),
]


class TestFactorTable:
    def test_pairs(self):
        assert list(factor_table().pairs) == PRINTED_PAIRS
        assert FACTOR_PAIRS == factor_table().pairs
        assert len(factor_table()) == 13

    def test_each_sum_is_next_first(self):
        table = factor_table()
        assert table.sums[0] == 5
        assert list(table.sums[:-1]) == list(table.firsts[1:])


class TestFEval:
    def test_known_calls(self):
        assert f_eval(41 % 23, 2) == 2
        assert f_eval(6130 % 3071, 9) == 2
        assert f_eval(24560 % 12287, 11) == 2

    def test_small_values_pass_through(self):
        assert f_eval(4, 1) == 4
        assert f_eval(5, 1) == 0

    @pytest.mark.parametrize("count", [0, 14])
    def test_count_out_of_range(self, count):
        with pytest.raises(HidingRangeError):
            f_eval(3, count)

    def test_negative_argument(self):
        with pytest.raises(HidingRangeError):
            f_eval(-1, 2)


class TestHideConstant:
    @pytest.mark.parametrize("base,count,rendered", KNOWN_CALLS)
    def test_known_bases_are_reachable(self, base, count, rendered):
        assert base in candidate_bases(2, count)
        assert render_call(hiding_call(base, count)) == rendered

    def test_candidate_bases_count_two(self):
        assert candidate_bases(2, 2) == [2, 7, 13, 18]

    def test_deterministic(self):
        assert hide_constant(2, 9, seed=5) == hide_constant(2, 9, seed=5)

    def test_result_is_a_candidate(self):
        call = hide_constant(3, 4, seed=11)
        assert call.base in candidate_bases(3, 4)
        assert call.hidden == 3

    @pytest.mark.parametrize("constant", [5, 7, -1])
    def test_unhideable_constant(self, constant):
        with pytest.raises(HidingRangeError, match="below 5"):
            hide_constant(constant, 2, seed=0)

    def test_unsurfaced_rendering(self):
        call = hide_constant(1, 3, seed=2, surface=False)
        assert call.surface_modulus is None
        assert render_call(call) == f"F({call.base}, 3)"

    def test_call_must_evaluate_to_hidden(self):
        with pytest.raises(HidingRangeError):
            HidingCall(base=18, count=2, hidden=3)

    @given(
        st.integers(0, 4),
        st.integers(1, 13),
        st.integers(0, 2**32 - 1),
    )
    def test_round_trip(self, constant, count, seed):
        call = hide_constant(constant, count, seed)
        assert f_eval(call.base, count) == constant
        assert parse_call(render_call(call)) == (call.base, count)
        if call.surface_modulus is not None:
            assert call.surface_modulus > call.base


class TestRendering:
    def test_surface_modulus(self):
        assert surface_modulus_for(18) == 23
        assert surface_modulus_for(3059) == 3071
        assert surface_modulus_for(1) == 2
        assert surface_modulus_for(12287) is None

    def test_parse_call(self):
        assert parse_call("x = F(41 % 23, 2);") == (18, 2)
        assert parse_call("F(7, 1)") == (7, 1)
        with pytest.raises(ValueError):
            parse_call("G(1, 2)")

    def test_find_calls(self):
        text = "if((pos%F(41 % 23, 2))==0) a[pos/F(3, 1)]=x; // not a call: xF(1, 2)"
        assert find_calls(text) == ["F(41 % 23, 2)", "F(3, 1)"]


class TestHelper:
    def test_helper_embeds_table(self):
        text = emit_hiding_helper()
        assert text.startswith("    private static int F(int y,int count)\n")
        assert "{12287,12288}" in text
        assert "y=y%y1;" in text

    def test_helper_statement_count(self):
        assert hiding_helper().statement_count == 6
