"""Tests for the command line interface: grammar, output, exit codes."""

import random
from fractions import Fraction

import pytest

from superweyl import AlgebraDescriptor, build_datum
from superweyl.cli import (
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    format_weight_expr,
    main,
    parse_weight,
)
from superweyl.errors import UnknownSymbol, WeightParseError
from superweyl.rootdata import vadd, vscale, zero_weight


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestWeightGrammar:
    def setup_method(self):
        self.d = build_datum(AlgebraDescriptor("sl", 3, 2))

    def test_zero_literal(self):
        assert parse_weight("0", self.d) == zero_weight(self.d.dim)

    def test_isotropic_simple_root_expression(self):
        beta = parse_weight("eps[1] + (-1)*delta[1]", self.d)
        assert beta == self.d.positive_odd[0].vector

    def test_subtraction_matches_negative_coefficient(self):
        lhs = parse_weight("eps[1] - delta[1]", self.d)
        rhs = parse_weight("eps[1] + (-1)*delta[1]", self.d)
        assert lhs == rhs

    def test_named_atoms(self):
        assert parse_weight("tau", self.d) == self.d.tau
        assert parse_weight("rho", self.d) == self.d.rho
        assert parse_weight("omega[2]", self.d) == self.d.fundamental_weight(2)

    def test_rational_coefficients(self):
        w = parse_weight("(1/2)*eps[1] + 3/2*delta[2]", self.d)
        expected = vadd(
            vscale(Fraction(1, 2), parse_weight("eps[1]", self.d)),
            vscale(Fraction(3, 2), parse_weight("delta[2]", self.d)),
        )
        assert w == expected

    def test_combined_expression(self):
        w = parse_weight("omega[1] + 2*omega[2] + 3*omega[3] + tau", self.d)
        expected = self.d.tau
        for i, c in enumerate((1, 2, 3), start=1):
            expected = vadd(expected, vscale(c, self.d.fundamental_weight(i)))
        assert w == expected

    def test_round_trip_on_random_rational_weights(self):
        rng = random.Random(20250816)
        for fam, m, n in [
            ("sl", 3, 2),
            ("osp", None, 2),
            ("G3", None, None),
            ("F4", None, None),
            ("b0", None, 2),
        ]:
            d = build_datum(AlgebraDescriptor(fam, m, n))
            for _ in range(25):
                w = tuple(
                    Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
                    for _ in range(d.dim)
                )
                assert parse_weight(format_weight_expr(d, w), d) == w

    def test_round_trip_of_zero(self):
        assert format_weight_expr(self.d, zero_weight(self.d.dim)) == "0"

    def test_parse_error_reports_position(self):
        with pytest.raises(WeightParseError) as info:
            parse_weight("omega[1] + @", self.d)
        assert info.value.position == 11
        assert "position 11" in str(info.value)

    def test_unknown_name_reports_position(self):
        with pytest.raises(WeightParseError) as info:
            parse_weight("omega[1] + bogus", self.d)
        assert info.value.position == 11

    def test_omega_out_of_range(self):
        with pytest.raises(UnknownSymbol):
            parse_weight("omega[4]", self.d)

    def test_eps_out_of_range(self):
        with pytest.raises(UnknownSymbol):
            parse_weight("eps[4]", self.d)

    def test_delta_absent_on_b0(self):
        d = build_datum(AlgebraDescriptor("b0", n=2))
        with pytest.raises(UnknownSymbol):
            parse_weight("eps[1]", d)
        assert parse_weight("delta[1]", d) == (Fraction(1), Fraction(0))

    def test_bare_number_other_than_zero_rejected(self):
        with pytest.raises(WeightParseError):
            parse_weight("2", self.d)

    def test_trailing_garbage_rejected(self):
        with pytest.raises(WeightParseError):
            parse_weight("tau tau", self.d)

    def test_zero_denominator_rejected(self):
        with pytest.raises(WeightParseError):
            parse_weight("1/0*tau", self.d)


class TestDatumCommand:
    def test_summary_lines(self, capsys):
        code, out, _ = run_cli(
            capsys, ["datum", "--family", "sl", "--m", "3", "--n", "2"]
        )
        assert code == EXIT_OK
        assert "label: sl(3,2)" in out
        assert "ambient: eps1, eps2, eps3, delta1, delta2" in out
        assert "component_sizes: 2, 1" in out
        assert "positive_odd: 6" in out

    def test_family_required(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["datum"])
        assert info.value.code == EXIT_USAGE

    def test_unknown_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == EXIT_USAGE

    def test_bad_size_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["datum", "--family", "sl", "--m", "1", "--n", "1"])
        assert info.value.code == EXIT_USAGE


class TestGroupCommand:
    def test_component_table(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["group", "--family", "osp", "--n", "2", "--component", "1"],
        )
        assert code == EXIT_OK
        assert "order: 8" in out
        assert "elem 0: word=e length=0 sign=1" in out
        assert out.count("elem ") == 8

    def test_group_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SUPERWEYL_MAX_GROUP", "5")
        code, out, err = run_cli(capsys, ["group", "--family", "F4"])
        assert code == EXIT_PRECONDITION
        assert "cap of 5" in err


class TestNumeratorCommand:
    def test_factored_golden_output(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "numerator",
                "--family", "sl", "--m", "3", "--n", "2",
                "--weight", "omega[1] + 2*omega[2] + 3*omega[3] + tau",
                "--factor",
            ],
        )
        assert code == EXIT_OK
        assert (
            "U1: 1 - X[a1]^2 - X[a2]^3 + X[a1]^2*X[a2]^5 + X[a1]^5*X[a2]^3"
            " - X[a1]^5*X[a2]^5" in out
        )
        assert "U2: 1 - X[a3]^4" in out
        assert "signature: 2, 3; 4" in out

    def test_atypical_weight_is_precondition_error(self, capsys):
        code, _, err = run_cli(
            capsys,
            [
                "numerator",
                "--family", "sl", "--m", "2", "--n", "1",
                "--weight", "0",
            ],
        )
        assert code == EXIT_PRECONDITION
        assert "error:" in err

    def test_character_has_nonnegative_integer_coefficients(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "numerator",
                "--family", "sl", "--m", "2", "--n", "1",
                "--weight", "omega[1] + tau",
                "--char", "--trunc", "3",
            ],
        )
        assert code == EXIT_OK
        assert "char: 1 + X[b1] + X[a1]" in out


class TestKgraphCommand:
    def test_g3_value(self, capsys):
        code, out, _ = run_cli(capsys, ["kgraph", "--family", "G3"])
        assert code == EXIT_OK
        assert "k: 1" in out

    def test_disconnected_subset(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "kgraph",
                "--family", "sl", "--m", "3", "--n", "2",
                "--subset", "1,3",
            ],
        )
        assert code == EXIT_OK
        assert "vertices: 2" in out
        assert "k: 0" in out

    def test_subset_out_of_range_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["kgraph", "--family", "G3", "--subset", "1,9"])
        assert info.value.code == EXIT_USAGE


class TestVerifyCommand:
    LHS = (
        "omega[1] + 2*omega[2] + 3*omega[3] + tau;"
        " omega[1] + 4*omega[2] + 5*omega[3] + tau"
    )
    RHS = (
        "omega[1] + 4*omega[2] + 3*omega[3] + tau;"
        " omega[1] + 2*omega[2] + 5*omega[3] + tau"
    )

    def test_cross_matched_counterexample(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "verify",
                "--family", "sl", "--m", "3", "--n", "2",
                "--lhs", self.LHS,
                "--rhs", self.RHS,
            ],
        )
        assert code == EXIT_OK
        assert "conclusion: CrossMatchedCounterexample" in out
        assert "r_equals_s: true" in out
        assert "sigma_hypothesis: false" in out
        assert "match: component=1 lhs=1 rhs=2 signature=(2, 3)" in out

    def test_identical_products_conclude_unique(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "verify",
                "--family", "sl", "--m", "3", "--n", "2",
                "--lhs", self.LHS,
                "--rhs", self.LHS,
            ],
        )
        assert code == EXIT_OK
        assert "conclusion: UniqueFactorization" in out
        assert "sigma_hypothesis: true" in out

    def test_empty_weight_in_list_is_precondition_error(self, capsys):
        code, _, err = run_cli(
            capsys,
            [
                "verify",
                "--family", "sl", "--m", "3", "--n", "2",
                "--lhs", "tau;",
                "--rhs", "tau",
            ],
        )
        assert code == EXIT_PRECONDITION
        assert "error:" in err


class TestSearchCommand:
    def test_limited_search_finds_hits(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "search",
                "--family", "sl", "--m", "3", "--n", "2",
                "--bound", "3", "--tau-mult", "1", "--limit", "1",
            ],
        )
        assert code == EXIT_OK
        assert "hit 1:" in out
        assert "count: 1" in out

    def test_single_component_family_is_empty(self, capsys):
        for argv in (
            ["search", "--family", "sl", "--m", "3", "--n", "1",
             "--bound", "5", "--tau-mult", "1"],
            ["search", "--family", "G3", "--bound", "5", "--tau-mult", "1"],
        ):
            code, out, _ = run_cli(capsys, argv)
            assert code == EXIT_OK
            assert "count: 0" in out

    def test_identical_invocations_print_identical_bytes(self, capsys):
        argv = [
            "search",
            "--family", "sl", "--m", "3", "--n", "2",
            "--bound", "3", "--tau-mult", "1", "--limit", "2",
        ]
        _, first, _ = run_cli(capsys, argv)
        _, second, _ = run_cli(capsys, argv)
        assert first == second


class TestAtypicalCommands:
    def test_coeff_verdict_equal(self, capsys):
        code, out, _ = run_cli(
            capsys, ["atypical-coeff", "--family", "G3", "--weight", "0"]
        )
        assert code == EXIT_OK
        assert "type: g1 = (-1, -1, 1)" in out
        assert "closed_tag: M-form" in out
        assert "verdict: EQUAL" in out

    def test_coeff_special_flag(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["atypical-coeff", "--family", "G3", "--weight", "0", "--special"],
        )
        assert code == EXIT_OK
        assert "special: true" in out
        assert "verdict: EQUAL" in out

    def test_coeff_single_route(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "atypical-coeff",
                "--family", "sl", "--m", "2", "--n", "1",
                "--weight", "0", "--oracle",
            ],
        )
        assert code == EXIT_OK
        assert "oracle:" in out
        assert "closed:" not in out
        assert "verdict:" not in out

    def test_coeff_typical_weight_is_precondition_error(self, capsys):
        code, _, err = run_cli(
            capsys,
            [
                "atypical-coeff",
                "--family", "sl", "--m", "3", "--n", "2",
                "--weight", "omega[1] + 2*omega[2] + 3*omega[3] + tau",
            ],
        )
        assert code == EXIT_PRECONDITION
        assert "error:" in err

    def test_verify_unique_factorization(self, capsys):
        lhs = (
            "4*eps[1] + 4*eps[2] + 4*eps[3] + (-6)*delta[1] + (-6)*delta[2];"
            " 5*eps[1] + 5*eps[2] + 5*eps[3] + (-7)*delta[1] + (-8)*delta[2]"
        )
        rhs = ";".join(reversed(lhs.split(";")))
        code, out, _ = run_cli(
            capsys,
            [
                "atypical-verify",
                "--family", "sl", "--m", "3", "--n", "2",
                "--type", "eps[1] - delta[1]",
                "--lhs", lhs,
                "--rhs", rhs,
            ],
        )
        assert code == EXIT_OK
        assert "conclusion: UniqueFactorization" in out
        assert "r_equals_s: true" in out

    def test_verify_unequal_products(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "atypical-verify",
                "--family", "sl", "--m", "3", "--n", "2",
                "--type", "eps[1] - delta[1]",
                "--lhs", "4*eps[1] + 4*eps[2] + 4*eps[3] + (-6)*delta[1] + (-6)*delta[2]",
                "--rhs", "5*eps[1] + 5*eps[2] + 5*eps[3] + (-7)*delta[1] + (-8)*delta[2]",
            ],
        )
        assert code == EXIT_OK
        assert "conclusion: ProductsUnequal" in out


class TestInternalErrorMapping:
    def test_assertion_maps_to_internal_exit(self, capsys, monkeypatch):
        import superweyl.cli as cli

        def boom(args):
            raise AssertionError("wires crossed")

        monkeypatch.setitem(cli.__dict__, "_cmd_datum", boom)
        code = cli.main(["datum", "--family", "G3"])
        captured = capsys.readouterr()
        assert code == EXIT_INTERNAL
        assert "internal error" in captured.err
