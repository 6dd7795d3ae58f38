import numpy as np
import pytest

from rtidnc.errors import ParseError, ResourceLimitError
from rtidnc.graph import Clique, Vertex, build_graph
from rtidnc.iqp import (
    IqpSolution,
    X3cInstance,
    check_reduction,
    clique_to_solution,
    evaluate,
    has_exact_cover,
    solution_to_clique,
    solve_exhaustive,
    x3c_from_text,
    x3c_to_matrix,
    x3c_to_text,
)
from rtidnc.sideinfo import SideInfoMatrix

from helpers import definition_optimum, max_clique_bruteforce


def indicator(length, ones):
    return tuple(1 if i + 1 in ones else 0 for i in range(length))


def run_twice_identical(matrix):
    return solve_exhaustive(matrix) == solve_exhaustive(matrix)


class TestEvaluate:
    def test_single_column_feasible(self, demo_matrix):
        feasible, value = evaluate(demo_matrix, (1, 1, 1), indicator(6, {4}))
        assert feasible and value == 3

    def test_two_columns_infeasible(self, demo_matrix):
        feasible, value = evaluate(demo_matrix, (1, 1, 1), indicator(6, {4, 6}))
        assert not feasible
        assert value == 5  # rows 1 and 2 contribute 2 each, row 3 contributes 1

    def test_all_zero(self, demo_matrix):
        assert evaluate(demo_matrix, (0, 0, 0), (0,) * 6) == (True, 0)

    def test_length_mismatch(self, demo_matrix):
        with pytest.raises(ValueError):
            evaluate(demo_matrix, (1, 1), (0,) * 6)

    def test_non_binary(self, demo_matrix):
        with pytest.raises(ValueError):
            evaluate(demo_matrix, (1, 2, 0), (0,) * 6)


class TestSolutionMaps:
    def test_clique_to_solution_demo(self, demo_matrix):
        g = build_graph(demo_matrix)
        sol = clique_to_solution(g, Clique.of([Vertex(1, 3), Vertex(2, 1), Vertex(3, 1)]))
        assert sol == IqpSolution((1, 1, 1), indicator(6, {1, 3}), 3)
        assert evaluate(demo_matrix, sol.r, sol.c) == (True, 3)

    def test_singleton(self, demo_matrix):
        g = build_graph(demo_matrix)
        sol = clique_to_solution(g, Clique.of([Vertex(2, 6)]))
        assert sol == IqpSolution((0, 1, 0), indicator(6, {6}), 1)

    def test_empty(self, demo_matrix):
        g = build_graph(demo_matrix)
        assert clique_to_solution(g, Clique.of([])) == IqpSolution((0,) * 3, (0,) * 6, 0)

    def test_non_clique_rejected(self, demo_matrix):
        g = build_graph(demo_matrix)
        with pytest.raises(ValueError):
            clique_to_solution(g, Clique.of([Vertex(1, 5), Vertex(1, 6)]))

    def test_solution_to_clique_demo(self, demo_matrix):
        g = build_graph(demo_matrix)
        c = solution_to_clique(g, IqpSolution((1, 1, 1), indicator(6, {4}), 3))
        assert c.vertices == {Vertex(1, 4), Vertex(2, 4), Vertex(3, 4)}

    def test_zero_solution(self, demo_matrix):
        g = build_graph(demo_matrix)
        assert solution_to_clique(g, IqpSolution((0,) * 3, (0,) * 6, 0)) == Clique.of([])

    def test_single_entry(self, demo_matrix):
        g = build_graph(demo_matrix)
        c = solution_to_clique(g, IqpSolution((1, 0, 0), indicator(6, {3}), 1))
        assert c.vertices == {Vertex(1, 3)}

    def test_infeasible_rejected(self, demo_matrix):
        g = build_graph(demo_matrix)
        with pytest.raises(ValueError):
            solution_to_clique(g, IqpSolution((1, 1, 1), indicator(6, {4, 6}), 0))

    def test_maps_inverse_on_random_cliques(self):
        from helpers import enumerate_cliques

        rng = np.random.default_rng(3)
        for _ in range(40):
            n, m = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            matrix = SideInfoMatrix.from_rows((rng.random((n, m)) < 0.5).astype(int).tolist())
            g = build_graph(matrix)
            for vs in enumerate_cliques(matrix):
                clique = Clique.of(Vertex(i, j) for i, j in vs)
                sol = clique_to_solution(g, clique)
                assert sol.value == len(clique)
                assert evaluate(matrix, sol.r, sol.c)[0]
                assert solution_to_clique(g, sol) == clique


class TestSolveExhaustive:
    def test_demo(self, demo_matrix):
        sol = solve_exhaustive(demo_matrix)
        assert sol.value == 3
        assert evaluate(demo_matrix, sol.r, sol.c) == (True, 3)

    def test_all_zero(self):
        sol = solve_exhaustive(SideInfoMatrix.from_rows([[0, 0], [0, 0]]))
        assert sol.value == 0 and sol.r == (0, 0) and sol.c == (0, 0)

    def test_identity(self):
        sol = solve_exhaustive(SideInfoMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
        assert sol.value == 3
        assert sol.c == (1, 1, 1)

    def test_tie_breaks_to_lex_smallest_vector(self):
        # columns 1 and 2 both reach the optimum alone; as binary vectors
        # (0,1) precedes (1,0)
        sol = solve_exhaustive(SideInfoMatrix.from_rows([[1, 1], [1, 1]]))
        assert sol.value == 2 and sol.c == (0, 1)
        assert run_twice_identical(SideInfoMatrix.from_rows([[1, 1], [1, 1]]))

    def test_guard(self):
        with pytest.raises(ResourceLimitError):
            solve_exhaustive(SideInfoMatrix(13, 12, (0,) * 13))

    def test_matches_clique_number_exhaustively(self):
        """Every matrix with up to 10 cells: objective == clique number."""
        for n, m in [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (2, 5), (5, 2)]:
            for bits in range(1 << (n * m)):
                rows = tuple((bits >> (i * m)) & ((1 << m) - 1) for i in range(n))
                matrix = SideInfoMatrix(n, m, rows)
                assert solve_exhaustive(matrix).value == max_clique_bruteforce(matrix)

    def test_matches_definition_optimum_random(self):
        rng = np.random.default_rng(17)
        for _ in range(300):
            n, m = int(rng.integers(1, 6)), int(rng.integers(1, 6))
            matrix = SideInfoMatrix.from_rows(
                (rng.random((n, m)) < rng.uniform(0.1, 0.9)).astype(int).tolist()
            )
            assert solve_exhaustive(matrix).value == definition_optimum(matrix)


class TestX3c:
    def test_membership_matrix(self):
        inst = X3cInstance.of(1, [{1, 2, 3}, {1, 2, 3}])
        matrix = x3c_to_matrix(inst)
        assert (matrix.n, matrix.m) == (3, 2)
        assert all(row == 0b11 for row in matrix.rows)

    def test_membership_matrix_k2(self):
        inst = X3cInstance.of(2, [{1, 2, 3}, {4, 5, 6}, {1, 4, 5}])
        matrix = x3c_to_matrix(inst)
        cols = [[1 if matrix.wants(i, j) else 0 for i in range(1, 7)] for j in (1, 2, 3)]
        assert cols == [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1], [1, 0, 0, 1, 1, 0]]

    def test_column_sums_always_three(self):
        rng = np.random.default_rng(23)
        for _ in range(50):
            k = int(rng.integers(1, 4))
            ell = int(rng.integers(k + 1, 8))
            sets = [rng.choice(3 * k, size=3, replace=False) + 1 for _ in range(ell)]
            matrix = x3c_to_matrix(X3cInstance.of(k, [set(map(int, s)) for s in sets]))
            assert all(matrix.column_count(j) == 3 for j in range(1, matrix.m + 1))

    def test_rejects_bad_sets(self):
        with pytest.raises(ValueError):
            X3cInstance.of(1, [{1, 2, 3}, {1, 2, 4}])  # element 4 outside [1..3]
        with pytest.raises(ValueError):
            X3cInstance.of(1, [{1, 2}])  # wrong size and too few sets
        with pytest.raises(ValueError):
            X3cInstance.of(2, [{1, 2, 3}, {1, 2, 6}])  # needs more than k sets

    def test_check_reduction_positive(self):
        inst = X3cInstance.of(2, [{1, 2, 3}, {4, 5, 6}, {1, 4, 5}])
        assert check_reduction(inst) == (True, True)

    def test_check_reduction_negative(self):
        inst = X3cInstance.of(2, [{1, 2, 3}, {1, 2, 4}, {1, 2, 5}])
        assert check_reduction(inst) == (False, False)

    def test_check_reduction_guard(self):
        sets = [frozenset({1, 2, 3})] * 14
        with pytest.raises(ResourceLimitError):
            check_reduction(X3cInstance(5, tuple(frozenset(s) for s in sets)))

    def test_has_exact_cover_requires_partition(self):
        # every pair of sets overlaps, so two sets can never cover 6 elements
        inst = X3cInstance.of(2, [{1, 2, 3}, {1, 4, 5}, {2, 4, 6}])
        assert not has_exact_cover(inst)

    def test_duplicate_sets_allowed(self):
        inst = X3cInstance.of(1, [{1, 2, 3}, {1, 2, 3}])
        assert has_exact_cover(inst)

    def test_text_round_trip(self):
        inst = X3cInstance.of(2, [{1, 2, 3}, {4, 5, 6}, {1, 4, 5}])
        assert x3c_from_text(x3c_to_text(inst)) == inst

    def test_fixture_file(self, fixtures_dir):
        inst = x3c_from_text((fixtures_dir / "cover_k2.txt").read_text())
        assert inst.k == 2 and len(inst.sets) == 3

    @pytest.mark.parametrize(
        "text,line",
        [
            ("", 1),
            ("2\n", 1),
            ("1 2\n1 2 3\n", 3),
            ("1 2\n1 2\n1 2 3\n", 2),
            ("1 2\n1 2 x\n1 2 3\n", 2),
        ],
    )
    def test_parse_errors(self, text, line):
        with pytest.raises(ParseError) as err:
            x3c_from_text(text)
        assert err.value.line == line


def test_reduction_soundness_sample():
    """Random instances: the cover answer and the objective answer agree."""
    rng = np.random.default_rng(31)
    for _ in range(200):
        k = int(rng.integers(1, 4))
        ell = int(rng.integers(k + 1, 9))
        sets = [set(map(int, rng.choice(3 * k, size=3, replace=False) + 1)) for _ in range(ell)]
        a, b = check_reduction(X3cInstance.of(k, sets))
        assert a == b
