from lapspec.graphs import DumbbellParams, ThetaParams
from lapspec.reports import VerificationReport
from lapspec.verify import (dumbbell_parameter_grid, family_members,
                            member_charpoly, theta_parameter_grid,
                            verify_census, verify_cospectral_structure,
                            verify_deletion_suite, verify_determination,
                            verify_dumbbell_table, verify_family_values,
                            verify_generating_identity, verify_invariants_suite,
                            verify_recurrences, verify_special_values,
                            verify_theta_table, verify_within_family)


class TestFamilyEnumeration:
    def test_grids(self):
        assert dumbbell_parameter_grid(6) == [DumbbellParams(3, 0, 3)]
        assert dumbbell_parameter_grid(5) == []
        assert theta_parameter_grid(4) == [ThetaParams(1, 1, 0)]
        assert set(theta_parameter_grid(6)) == {ThetaParams(2, 1, 1),
                                                ThetaParams(2, 2, 0),
                                                ThetaParams(3, 1, 0)}

    def test_members_on_six_vertices(self):
        members = family_members(6)
        assert len(members) == 4
        assert all(g.n == 6 and g.m == 7 for g in members)
        params = {g.family for g in members}
        assert DumbbellParams(3, 0, 3) in params

    def test_members_carry_usable_params(self):
        for g in family_members(7):
            phi = member_charpoly(g)
            assert phi.degree == 7
            assert phi.coeff(7) == 1

    def test_below_range(self):
        assert family_members(3) == []


class TestSuitesPass:
    def test_recurrences(self):
        report = verify_recurrences(path_n_max=10, p_max=4, k_max=1, r_max=3)
        assert report.passed
        assert report.counts["dumbbells"] == 4 * 2  # ordered pairs from {3,4}, two k

    def test_special_values(self):
        assert verify_special_values(n_max=50).passed

    def test_generating_identity(self):
        report = verify_generating_identity(r_max=12)
        assert report.passed and report.counts["checked"] == 13

    def test_dumbbell_table(self):
        report = verify_dumbbell_table(p_max=5, k_max=1)
        assert report.passed
        assert report.counts["table_mismatched_tuples"] == 0
        assert all(item["table_matches"] for item in report.details["tuples"])

    def test_theta_table_flags_known_bad_term(self):
        report = verify_theta_table(r_max=3)
        assert report.passed  # the two computational routes agree everywhere
        assert report.counts["table_mismatched_tuples"] == report.counts["tuples"]
        for item in report.details["tuples"]:
            assert not item["table_matches"]
            assert len(item["diffs"]) == 1

    def test_family_values(self):
        assert verify_family_values(p_max=5, k_max=1, r_max=3).passed

    def test_deletion(self):
        report = verify_deletion_suite(family_n_max=7, samples=10, sample_n_max=6)
        assert report.passed
        assert report.counts["vertex_checks"] > report.counts["family_members"]

    def test_invariants(self):
        assert verify_invariants_suite(samples=30, n_max=7).passed

    def test_within_family(self):
        report = verify_within_family(n_max=10)
        assert report.passed
        assert report.counts["members"] == sum(
            len(family_members(n)) for n in range(4, 11))


class TestPoolSuites:
    def test_determination_small(self, bicyclic_pool):
        report = verify_determination(6)
        assert report.passed
        assert report.counts["members"] == 4
        assert report.counts["pool"] == len(bicyclic_pool(6))
        assert {"family": "dumbbell", "p": 3, "k": 0, "q": 3} in report.details["members"]

    def test_structure_small(self):
        report = verify_cospectral_structure(6)
        assert report.passed
        assert report.counts["profile_graphs"] == report.counts["members"] == 4
        assert report.counts["cospectral_hits"] == 4

    def test_census_small(self):
        report = verify_census(n_max=5)
        assert report.passed
        assert report.details["totals"] == {"0": 1, "1": 1, "2": 2, "3": 4,
                                            "4": 11, "5": 34}


class TestReportHygiene:
    def test_deterministic_modulo_timing(self):
        a = verify_generating_identity(r_max=8)
        b = verify_generating_identity(r_max=8)
        assert a.without_timing() == b.without_timing()

    def test_seeded_suites_are_reproducible(self):
        a = verify_invariants_suite(samples=10, n_max=6, seed=7)
        b = verify_invariants_suite(samples=10, n_max=6, seed=7)
        assert a.without_timing() == b.without_timing()

    def test_json_round_trip(self):
        report = verify_theta_table(r_max=2)
        again = VerificationReport.from_json(report.to_json())
        assert again == report

    def test_parameters_recorded(self):
        report = verify_deletion_suite(family_n_max=6, samples=3,
                                       sample_n_max=5, seed=123)
        assert report.parameters["seed"] == 123
        assert report.parameters["samples"] == 3
