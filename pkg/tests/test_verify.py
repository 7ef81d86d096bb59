from treelabel import (
    SchemeParams,
    TreeFamilySpec,
    assign_intervals,
    check_label_budget,
    check_lpo,
    check_scheme_vs_oracle,
    decorate,
    generate_tree,
    mark_details,
    parse_parent_array,
)


def test_check_lpo_passes_on_e5(e5, params8):
    d = decorate(e5)
    report = check_lpo(d, assign_intervals(d, params8), params8)
    assert report.passed, report.to_text()


def test_check_lpo_detects_swapped_intervals(e5, params8):
    # Swapping nodes 2 and 3 breaks LPO2: 2 is a quasi-ancestor of 3.
    d = decorate(e5)
    mapping = dict(assign_intervals(d, params8))
    mapping[2], mapping[3] = mapping[3], mapping[2]
    report = check_lpo(d, mapping, params8)
    failed = [c for c in report.checks if not c.passed]
    assert failed
    lpo2 = next(c for c in report.checks if c.name == "lpo2-precedence")
    assert not lpo2.passed
    assert "2" in lpo2.detail and "3" in lpo2.detail


def test_check_lpo_single_node_vacuous():
    params = SchemeParams.for_family_size(2)
    d = decorate(parse_parent_array("1\n-1"))
    assert check_lpo(d, assign_intervals(d, params), params).passed


def test_check_lpo_detects_duplicates(e5, params8):
    d = decorate(e5)
    mapping = dict(assign_intervals(d, params8))
    mapping[4] = mapping[3]
    report = check_lpo(d, mapping, params8)
    assert not next(c for c in report.checks if c.name == "one-to-one").passed


def test_scheme_vs_oracle_exhaustive(e5, params8):
    report = check_scheme_vs_oracle(e5, "optimal", params8)
    assert report.passed
    assert report.stats["pairs_tested"] == 25


def test_scheme_vs_oracle_sampled_broom():
    tree = generate_tree(TreeFamilySpec("broom", 1001, path_count=10, path_length=100))
    params = SchemeParams.for_family_size(1 << 10)
    report = check_scheme_vs_oracle(
        tree, "optimal", params, pair_budget=5000, chain_budget=5000, seed=3
    )
    assert report.passed, report.to_text()


def test_scheme_vs_oracle_classic(e5):
    params = SchemeParams.for_family_size(8)
    assert check_scheme_vs_oracle(e5, "classic", params).passed


def test_corrupted_labels_caught_with_counterexample(e5, params8):
    # nodes 2 and 3 are not interchangeable (3 has ancestor 1, 2 does not)
    labels = dict(mark_details(e5, params8).labels)
    labels[2], labels[3] = labels[3], labels[2]
    report = check_scheme_vs_oracle(e5, "optimal", params8, labels=labels)
    assert not report.passed
    detail = next(c for c in report.checks if not c.passed).detail
    assert "pair" in detail


def test_shrinker_reduces_counterexample(params8):
    # A path of 5 with labels corrupted at the far end shrinks below 5 nodes.
    tree = parse_parent_array("5\n-1 0 1 2 3")
    labels = dict(mark_details(tree, params8).labels)
    labels[0], labels[4] = labels[4], labels[0]
    report = check_scheme_vs_oracle(tree, "optimal", params8, labels=labels)
    assert not report.passed


def test_label_budget(e5, params8):
    res = mark_details(e5, params8)
    report = check_label_budget(res.labels, params8, res.layout)
    assert report.passed
    assert report.stats["max_observed_t"] <= 4 * params8.ell - 1
    assert report.stats["t_field_limit"] == (1 << (params8.lam + 3)) - 1


def test_report_rendering(e5, params8):
    d = decorate(e5)
    report = check_lpo(d, assign_intervals(d, params8), params8)
    text = report.to_text()
    assert "PASS" in text and "lpo1-nesting" in text
    rows = report.csv_rows()
    assert all(status == "pass" for _, status, _ in rows)
